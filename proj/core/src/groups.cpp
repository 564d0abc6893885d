#include "spinlocal/groups.hpp"

#include <stdexcept>

namespace spinlocal {

std::string to_string(GroupTag t) {
  switch (t) {
    case GroupTag::GSp6: return "GSp6";
    case GroupTag::GSp4: return "GSp4";
    case GroupTag::GL3: return "GL3";
    case GroupTag::GL2: return "GL2";
    case GroupTag::GL2LStar: return "GL2L*";
  }
  return "?";
}

LMat zero_matrix(unsigned p, std::size_t r, std::size_t c) { return LMat(r, c, LocalScalar(0L, p)); }

LMat identity_matrix(unsigned p, std::size_t n) {
  return LMat::identity(n, LocalScalar(1L, p), LocalScalar(0L, p));
}

LMat diagonal(unsigned p, const std::vector<mpq_class>& d) {
  LMat m = zero_matrix(p, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = LocalScalar(d[i], p);
  return m;
}

LMat block_diag(const LMat& a, const LMat& b) {
  unsigned p = a(0, 0).prime();
  LMat m = zero_matrix(p, a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

LMat siegel_S(unsigned p) {
  LMat s = zero_matrix(p, 3, 3);
  s(0, 2) = LocalScalar(1L, p);
  s(1, 0) = LocalScalar(1L, p);
  s(2, 1) = LocalScalar(1L, p);
  return s;
}

LMat J6(unsigned p) {
  LMat j = zero_matrix(p, 6, 6);
  LMat s = siegel_S(p);
  j.set_block(0, 3, s);
  j.set_block(3, 0, LocalScalar(-1L, p) * s.transpose());
  return j;
}

LMat J4(unsigned p) {
  LMat j = zero_matrix(p, 4, 4);
  for (int i = 0; i < 2; ++i) {
    j(i, i + 2) = LocalScalar(1L, p);
    j(i + 2, i) = LocalScalar(-1L, p);
  }
  return j;
}

namespace {

LMat form_for(const LMat& g) {
  unsigned p = g(0, 0).prime();
  if (g.rows() == 6 && g.cols() == 6) return J6(p);
  if (g.rows() == 4 && g.cols() == 4) return J4(p);
  throw std::invalid_argument("symplectic check needs a 4x4 or 6x6 matrix");
}

}  // namespace

bool is_symplectic(const LMat& g, const LocalScalar& nu) {
  LMat J = form_for(g);
  return g * J * g.transpose() == nu * J;
}

LocalScalar similitude(const LMat& g) {
  LMat J = form_for(g);
  LMat x = g * J * g.transpose();
  LocalScalar nu = x(0, g.cols() == 6 ? 5 : 2);
  if (!(x == nu * J)) throw std::domain_error("matrix is not a symplectic similitude");
  return nu;
}

void GroupElement::validate(const EtaleQuadratic* L) const {
  auto need_size = [&](std::size_t n) {
    if (g.rows() != n || g.cols() != n)
      throw std::domain_error(to_string(tag) + ": wrong matrix size");
  };
  switch (tag) {
    case GroupTag::GSp6:
      need_size(6);
      if (!is_symplectic(g, nu)) throw std::domain_error("GSp6: g J g^T != nu J");
      break;
    case GroupTag::GSp4:
      need_size(4);
      if (!is_symplectic(g, nu)) throw std::domain_error("GSp4: g J g^T != nu J");
      break;
    case GroupTag::GL2LStar:
      need_size(4);
      if (!is_symplectic(g, nu)) throw std::domain_error("GL2L*: g J g^T != nu J");
      if (!L || !in_gl2l_star(*L, g)) throw std::domain_error("GL2L*: does not commute with sqrt(D)");
      break;
    case GroupTag::GL3:
      need_size(3);
      if (determinant(g).is_zero()) throw std::domain_error("GL3: singular");
      break;
    case GroupTag::GL2:
      need_size(2);
      if (determinant(g).is_zero()) throw std::domain_error("GL2: singular");
      break;
  }
}

LMat SiegelLevi::A() const {
  LMat S = siegel_S(prime());
  return nu * (S * inverse(B).transpose() * S.transpose());
}

LMat SiegelLevi::full() const { return block_diag(A(), B); }

SiegelLevi siegel_from_A(const LMat& A, const LocalScalar& nu) {
  LMat S = siegel_S(nu.prime());
  return {nu * (S.transpose() * inverse(A).transpose() * S), nu};
}

SiegelLevi siegel_from_full(const LMat& g) {
  if (g.rows() != 6) throw std::invalid_argument("siegel_from_full: need 6x6");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 6; ++j)
      if (!g(i, j).is_exact_zero() || !g(j, i).is_exact_zero())
        throw std::domain_error("siegel_from_full: off-diagonal blocks are nonzero");
  LocalScalar nu = similitude(g);
  return {g.block(3, 3, 3, 3), nu};
}

SiegelLevi build_iota(const EtaleQuadratic& L, const LocalScalar& t, const QuadElement& l) {
  unsigned p = L.prime();
  LMat B = zero_matrix(p, 3, 3);
  B.set_block(0, 0, m_ell(L, l));
  B(2, 2) = LocalScalar(1L, p);
  return {B, t};
}

SiegelLevi iota_class(const EtaleQuadratic& L, int r, const EllClass& c) {
  return build_iota(L, LocalScalar(qpow(L.prime(), r), L.prime()), ell_element(L, c));
}

SiegelLevi tau(unsigned p) { return {diagonal(p, {p, 1, p}), LocalScalar(long(p), p)}; }

SiegelLevi central(unsigned p, int k) {
  return {LocalScalar(qpow(p, k), p) * identity_matrix(p, 3), LocalScalar(qpow(p, 2 * k), p)};
}

SiegelLevi lower_p(unsigned p) { return {diagonal(p, {p, p, p}), LocalScalar(long(p), p)}; }
SiegelLevi upper_p(unsigned p) { return {identity_matrix(p, 3), LocalScalar(long(p), p)}; }
SiegelLevi iota_shift_up(unsigned p) { return {diagonal(p, {p, p, 1}), LocalScalar(long(p), p)}; }
SiegelLevi iota_shift_down(unsigned p) { return {diagonal(p, {1, 1, p}), LocalScalar(long(p), p)}; }

SiegelLevi hecke_T(const LMat& u) {
  unsigned p = u(0, 0).prime();
  LocalScalar pp(long(p), p);
  LMat B = zero_matrix(p, 3, 3);
  B.set_block(0, 0, pp * inverse(u).transpose());
  B(2, 2) = pp;
  return {B, pp};
}

SiegelLevi hecke_Tprime(const LMat& u) {
  unsigned p = u(0, 0).prime();
  LocalScalar pp(long(p), p);
  LMat B = zero_matrix(p, 3, 3);
  B.set_block(0, 0, pp * inverse(u).transpose());
  B(2, 2) = LocalScalar(1L, p);
  return {B, pp};
}

LMat embed_gl2_gsp4(const LMat& g1, const LMat& g2) {
  if (g1.rows() != 2 || g2.rows() != 4) throw std::invalid_argument("embed_gl2_gsp4: sizes");
  LocalScalar nu = similitude(g2);
  if (!determinant(g1).equals(nu)) throw std::domain_error("embed_gl2_gsp4: det(g1) != nu(g2)");
  unsigned p = g1(0, 0).prime();
  LMat g = zero_matrix(p, 6, 6);
  g(0, 0) = g1(0, 0);
  g(0, 5) = g1(0, 1);
  g(5, 0) = g1(1, 0);
  g(5, 5) = g1(1, 1);
  g.set_block(1, 1, g2);
  return g;
}

LMat sqrtD_matrix(const EtaleQuadratic& L) {
  unsigned p = L.prime();
  LMat m = zero_matrix(p, 4, 4);
  LocalScalar one(1L, p), d(L.disc(), p);
  m(0, 1) = one;
  m(1, 0) = d;
  m(2, 3) = d;
  m(3, 2) = one;
  return m;
}

bool in_gl2l_star(const EtaleQuadratic& L, const LMat& g4) {
  LMat s = sqrtD_matrix(L);
  return g4 * s == s * g4;
}

LMat siegel_unipotent(const LMat& Z) {
  unsigned p = Z(0, 0).prime();
  LMat n = identity_matrix(p, 6);
  n.set_block(0, 3, Z * siegel_S(p));
  return n;
}

LMat n_v(unsigned p, const LocalScalar& v1, const LocalScalar& v2) {
  LMat B = identity_matrix(p, 3);
  B(0, 2) = -v1;
  B(1, 2) = -v2;
  return SiegelLevi{B, LocalScalar(1L, p)}.full();
}

LMat n_u(const LMat& u) {
  unsigned p = u(0, 0).prime();
  LMat Z = zero_matrix(p, 3, 3);
  Z.set_block(1, 1, u);
  return siegel_unipotent(Z);
}

bool in_unipotent_R(const LMat& n) {
  if (n.rows() != 6) return false;
  static const int block[6] = {0, 1, 1, 2, 2, 3};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const LocalScalar& x = n(i, j);
      if (block[i] > block[j] && x.value() != 0) return false;
      if (block[i] == block[j]) {
        LocalScalar want(i == j ? 1L : 0L, x.prime());
        if (!x.equals(want)) return false;
      }
    }
  return is_symplectic(n, LocalScalar(1L, n(0, 0).prime()));
}

LocalScalar chi_exponent(const LMat& n, long D) {
  if (!in_unipotent_R(n)) throw std::domain_error("chi_exponent: element is not in U_R");
  LocalScalar d(D, n(0, 0).prime());
  return n(0, 1) - d * n(1, 3) + n(2, 4);
}

}  // namespace spinlocal

#include "spinlocal/modulus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace spinlocal {

namespace {

int64_t ip(unsigned p, int e) {
  int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

mpq_class abs_p(const LocalScalar& x) { return qpow(x.prime(), -x.valuation()); }

LocalScalar read(const LMat& X, const LieCoordinate& c) {
  return LocalScalar(c.scale, X(0, 0).prime()) * X(c.i, c.j);
}

// Projection of E(i, j) onto the Lie algebra {X : X J + J X^T = 0}.
LMat sp_element(const LMat& J, int i, int j) {
  unsigned p = J(0, 0).prime();
  LMat E = zero_matrix(p, J.rows(), J.cols());
  E(i, j) = LocalScalar(1L, p);
  LMat X = E + LocalScalar(-1L, p) * (J * E.transpose() * inverse(J));
  LMat check = X * J + J * X.transpose();
  for (std::size_t a = 0; a < check.rows(); ++a)
    for (std::size_t b = 0; b < check.cols(); ++b)
      if (!check(a, b).is_exact_zero()) throw std::logic_error("sp_element: not in the Lie algebra");
  return X;
}

void sp_basis(const LMat& J, const std::vector<std::pair<int, int>>& pos, std::vector<LMat>& basis,
              std::vector<LieCoordinate>& coords) {
  basis.clear();
  coords.clear();
  for (auto [i, j] : pos) {
    LMat X = sp_element(J, i, j);
    mpq_class s = X(i, j).value();
    basis.push_back(LocalScalar(1 / s, J(0, 0).prime()) * X);
    coords.push_back({i, j, 1});
  }
}

// Number of X in (Z/p^e)^d with A X = 0 mod p^e, A an integer matrix mod p^e.
// Solutions mod p^{j+1} are enumerated as lifts X + p^j delta of solutions mod p^j.
uint64_t count_kernel(const std::vector<std::vector<int64_t>>& A, int e, unsigned p) {
  const std::size_t d = A.size();
  uint64_t digits = 1;
  for (std::size_t k = 0; k < d; ++k) digits *= p;
  std::vector<std::vector<int64_t>> sols{std::vector<int64_t>(d, 0)};
  int64_t pj = 1;
  for (int j = 0; j < e; ++j) {
    const int64_t pj1 = pj * p;
    std::vector<std::vector<int64_t>> next;
    for (const auto& s : sols)
      for (uint64_t code = 0; code < digits; ++code) {
        std::vector<int64_t> X = s;
        uint64_t c = code;
        for (std::size_t k = 0; k < d; ++k, c /= p) X[k] += pj * static_cast<int64_t>(c % p);
        bool ok = true;
        for (std::size_t r = 0; r < d && ok; ++r) {
          int64_t t = 0;
          for (std::size_t k = 0; k < d; ++k) t = (t + (A[r][k] % pj1) * X[k]) % pj1;
          ok = t == 0;
        }
        if (ok) next.push_back(std::move(X));
      }
    sols = std::move(next);
    pj = pj1;
  }
  return sols.size();
}

// p^e M restricted to the component, as residues mod p^e, with e the smallest making it integral.
std::vector<std::vector<int64_t>> scaled_residues(const LMat& M, const std::vector<std::size_t>& comp, int& e) {
  e = 0;
  for (auto r : comp)
    for (auto c : comp)
      if (!M(r, c).is_zero()) e = std::max(e, -M(r, c).valuation());
  unsigned p = M(0, 0).prime();
  LocalScalar pe(qpow(p, e), p);
  std::vector<std::vector<int64_t>> A(comp.size(), std::vector<int64_t>(comp.size(), 0));
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t b = 0; b < comp.size(); ++b)
      if (e > 0) A[a][b] = (pe * M(comp[a], comp[b])).residue_mod(e).get_num().get_si();
  return A;
}

}  // namespace

mpq_class modulus_R(const SiegelLevi& g) {
  const LMat& B = g.B;
  for (int i = 0; i < 2; ++i)
    if (!B(i, 2).is_exact_zero() || !B(2, i).is_exact_zero())
      throw std::invalid_argument("modulus_R: lower block is not diag(y, z)");
  LMat y = zero_matrix(g.prime(), 2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) y(i, j) = B(i, j);
  const unsigned p = g.prime();
  return qpow(p, -6 * g.nu.valuation() + 6 * B(2, 2).valuation() + 3 * determinant(y).valuation());
}

mpq_class modulus_P4(const LocalScalar& nu, const LMat& y) {
  mpq_class n = abs_p(nu), d = abs_p(determinant(y));
  return n * n * n / (d * d * d);
}

mpq_class modulus_BL(const EtaleQuadratic& L, const LocalScalar& t, const QuadElement& l) {
  mpq_class a = abs_p(t), n = abs_p(norm(L, l));
  return a * a * a / (n * n);
}

mpq_class modulus_bruteforce(const LMat& m, const std::vector<LMat>& basis,
                             const std::vector<LieCoordinate>& coords, unsigned p) {
  const std::size_t d = basis.size();
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l)
      if (!read(basis[k], coords[l]).equals(LocalScalar(k == l ? 1L : 0L, p)))
        throw std::logic_error("modulus_bruteforce: coordinates are not dual to the basis");
  LMat minv = inverse(m);
  LMat M = zero_matrix(p, d, d);
  for (std::size_t k = 0; k < d; ++k) {
    LMat Y = m * basis[k] * minv;
    LMat rebuilt = zero_matrix(p, m.rows(), m.cols());
    for (std::size_t l = 0; l < d; ++l) {
      M(l, k) = read(Y, coords[l]);
      rebuilt = rebuilt + M(l, k) * basis[l];
    }
    if (!(rebuilt == Y)) throw std::logic_error("modulus_bruteforce: Ad(m) leaves the span");
  }
  LMat Minv = inverse(M);
  // Ad(m)-stable coordinate blocks.
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (!M(a, b).is_zero() || !Minv(a, b).is_zero()) parent[find(a)] = find(b);
  mpq_class result = 1;
  for (std::size_t root = 0; root < d; ++root) {
    std::vector<std::size_t> comp;
    for (std::size_t a = 0; a < d; ++a)
      if (find(a) == root) comp.push_back(a);
    if (comp.empty()) continue;
    int e1 = 0, e2 = 0;
    auto A1 = scaled_residues(Minv, comp, e1);
    auto A2 = scaled_residues(M, comp, e2);
    // Kernels mod p^N have k_i p^{(N - e_i) d} elements; N cancels in the ratio.
    uint64_t c1 = count_kernel(A1, e1, p), c2 = count_kernel(A2, e2, p);
    result *= mpq_class(mpz_class(static_cast<unsigned long>(c1)), mpz_class(static_cast<unsigned long>(c2))) *
              qpow(p, (e2 - e1) * static_cast<int>(comp.size()));
  }
  result.canonicalize();
  return result;
}

void unipotent_R_basis(unsigned p, std::vector<LMat>& basis, std::vector<LieCoordinate>& coords) {
  sp_basis(J6(p), {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}, {0, 5}}, basis, coords);
}

void unipotent_P4_basis(unsigned p, std::vector<LMat>& basis, std::vector<LieCoordinate>& coords) {
  sp_basis(J4(p), {{0, 2}, {0, 3}, {1, 3}}, basis, coords);
}

void unipotent_BL_basis(const EtaleQuadratic& L, bool with_gl2, std::vector<LMat>& basis,
                        std::vector<LieCoordinate>& coords) {
  const unsigned p = L.prime();
  basis.clear();
  coords.clear();
  if (with_gl2) {
    LMat b = zero_matrix(p, 6, 6);
    b(0, 5) = LocalScalar(1L, p);
    basis.push_back(b);
    coords.push_back({0, 5, 1});
  }
  // n_l = (1/2) [[x/D, y], [y, x]] in the Siegel unipotent of GSp4, rows 1-2 and columns 3-4.
  const mpq_class D = L.disc();
  for (int k = 0; k < 2; ++k) {
    LMat n = zero_matrix(p, 6, 6);
    if (k == 0) {
      n(1, 3) = LocalScalar(1 / (2 * D), p);
      n(2, 4) = LocalScalar(mpq_class(1, 2), p);
    } else {
      n(1, 4) = LocalScalar(mpq_class(1, 2), p);
      n(2, 3) = LocalScalar(mpq_class(1, 2), p);
    }
    basis.push_back(n);
  }
  coords.push_back({2, 4, 2});
  coords.push_back({1, 4, 2});
}

mpq_class modulus_R_bruteforce(const SiegelLevi& g) {
  std::vector<LMat> basis;
  std::vector<LieCoordinate> coords;
  unipotent_R_basis(g.prime(), basis, coords);
  return modulus_bruteforce(g.full(), basis, coords, g.prime());
}

mpq_class modulus_P4_bruteforce(const LocalScalar& nu, const LMat& y) {
  unsigned p = nu.prime();
  LMat m = block_diag(nu * inverse(y).transpose(), y);
  if (!is_symplectic(m, nu)) throw std::logic_error("modulus_P4_bruteforce: not in GSp4");
  std::vector<LMat> basis;
  std::vector<LieCoordinate> coords;
  unipotent_P4_basis(p, basis, coords);
  return modulus_bruteforce(m, basis, coords, p);
}

mpq_class modulus_BL_bruteforce(const EtaleQuadratic& L, const LocalScalar& t, const QuadElement& l,
                                bool with_gl2) {
  std::vector<LMat> basis;
  std::vector<LieCoordinate> coords;
  unipotent_BL_basis(L, with_gl2, basis, coords);
  return modulus_bruteforce(build_iota(L, t, l).full(), basis, coords, L.prime());
}

}  // namespace spinlocal

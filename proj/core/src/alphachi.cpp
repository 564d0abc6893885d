#include "spinlocal/alphachi.hpp"

#include <algorithm>
#include <stdexcept>

#include "spinlocal/cyclotomic.hpp"

namespace spinlocal {

namespace {

int64_t ip(unsigned p, int e) {
  int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// Coefficients a_ij (i < j) of an alternating 4x4 matrix.
std::vector<LocalScalar> wedge_coords(const LMat& A) {
  std::vector<LocalScalar> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) out.push_back(A(i, j));
  return out;
}

// Zero up to the working precision counts as zero (entries of m_l carry truncated sqrt D).
bool vanishes(const LocalScalar& x) {
  try {
    return x.is_zero();
  } catch (const PrecisionExhausted&) {
    return true;
  }
}

}  // namespace

LMat gl2l_torus(const EtaleQuadratic& L, const LocalScalar& t, const QuadElement& l) {
  LMat m = m_ell(L, l);
  return block_diag(t * inverse(m).transpose(), m);
}

mpq_class alpha_chi_closed(const EtaleQuadratic& L, const LocalScalar& t, const QuadElement& l) {
  int vt = t.valuation(), vl = norm_valuation(L, l);
  if (vt < vl) return 0;
  return qpow(L.prime(), vl - vt);
}

mpq_class alpha_chi_bruteforce(const EtaleQuadratic& L, const LMat& m) {
  const unsigned p = L.prime();
  LocalScalar nu = similitude(m);
  LocalScalar nu_inv = nu.inverse();
  // v_D as an alternating matrix in the basis e1, e2, f1, f2.
  LMat A = zero_matrix(p, 4, 4);
  LocalScalar d(L.disc(), p), one(1L, p);
  A(0, 3) = d;
  A(3, 0) = -d;
  A(1, 2) = one;
  A(2, 1) = -one;
  // u(c) = 1 + c E with E = E(1, 3) (u22 = c); v_D u(c) = A + c (E^T A + A E).
  LMat E = zero_matrix(p, 4, 4);
  E(1, 3) = one;
  LMat dA = E.transpose() * A + A * E;
  auto v0 = wedge_coords(nu_inv * (m.transpose() * A * m));
  auto w = wedge_coords(nu_inv * (m.transpose() * dA * m));
  // Support in p^{-S} Z_p; the indicator is constant on cosets of p^F Z_p.
  int S = 0, F = 0;
  bool moves = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (vanishes(w[i])) continue;
    moves = true;
    int base = vanishes(v0[i]) ? 0 : std::min(0, v0[i].valuation());
    S = std::max(S, w[i].valuation() - base);
    F = std::max(F, -w[i].valuation());
  }
  if (!moves) throw std::domain_error("alpha_chi_bruteforce: integrand independent of u");
  // Any c with v0 + c w integral has -val(c) <= S; c = j / p^S, j mod p^{S+F}.
  const int64_t count = ip(p, S + F);
  CharacterCounter counter(p, S);
  const LocalScalar step(qpow(p, -S), p);
  for (int64_t j = 0; j < count; ++j) {
    LocalScalar c = LocalScalar(j, p) * step;
    bool integral = true;
    for (std::size_t i = 0; i < w.size() && integral; ++i) integral = vanishes(w[i]) ? vanishes(v0[i]) || v0[i].is_integral() : (v0[i] + c * w[i]).is_integral();
    if (integral) counter.add(static_cast<uint64_t>(j % ip(p, S)));
  }
  return counter.value().rational() * qpow(p, -F);
}

}  // namespace spinlocal

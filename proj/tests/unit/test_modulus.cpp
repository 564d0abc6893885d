#include <doctest.h>

#include <random>

#include "spinlocal/modulus.hpp"

using namespace spinlocal;

namespace {

LMat random_y(unsigned p, std::mt19937& rng) {
  std::uniform_int_distribution<long> unit(1, 20);
  std::uniform_int_distribution<int> val(0, 2);
  for (;;) {
    LMat y = zero_matrix(p, 2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) y(i, j) = LocalScalar(qpow(p, val(rng)) * unit(rng), p);
    LocalScalar d = y(0, 0) * y(1, 1) - y(0, 1) * y(1, 0);
    if (!d.is_exact_zero() && d.valuation() <= 2) return y;
  }
}

}  // namespace

TEST_CASE("Modulus of R on iota elements and the Borel of H") {
  const unsigned p = 3;
  for (long D : {5L, 13L}) {
    EtaleQuadratic L(p, D, 20);
    for (int r = 0; r <= 2; ++r)
      for (int e1 = 0; e1 <= 2; ++e1)
        for (int e2 = 0; e2 <= (L.split() ? 2 : 0); ++e2) {
          QuadElement l = L.split() ? split_power(L, e1, e2) : inert_power(L, e1);
          LocalScalar t(qpow(p, r), p);
          SiegelLevi g = build_iota(L, t, l);
          CHECK(modulus_R(g) == modulus_R_bruteforce(g));
          CHECK(modulus_BL(L, t, l) == modulus_BL_bruteforce(L, t, l));
          // GL2,L* alone: |t|^2 |l|^{-2}.
          mpq_class n = qpow(p, norm_valuation(L, l)), a = qpow(p, -r);
          CHECK(modulus_BL_bruteforce(L, t, l, false) == a * a * n * n);
        }
  }
  EtaleQuadratic split(p, 13, 20);
  CHECK(modulus_R(build_iota(split, LocalScalar(3L, p), quad(split, 1))) == qpow(p, -6));
  CHECK(modulus_R(build_iota(split, LocalScalar(9L, p), split_power(split, 1, 0))) == qpow(p, -9));
}

TEST_CASE("Modulus of R and P4 on general Levi elements") {
  const unsigned p = 3;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(0, 2);
  std::uniform_int_distribution<long> unit(1, 2);
  for (int trial = 0; trial < 40; ++trial) {
    LMat y = random_y(p, rng);
    LocalScalar z(qpow(p, val(rng)) * unit(rng), p), w(qpow(p, val(rng)) * unit(rng), p);
    LMat B = zero_matrix(p, 3, 3);
    B.set_block(0, 0, y);
    B(2, 2) = z;
    SiegelLevi g{B, w * z};
    CHECK(modulus_R(g) == modulus_R_bruteforce(g));
    LocalScalar nu(qpow(p, val(rng)) * unit(rng), p);
    CHECK(modulus_P4(nu, y) == modulus_P4_bruteforce(nu, y));
  }
  LMat one = identity_matrix(p, 2);
  CHECK(modulus_P4(LocalScalar(3L, p), one) == qpow(p, -3));
  CHECK(modulus_P4_bruteforce(LocalScalar(3L, p), one) == qpow(p, -3));
  CHECK(modulus_R_bruteforce(SiegelLevi{identity_matrix(p, 3), LocalScalar(1L, p)}) == 1);
}

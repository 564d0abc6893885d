#include <doctest.h>

#include <random>

#include "spinlocal/cyclotomic.hpp"
#include "spinlocal/groups.hpp"
#include "spinlocal/hecke.hpp"
#include "spinlocal/quadratic.hpp"

using namespace spinlocal;

namespace {

bool same(const LMat& a, const LMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).equals(b(i, j))) return false;
  return true;
}

LMat diag6(unsigned p, std::initializer_list<long> d) {
  std::vector<mpq_class> v;
  for (long x : d) v.emplace_back(x);
  return diagonal(p, v);
}

}  // namespace

TEST_CASE("m_l for powers of the split uniformizers") {
  const unsigned p = 3;
  for (long D : {13L}) {
    EtaleQuadratic L(p, D, 16);
    LocalScalar h = L.h().to_scalar();
    for (int k = 1; k <= 3; ++k)
      for (int sign : {1, -1}) {
        CAPTURE(k);
        CAPTURE(sign);
        LocalScalar hs = sign > 0 ? h : -h;
        QuadElement l = sign > 0 ? split_power(L, k, 0) : split_power(L, 0, k);
        LMat m = m_ell(L, l);
        mpq_class pk = qpow(p, k);
        LMat expect = zero_matrix(p, 2, 2);
        expect(0, 0) = LocalScalar((pk + 1) / 2, p);
        expect(0, 1) = LocalScalar((pk - 1) / 2, p) * hs;
        expect(1, 0) = LocalScalar((pk - 1) / 2, p) * hs.inverse();
        expect(1, 1) = LocalScalar((pk + 1) / 2, p);
        CHECK(same(m, expect));
        LMat hnf = zero_matrix(p, 2, 2);
        hnf(0, 0) = LocalScalar(pk, p);
        hnf(0, 1) = -hs;
        hnf(1, 1) = LocalScalar(1L, p);
        CHECK(coset_key(m) == coset_key(hnf));
      }
  }
}

TEST_CASE("Translation identities for iota") {
  std::mt19937 rng(20240613);
  for (unsigned p : {3u, 5u})
    for (long D : {2L, 5L, 11L, 13L}) {
      if (legendre(D, p) == 0) continue;
      EtaleQuadratic L(p, D, 16);
      std::uniform_int_distribution<long> coord(-20, 20);
      std::uniform_int_distribution<int> expo(-3, 3);
      const LocalScalar P(long(p), p);
      const LMat scalar_p = diag6(p, {long(p), long(p), long(p), long(p), long(p), long(p)});
      for (int trial = 0; trial < 20; ++trial) {
        QuadElement l = quad(L, coord(rng), coord(rng));
        if (norm(L, l).is_exact_zero()) continue;
        LocalScalar t(qpow(p, expo(rng)) * (1 + p * coord(rng) * coord(rng)), p);
        if (t.is_exact_zero()) continue;
        LMat g = build_iota(L, t, l).full();
        const LocalScalar Pinv = P.inverse();
        CHECK(same(g * diag6(p, {1, 1, 1, long(p), long(p), long(p)}),
                   build_iota(L, t * Pinv, l).full() * scalar_p));
        CHECK(same(g * diag6(p, {long(p), long(p), long(p), 1, 1, 1}), build_iota(L, t * P, l).full()));
        CHECK(same(g * diag6(p, {long(p), 1, 1, long(p), long(p), 1}),
                   build_iota(L, t * P, scale(l, P)).full()));
        CHECK(same(g * diag6(p, {1, long(p), long(p), 1, 1, long(p)}),
                   build_iota(L, t * Pinv, scale(l, Pinv)).full() * scalar_p));
      }
    }
}

TEST_CASE("Fourier inversion against explicit character sums") {
  for (unsigned p : {3u, 5u})
    for (long D : {2L, 5L, 11L, 13L}) {
      if (legendre(D, p) == 0) continue;
      for (int n = 0; n <= 3; ++n)
        for (int e = -3; e <= 3; ++e)
          for (long u : {1L, 2L, long(p) + 1}) {
            mpq_class v = qpow(p, e) * u;
            for (bool twisted : {false, true}) {
              CAPTURE(p);
              CAPTURE(n);
              CAPTURE(e);
              CHECK(fourier_indicator(p, FourierDomain::Qp, v, 0, n, twisted) ==
                    fourier_indicator_bruteforce(p, D, FourierDomain::Qp, v, 0, n, twisted));
              CHECK(fourier_indicator(p, FourierDomain::L, v, v / 2, n, twisted) ==
                    fourier_indicator_bruteforce(p, D, FourierDomain::L, v, v / 2, n, twisted));
              CHECK(fourier_indicator(p, FourierDomain::L, 1 + v, v, n, twisted) ==
                    fourier_indicator_bruteforce(p, D, FourierDomain::L, 1 + v, v, n, twisted));
            }
          }
    }
  CHECK(fourier_indicator(3, FourierDomain::Qp, 1, 0, 0, false) == 1);
  CHECK(fourier_indicator(3, FourierDomain::Qp, mpq_class(1, 3), 0, 0, false) == 0);
  CHECK(fourier_indicator(3, FourierDomain::Qp, 4, 0, 1, true) == 1);
}

#include <doctest.h>

#include "spinlocal/lhs.hpp"
#include "spinlocal/rhs.hpp"

using namespace spinlocal;

namespace {

FormalSeries lam(const EtaleQuadratic& L, int q, const SiegelLevi& g, int w, const mpq_class& c) {
  FormalSeries s(L.disc());
  s.add_lambda(q, g, w, CyclotomicValue(1) * c);
  return s;
}

FormalSeries zeta_times(const EtaleQuadratic& L, const FormalSeries& s, int rmax) {
  FormalSeries out(L.disc());
  for (int k = 0; 2 * k <= rmax; ++k) out += s.shifted(2 * k, k).scaled(qpow(L.prime(), 6 * k));
  return out.truncated(rmax);
}

}  // namespace

TEST_CASE("Dirichlet series terms") {
  EtaleQuadratic L(3, 5, 16);
  FormalSeries d = evaluate(L, build_D_prime(L, 2));
  FormalSeries q0 = lam(L, 0, iota_class(L, 0, {0, 0}), 0, 1);
  CHECK(d.truncated(0) == q0);
  FormalSeries q2 = lam(L, 2, iota_class(L, 2, {0, 0}), 0, qpow(3, 12));
  q2 += lam(L, 2, iota_class(L, 2, {1, 0}), 0, qpow(3, 8));
  FormalSeries only2 = d;
  only2 -= d.truncated(1);
  CHECK(only2 == q2);

  // zeta factor on lambda(1): 1 + w p^6 q^2 + w^2 p^12 q^4.
  std::vector<IotaTerm> one{{0, 0, {0, 0}, 0, 1}};
  FormalSeries z = evaluate(L, times_zeta(L, one, 4));
  FormalSeries expect = q0;
  expect += lam(L, 2, iota_class(L, 0, {0, 0}), 1, qpow(3, 6));
  expect += lam(L, 4, iota_class(L, 0, {0, 0}), 2, qpow(3, 12));
  CHECK(z == expect);
}

TEST_CASE("Closed form examples") {
  EtaleQuadratic inert(3, 5, 16), split(3, 13, 16);
  CHECK(rhs_closed_form(inert, 0) == lam(inert, 0, iota_class(inert, 0, {0, 0}), 0, 1));
  FormalSeries r1 = rhs_closed_form(inert, 1);
  r1 -= rhs_closed_form(inert, 0);
  CHECK(r1 == lam(inert, 1, iota_class(inert, 1, {0, 0}), 0, qpow(3, 6)));
  FormalSeries s1 = rhs_closed_form(split, 1);
  s1 -= rhs_closed_form(split, 0);
  FormalSeries e1 = lam(split, 1, iota_class(split, 1, {0, 0}), 0, qpow(3, 6));
  e1 += lam(split, 1, iota_class(split, 1, {1, 0}), 0, qpow(3, 4));
  e1 += lam(split, 1, iota_class(split, 1, {0, 1}), 0, qpow(3, 4));
  CHECK(s1 == e1);
}

TEST_CASE("N(s) through the GL2 and GL3 reductions agree") {
  for (long D : {5L, 13L}) {
    EtaleQuadratic L(3, D, 16);
    auto d = build_D(L, 3);
    CHECK(apply_N(L, d, 3, Reduction::GL2) == apply_N(L, d, 3, Reduction::GL3));
  }
}

TEST_CASE("Zeta factor commutes with N") {
  for (long D : {5L, 13L}) {
    EtaleQuadratic L(3, D, 16);
    const int R = 4;
    FormalSeries a = zeta_times(L, apply_N(L, build_D_prime(L, R), R), R);
    CHECK(a == apply_N(L, build_D(L, R), R));
  }
}

TEST_CASE("Main identity") {
  for (long D : {5L, 13L}) {
    EtaleQuadratic L(3, D, 16);
    CHECK(verify_main_identity(L, 0).passed());
    VerificationReport rep = verify_main_identity(L, 4);
    for (const auto& c : rep.comparisons) {
      CAPTURE(c.name);
      CAPTURE(c.first_discrepancy);
      CHECK(c.equal);
    }
    CHECK(rep.opaque_symbols == 0);
    CHECK(rep.to_json()["status"] == "pass");
  }
}

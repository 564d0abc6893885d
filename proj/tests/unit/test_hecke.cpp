#include <doctest.h>

#include "spinlocal/hecke.hpp"
#include "spinlocal/hnf.hpp"
#include "spinlocal/symbols.hpp"

using namespace spinlocal;

namespace {

uint64_t ip(unsigned p, int e) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

TEST_CASE("GL coset representative counts") {
  for (unsigned p : {3u, 5u}) {
    CHECK(gl_coset_reps(p, {1, 0}).size() == p + 1);
    CHECK(gl_coset_reps(p, {1, 0, 0}).size() == 1 + p + p * p);
    CHECK(gl_coset_reps(p, {1, 1, 0}).size() == 1 + p + p * p);
    CHECK(gl_coset_reps(p, {0, 0, 0}).size() == 1);
    CHECK(gl_coset_reps(p, {1, 1, 1}).size() == 1);
  }
  CHECK(gl_coset_reps(3, {0, 1, 1}).size() == 13);
  CHECK(tp_matrices(3).size() == 4);
}

TEST_CASE("U(v~) sizes and integral conjugate representatives") {
  const unsigned p = 3;
  const std::vector<std::pair<std::vector<int>, uint64_t>> cases{
      {{0, 0, 0}, 1}, {{1, 0, 0}, p}, {{1, 1, 0}, p * p * p}, {{1, 1, 1}, ip(p, 6)}};
  for (const auto& [exps, size] : cases)
    for (const auto& v : gl_coset_reps(p, exps)) {
      CHECK(um_size(v, p) == size);
      CHECK(integral_conjugate_reps_exist(v, p));
    }
}

TEST_CASE("GSp6 coset counts at p = 3") {
  auto t03 = gsp6_coset_reps(3, HeckeOp::T03);
  CHECK(t03.size() == 1120);
  auto t33 = gsp6_coset_reps(3, HeckeOp::T33);
  CHECK(t33.size() == 1);
}

TEST_CASE("T23 coset count at p = 3") {
  const unsigned p = 3;
  auto t23 = gsp6_coset_reps(p, HeckeOp::T23);
  CHECK(t23.size() == p * (ip(p, 6) - 1) / (p - 1));
}

TEST_CASE("GL3 and GL2 reductions agree with raw GSp6 cosets") {
  const unsigned p = 3;
  auto t03 = gsp6_coset_reps(p, HeckeOp::T03);
  auto t23 = gsp6_coset_reps(p, HeckeOp::T23);
  for (long D : {5L, 13L}) {
    EtaleQuadratic L(p, D, 16);
    int nonzero = 0;
    for (int r = 0; r <= 2; ++r)
      for (const auto& l : support_classes(L, r)) {
        CAPTURE(D);
        CAPTURE(r);
        CAPTURE(l.e1);
        CAPTURE(l.e2);
        SiegelLevi g = iota_class(L, r, l);
        FormalSeries raw03 = apply_raw(D, g, t03), raw23 = apply_raw(D, g, t23);
        CHECK(gl3_T03(D, g) == raw03);
        CHECK(gl3_T23(D, g) == raw23);
        CHECK(gl2_T03(L, r, l) == raw03);
        CHECK(gl2_T23(L, r, l) == raw23);
        nonzero += !raw03.is_zero() + !raw23.is_zero();
      }
    CHECK(nonzero > 4);
  }
}

TEST_CASE("Unit constant of T23 by character sums") {
  const unsigned p = 3;
  for (long D : {5L, 13L}) {
    EtaleQuadratic L(p, D, 16);
    const long expected = D == 5 ? -36 : -18;
    for (int r = 0; r <= 2; ++r)
      for (const auto& l : support_classes(L, r)) {
        CyclotomicValue u = unit_sum(D, iota_class(L, r, l));
        REQUIRE(u.is_rational());
        mpq_class shift = u.rational() - (ip(p, 3) - 1);
        if (ell_norm_valuation(L, l) == r)
          CHECK(shift == expected);
        else
          CHECK(shift == 0);
      }
  }
}

TEST_CASE("T_p lemmas against the p + 1 term expansion") {
  const unsigned p = 3;
  const CyclotomicValue one(1);
  for (long D : {5L, 13L}) {
    EtaleQuadratic L(p, D, 16);
    const long d = L.disc();
    auto lam = [&](int r, EllClass l, int w) {
      FormalSeries s(d);
      s.add_lambda(0, iota_class(L, r, l), w, one);
      return s;
    };
    for (int r = 0; r <= 4; ++r) {
      CAPTURE(D);
      CAPTURE(r);
      // Vanishing one step below the extremal line.
      if (r >= 2)
        for (const auto& l : support_classes(L, r - 2)) {
          if (ell_norm_valuation(L, l) != r - 2) continue;
          EllClass pl = L.split() ? EllClass{l.e1 + 1, l.e2 + 1} : EllClass{l.e1 + 1, 0};
          CHECK(apply_Tp(d, iota_class(L, r - 1, pl)).is_zero());
        }
      // Trivial l gives the tau translate.
      FormalSeries tau_term(d);
      tau_term.add_lambda(0, iota_class(L, r, {0, 0}) * tau(p), 0, one);
      CHECK(apply_Tp(d, iota_class(L, r, {0, 0})) == tau_term);
      // Extremal l.
      for (const auto& l : support_classes(L, r)) {
        if (ell_norm_valuation(L, l) != r || r == 0) continue;
        FormalSeries expect(d);
        if (L.split()) {
          expect += lam(r - 1, {l.e1, l.e2 - 1}, 1);
          expect += lam(r - 1, {l.e1 - 1, l.e2}, 1);
        }
        CHECK(apply_Tp(d, iota_class(L, r, l)) == expect);
      }
      // Primed operator.
      for (const auto& l : support_classes(L, r)) {
        EllClass pl = L.split() ? EllClass{l.e1 + 1, l.e2 + 1} : EllClass{l.e1 + 1, 0};
        CHECK(apply_Tp(d, iota_class(L, r, l), true) ==
              apply_Tp(d, iota_class(L, r + 2, pl)).shifted(0, -1));
      }
      // Powers of a single prime above p.
      if (L.split())
        for (int k = 1; k <= 3; ++k) {
          CAPTURE(k);
          CHECK(apply_Tp(d, iota_class(L, r, {k, 0})) == lam(r - 1, {k - 1, 0}, 1));
          CHECK(apply_Tp(d, iota_class(L, r, {0, k})) == lam(r - 1, {0, k - 1}, 1));
        }
    }
  }
}

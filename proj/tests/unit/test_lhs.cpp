#include "doctest.h"

#include "spinlocal/lhs.hpp"

using namespace spinlocal;

TEST_CASE("g_{m,r} examples") {
  unsigned p = 3;
  RepresentativeM one{};
  auto g0 = siegel_levi_element(one, p, 0);
  CHECK(g0.full() == identity_matrix(p, 6));
  auto g1 = siegel_levi_element(one, p, 1);
  CHECK(g1.full() == diagonal(p, {3, 3, 3, 1, 1, 1}));
  RepresentativeM d{1, 0, 1, 0, 0, 0};
  auto g = siegel_levi_element(d, p, 1);
  CHECK(is_symplectic(g.full(), LocalScalar(9L, p)));
  CHECK(g.full()(0, 0).equals(LocalScalar(3L, p)));
}

TEST_CASE("lhs series matches the closed form at p = 3") {
  for (long D : {5L, 13L}) {
    EtaleQuadratic L(3, D, 20);
    SymbolTable table(L, 4);
    auto brute = lhs_series(L, 3);
    auto closed = lhs_closed_form(L, 3);
    auto diff = brute;
    diff -= closed;
    CAPTURE(D);
    CAPTURE(diff.str(table));
    CHECK(diff.is_zero());
  }
}

TEST_CASE("integral C brute force") {
  for (long D : {5L, 13L}) {
    bool split = D == 13;
    for (const auto& m : enumerate_M(3, 2, 2, 2)) {
      auto rec = admissible_classify(m, 3, D, split);
      if (!rec.admissible || m.a == 0) continue;
      for (int r = 0; r <= 3; ++r) {
        CAPTURE(m.str());
        CAPTURE(r);
        CHECK(integral_C_bruteforce(rec, 3, r) == integral_C(rec, r));
      }
    }
  }
}

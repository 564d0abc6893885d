#include "doctest.h"

#include "spinlocal/symbols.hpp"

using namespace spinlocal;

namespace {

void check_support(long D) {
  EtaleQuadratic L(3, D, 16);
  SymbolTable table(L, 5);
  CHECK(table.collisions().empty());
  for (const auto& c : table.collisions()) MESSAGE(c);
  for (int r = 0; r <= 5; ++r)
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= (L.split() ? 4 : 0); ++b) {
        EllClass cl{a, b};
        auto can = canonicalize(iota_class(L, r, cl), D);
        bool in_support = ell_norm_valuation(L, cl) <= r;
        CAPTURE(r);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(can.vanishes == !in_support);
        if (in_support) CHECK(table.known(can.key));
      }
}

}  // namespace

TEST_CASE("iota symbols vanish exactly off the support") {
  check_support(5);
  check_support(13);
}

TEST_CASE("tau symbols are labelled and vanish only at r = 0") {
  for (long D : {5L, 13L}) {
    EtaleQuadratic L(3, D, 16);
    SymbolTable table(L, 5);
    for (int r = 0; r <= 4; ++r) {
      auto c = canonicalize(iota_class(L, r, {0, 0}) * tau(3), D);
      CHECK(c.vanishes == (r == 0));
      if (!c.vanishes) CHECK(table.label(c.key) == "IotaTau(" + std::to_string(r) + ";1)");
    }
  }
}

TEST_CASE("canonical form is invariant under right integral Levi elements") {
  EtaleQuadratic L(3, 13, 16);
  auto g = iota_class(L, 3, {1, 1});
  LMat k = identity_matrix(3, 3);
  k(0, 1) = LocalScalar(2L, 3);
  k(2, 0) = LocalScalar(1L, 3);
  k(1, 1) = LocalScalar(4L, 3);
  auto a = canonicalize(g, 13);
  auto b = canonicalize(g * SiegelLevi{k, LocalScalar(2L, 3)}, 13);
  CHECK(a.key == b.key);
  CHECK(a.phase == b.phase);
  auto c = canonicalize(central(3, 2) * g, 13);
  CHECK(c.key == a.key);
  CHECK(c.w_power == a.w_power + 2);
}

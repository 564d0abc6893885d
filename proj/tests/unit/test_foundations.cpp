#include "doctest.h"

#include "spinlocal/cyclotomic.hpp"
#include "spinlocal/groups.hpp"
#include "spinlocal/hnf.hpp"
#include "spinlocal/padic.hpp"
#include "spinlocal/quadratic.hpp"

using namespace spinlocal;

TEST_CASE("valuations and residues") {
  CHECK(valuation(mpq_class(18), 3) == 2);
  CHECK(valuation(mpq_class(1, 27), 3) == -3);
  LocalScalar x(mpq_class(7, 9), 3);
  CHECK(x.valuation() == -2);
  CHECK(x.fractional_part() == mpq_class(7, 9));
  CHECK(LocalScalar(mpq_class(-1), 3).residue_mod(2) == 8);
  CHECK(LocalScalar(mpq_class(1, 2), 3).residue_mod(1) == 2);
  CHECK(LocalScalar(mpq_class(1, 3), 3).residue_mod(-1) == 0);
}

TEST_CASE("hensel square root") {
  auto h = hensel_sqrt(13, 3, 10);
  mpz_class m = ipow(3, 10);
  mpz_class sq = (h.residue * h.residue - 13) % m;
  CHECK(sq == 0);
}

TEST_CASE("cyclotomic sums vanish on full groups") {
  std::vector<mpq_class> ex;
  for (int j = 0; j < 9; ++j) ex.emplace_back(j, 9);
  CHECK(character_sum(3, 2, ex).is_zero());
  std::vector<mpq_class> ex2;
  for (int j = 0; j < 9; ++j) ex2.emplace_back(3 * j, 9);
  CHECK(character_sum(3, 2, ex2).rational() == 0);
  auto a = CyclotomicValue::psi(3, mpq_class(1, 3));
  auto b = CyclotomicValue::psi(3, mpq_class(2, 3));
  CHECK((a + b).rational() == -1);
  CHECK((a * b).rational() == 1);
  CharacterCounter cc(3, 1);
  cc.add(0, 2);
  cc.add(1, 2);
  cc.add(2, 2);
  CHECK(cc.value().is_zero());
}

TEST_CASE("hnf recovers an upper triangular form") {
  unsigned p = 3;
  LMat A = diagonal(p, {9, 3, 1});
  A(0, 1) = LocalScalar(5L, p);
  A(2, 0) = LocalScalar(6L, p);
  auto h = hermite_normal_form_local(A);
  CHECK(A * h.gamma == h.H);
  CHECK(determinant(h.gamma).valuation() == 0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < i; ++j) CHECK(h.H(i, j).is_exact_zero());
}

TEST_CASE("iota and tau are symplectic Levi elements") {
  EtaleQuadratic L(3, 13, 12);
  for (int r = 0; r < 3; ++r) {
    auto g = iota_class(L, r, {1, 0});
    CHECK(is_symplectic(g.full(), g.nu));
  }
  CHECK(is_symplectic(tau(3).full(), tau(3).nu));
  EtaleQuadratic I(3, 5, 12);
  auto g = iota_class(I, 2, {1, 0});
  CHECK(is_symplectic(g.full(), g.nu));
}

TEST_CASE("subgroup order") {
  std::vector<std::vector<mpz_class>> g{{3, 0}, {0, 1}, {1, 1}};
  CHECK(subgroup_order_mod(g, 3, 2) == 81);
  std::vector<std::vector<mpz_class>> h{{3, 3}, {0, 9}};
  CHECK(subgroup_order_mod(h, 3, 2) == 3);
}

#include <doctest.h>

#include <cstdlib>

#include "spinlocal/config.hpp"
#include "spinlocal/spin.hpp"
#include "spinlocal/suites.hpp"

using namespace spinlocal;

TEST_CASE("spin Euler factor") {
  auto ones = spin_euler_factor({1, 1, 1, 1}, 5);
  // (1 - q)^{-8}: binomial(n + 7, 7)
  std::vector<long> expect{1, 8, 36, 120, 330, 792};
  for (int n = 0; n <= 5; ++n) CHECK(ones[n] == expect[n]);
  auto twos = spin_euler_factor({2, 1, 1, 1}, 3);
  for (int n = 0; n <= 3; ++n) CHECK(twos[n] == expect[n] * (1L << n));
  auto poly = spin_inverse_polynomial({mpq_class(1, 2), 3, 5, 7});
  CHECK(poly.size() == 9);
  CHECK(poly.back() != 0);
  // series times inverse polynomial is 1
  auto s = spin_euler_factor({mpq_class(1, 2), 3, 5, 7}, 8);
  for (int n = 0; n <= 8; ++n) {
    mpq_class c = 0;
    for (int k = 0; k <= n; ++k) c += poly[k] * s[n - k];
    CHECK(c == (n == 0 ? 1 : 0));
  }
  CHECK_THROWS(spin_euler_factor({0, 1, 1, 1}, 2));
}

TEST_CASE("session config validation") {
  SessionConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK_FALSE(cfg.split());
  cfg.D = 13;
  CHECK(cfg.split());
  cfg.D = 6;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.D = 5;
  cfg.p = 9;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.p = 2;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.p = 3;
  setenv("SPINV_PRECISION", "31", 1);
  cfg.apply_env();
  CHECK(cfg.precision == 31);
  setenv("SPINV_PRECISION", "x", 1);
  CHECK_THROWS_AS(cfg.apply_env(), ConfigError);
  unsetenv("SPINV_PRECISION");
}

TEST_CASE("suites report deterministically") {
  SessionConfig cfg;
  cfg.threads = 2;
  auto a = run_suite("alphachi", cfg), b = run_suite("alphachi", cfg);
  REQUIRE(a.size() == 1);
  CHECK(a[0].passed());
  CHECK(a[0].to_json().dump() == b[0].to_json().dump());
  auto lemmas = run_suite("lemmas", cfg);
  REQUIRE(lemmas.size() == 2);
  CHECK(lemmas[0].name < lemmas[1].name);
  CHECK_THROWS_AS(run_suite("nope", cfg), ConfigError);
}

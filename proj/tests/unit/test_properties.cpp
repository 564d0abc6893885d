#include <doctest.h>

#include <random>

#include "spinlocal/series.hpp"
#include "spinlocal/symbols.hpp"

using namespace spinlocal;

namespace {

LMat random_gl3_zp(unsigned p, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-40, 40);
  for (;;) {
    LMat k = zero_matrix(p, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) k(i, j) = LocalScalar(entry(rng), p);
    LocalScalar d = k(0, 0) * (k(1, 1) * k(2, 2) - k(1, 2) * k(2, 1)) -
                    k(0, 1) * (k(1, 0) * k(2, 2) - k(1, 2) * k(2, 0)) +
                    k(0, 2) * (k(1, 0) * k(2, 1) - k(1, 1) * k(2, 0));
    if (!d.is_exact_zero() && d.valuation() == 0) return k;
  }
}

}  // namespace

TEST_CASE("canonical keys are constant on right GL3(Z_p) and central orbits") {
  const unsigned p = 3;
  std::mt19937_64 rng(99);
  for (long D : {5L, 13L}) {
    EtaleQuadratic L(p, D, 16);
    std::vector<SiegelLevi> points;
    for (int r = 0; r <= 3; ++r) {
      for (const auto& l : support_classes(L, r)) points.push_back(iota_class(L, r, l));
      if (r > 0) points.push_back(iota_class(L, r, {0, 0}) * tau(p));
    }
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    std::uniform_int_distribution<int> shift(-2, 2);
    std::uniform_int_distribution<long> unit(1, 2);
    for (int trial = 0; trial < 50; ++trial) {
      const SiegelLevi& g = points[pick(rng)];
      auto base = canonicalize(g, D);
      int c = shift(rng);
      auto moved = canonicalize(central(p, c) * g * SiegelLevi{random_gl3_zp(p, rng), LocalScalar(unit(rng), p)}, D);
      CAPTURE(D);
      CAPTURE(trial);
      CHECK(moved.vanishes == base.vanishes);
      if (base.vanishes) continue;
      CHECK(moved.key == base.key);
      CHECK(moved.phase == base.phase);
      CHECK(moved.w_power == base.w_power + c);
    }
  }
}

TEST_CASE("formal series ring laws") {
  const unsigned p = 3;
  EtaleQuadratic L(p, 13, 16);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> r_dist(0, 3), q_dist(0, 4), w_dist(-2, 2);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  auto random_series = [&] {
    FormalSeries s(13);
    for (int n = 0; n < 6; ++n) {
      int r = r_dist(rng);
      auto classes = support_classes(L, r);
      s.add_lambda(q_dist(rng), iota_class(L, r, classes[rng() % classes.size()]), w_dist(rng),
                   CyclotomicValue(mpq_class(num(rng), den(rng))));
    }
    return s;
  };
  for (int trial = 0; trial < 30; ++trial) {
    FormalSeries a = random_series(), b = random_series(), c = random_series();
    FormalSeries ab = a, ba = b;
    ab += b;
    ba += a;
    CHECK(ab == ba);
    FormalSeries left = ab, bc = b;
    left += c;
    bc += c;
    FormalSeries right = a;
    right += bc;
    CHECK(left == right);
    FormalSeries z = a;
    z -= a;
    CHECK(z.is_zero());
    mpq_class s(num(rng) + 10, den(rng)), t(num(rng), den(rng));
    s.canonicalize();
    t.canonicalize();
    CHECK(a.scaled(s).scaled(t) == a.scaled(s * t));
    FormalSeries sum_scaled = a.scaled(s);
    sum_scaled += b.scaled(s);
    CHECK(ab.scaled(s) == sum_scaled);
    CHECK(a.shifted(1, 2).shifted(2, -1) == a.shifted(3, 1));
    CHECK(a.truncated(2).truncated(1) == a.truncated(1));
  }
}

#include "doctest.h"

#include <map>

#include "spinlocal/admissible.hpp"
#include "spinlocal/padic.hpp"

using namespace spinlocal;

TEST_CASE("um_contains examples") {
  RepresentativeM bgc{0, 2, 1, 0, 0, 0};
  CHECK(um_contains(bgc, 3, 0, 0, 0));
  CHECK(um_contains(bgc, 3, 0, 0, mpq_class(1, 3)));
  RepresentativeM d{1, 0, 0, 0, 0, 0};
  CHECK(um_contains(d, 3, mpq_class(1, 3), 0, 0));
}

TEST_CASE("admissibility examples") {
  RepresentativeM one{0, 0, 0, 0, 0, 0};
  auto r = admissible_bruteforce(one, 3, 5);
  CHECK(r.admissible);
  CHECK(r.B == 1);
  RepresentativeM g0{1, 0, 1, 0, 0, 0};
  CHECK_FALSE(admissible_bruteforce(g0, 3, 5).admissible);
  RepresentativeM s{1, 0, 0, 1, 0, 0};
  auto rs = admissible_bruteforce(s, 3, 13);
  CHECK(rs.admissible);
  CHECK(rs.B == 3);
  RepresentativeM i1{1, 0, 1, 0, 1, 0};
  auto ri = admissible_classify(i1, 3, 5, false);
  CHECK(ri.admissible);
  CHECK(ri.B == 9);
  RepresentativeM s3{1, 1, 1, 0, 1, 1};
  auto r3 = admissible_classify(s3, 3, 13, true);
  CHECK(r3.admissible);
  CHECK(r3.B == 81);
  CHECK(admissible_bruteforce(s3, 3, 13).B == 81);
}

TEST_CASE("three admissibility oracles agree at p = 3") {
  for (long D : {5L, 13L}) {
    bool split = legendre(D, 3) == 1;
    std::map<RepresentativeM, AdmissibleRecord> cache;
    int admissible = 0;
    for (const auto& m : enumerate_M(3, 2, 2, 2)) {
      auto key = um_class(m, 3);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, admissible_bruteforce(m, 3, D)).first;
      auto brute = it->second;
      auto lat = admissible_lattice(m, 3, D);
      auto cls = admissible_classify(m, 3, D, split);
      CAPTURE(m.str());
      CAPTURE(D);
      CHECK(brute.admissible == cls.admissible);
      CHECK(lat.admissible == cls.admissible);
      if (cls.admissible) {
        ++admissible;
        CHECK(brute.B == cls.B);
        CHECK(lat.B == cls.B);
        CHECK(cls.B == qpow(3, m.a + 2 * m.b + m.c));
      }
    }
    CHECK(admissible > 0);
  }
}

TEST_CASE("u' integral equals the cumulative factor on U_m") {
  int checked = 0;
  for (const auto& m : enumerate_M(3, 1, 1, 1)) {
    for (int i = -1; i <= 0 && checked < 60; ++i)
      for (int j : {0, 1, 2}) {
        mpq_class u11(j, 3), u12(i + 1, 3), u22 = i == 0 ? mpq_class(1, 3) : mpq_class(2);
        mpq_class expect = um_contains(m, 3, u11, u12, u22)
                               ? qpow(3, 2 * m.c + std::min(m.b, m.c))
                               : mpq_class(0);
        CAPTURE(m.str());
        CHECK(uprime_integral_bruteforce(m, 3, u11, u12, u22) == expect);
        ++checked;
      }
  }
  CHECK(checked >= 50);
}

#include <doctest.h>

#include "spinlocal/alphachi.hpp"

using namespace spinlocal;

TEST_CASE("Local alpha_chi on the torus of GL2,L*") {
  for (unsigned p : {3u, 5u})
    for (long D : {2L, 5L, 11L, 13L}) {
      if (legendre(D, p) == 0) continue;
      EtaleQuadratic L(p, D, 20);
      std::vector<QuadElement> ells;
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= (L.split() ? 2 : 0); ++b) {
          QuadElement base = L.split() ? split_power(L, a, b) : inert_power(L, a);
          ells.push_back(base);
          ells.push_back(mul(L, base, quad(L, 1, 1)));  // times a unit of O_L
        }
      for (const auto& l : ells)
        for (int vt = -1; vt <= 2; ++vt)
          for (long u : {1L, 2L}) {
            LocalScalar t(qpow(p, vt) * u, p);
            CAPTURE(p);
            CAPTURE(D);
            CAPTURE(vt);
            CAPTURE(norm_valuation(L, l));
            CHECK(alpha_chi_bruteforce(L, gl2l_torus(L, t, l)) == alpha_chi_closed(L, t, l));
          }
    }
}

TEST_CASE("alpha_chi examples") {
  EtaleQuadratic L(3, 5, 20);
  auto at = [&](long t, const QuadElement& l) {
    return alpha_chi_bruteforce(L, gl2l_torus(L, LocalScalar(t, 3), l));
  };
  CHECK(at(1, quad(L, 1)) == 1);
  CHECK(at(3, quad(L, 1)) == mpq_class(1, 3));
  CHECK(at(1, quad(L, 3)) == 0);
}

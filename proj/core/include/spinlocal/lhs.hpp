#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "spinlocal/admissible.hpp"
#include "spinlocal/groups.hpp"
#include "spinlocal/quadratic.hpp"
#include "spinlocal/series.hpp"

namespace spinlocal {

/// Siegel-Levi element with lower right block m, upper left entry p^r, similitude p^{r+c}.
SiegelLevi siegel_levi_element(const RepresentativeM& m, unsigned p, int r);

/// The M_R element diag(y, p^c) with the same r (gamma column removed).
SiegelLevi levi_part(const RepresentativeM& m, unsigned p, int r);

/// Integral (C) for admissible m: B(m) if r >= a, else 0.
mpq_class integral_C(const AdmissibleRecord& rec, int r);

/// Integral (C) by summing chi(v) charf(n_v g) over the v-class
/// {v : -p^c v^T in gamma + y Z_p^2} on a grid of p^{2K} points, normalized by
/// the class measure and by chi at the class representative, times B(m).
mpq_class integral_C_bruteforce(const AdmissibleRecord& rec, unsigned p, int r, int K = 1);

struct LhsStats {
  uint64_t levi_elements = 0;   // (r, y, c) visited
  uint64_t lambda_vanished = 0;
  uint64_t classes = 0;         // (y, gamma, c, r) with n_v g integral
  uint64_t admissible = 0;
};

/// Sum over r, y, c, gamma of p^{2c-a-b} delta_R^{-1} B(m) psi(-gamma1/p^c)
/// lambda(diag(y, p^c), p^{r+c}) q^{r+c} with B(m) from the lattice oracle.
FormalSeries lhs_series(const EtaleQuadratic& L, int rmax, LhsStats* stats = nullptr);

/// The two closed-form theorems for the local integral, through q^rmax.
FormalSeries lhs_closed_form(const EtaleQuadratic& L, int rmax);

}  // namespace spinlocal

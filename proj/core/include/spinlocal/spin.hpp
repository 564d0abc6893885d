#pragma once

#include <gmpxx.h>

#include <array>
#include <vector>

namespace spinlocal {

/// Coefficients of q^0..q^rmax in prod over S in {1,2,3} of (1 - a0 prod_{i in S} a_i q)^{-1}.
/// Reporting only.
std::vector<mpq_class> spin_euler_factor(const std::array<mpq_class, 4>& satake, int rmax);

/// The degree 8 polynomial prod_S (1 - a0 prod_{i in S} a_i q).
std::vector<mpq_class> spin_inverse_polynomial(const std::array<mpq_class, 4>& satake);

}  // namespace spinlocal

#include "spinlocal/spin.hpp"

#include <stdexcept>

namespace spinlocal {

namespace {

std::vector<mpq_class> roots(const std::array<mpq_class, 4>& a) {
  for (const auto& x : a)
    if (x == 0) throw std::invalid_argument("Satake parameters must be nonzero");
  std::vector<mpq_class> out;
  for (unsigned S = 0; S < 8; ++S) {
    mpq_class r = a[0];
    for (int i = 0; i < 3; ++i)
      if (S & (1u << i)) r *= a[i + 1];
    out.push_back(r);
  }
  return out;
}

}  // namespace

std::vector<mpq_class> spin_euler_factor(const std::array<mpq_class, 4>& satake, int rmax) {
  if (rmax < 0) throw std::invalid_argument("rmax must be nonnegative");
  std::vector<mpq_class> series(rmax + 1, 0);
  series[0] = 1;
  // Multiply by the geometric series of each root in turn.
  for (const auto& r : roots(satake))
    for (int n = 1; n <= rmax; ++n) series[n] += r * series[n - 1];
  return series;
}

std::vector<mpq_class> spin_inverse_polynomial(const std::array<mpq_class, 4>& satake) {
  std::vector<mpq_class> poly{1};
  for (const auto& r : roots(satake)) {
    poly.push_back(0);
    for (std::size_t n = poly.size() - 1; n > 0; --n) poly[n] -= r * poly[n - 1];
  }
  return poly;
}

}  // namespace spinlocal

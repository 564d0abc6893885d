#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "json.hpp"
#include "spinlocal/quadratic.hpp"
#include "spinlocal/series.hpp"

namespace spinlocal {

/// coeff * q^q * w^w * lambda(iota(p^r, l)), kept unevaluated so Hecke operators can act on it.
struct IotaTerm {
  int q = 0;
  int r = 0;
  EllClass l;
  int w = 0;
  mpq_class coeff;
};

/// The inner sum p^{6r} |l|^2 lambda(iota(p^r, l)) q^r over |p^r| <= |l| <= 1, through q^rmax.
std::vector<IotaTerm> build_D_prime(const EtaleQuadratic& L, int rmax);
/// D' times the zeta factor sum_k w^k p^{6k} q^{2k}, through q^rmax.
std::vector<IotaTerm> build_D(const EtaleQuadratic& L, int rmax);
/// Multiplies by the zeta factor, dropping terms beyond q^rmax.
std::vector<IotaTerm> times_zeta(const EtaleQuadratic& L, const std::vector<IotaTerm>& terms, int rmax);

FormalSeries evaluate(const EtaleQuadratic& L, const std::vector<IotaTerm>& terms);

enum class Reduction { GL2, GL3 };

/// N(s) applied termwise; T33 acts as w and T03, T23 through the chosen reduction.
FormalSeries apply_N(const EtaleQuadratic& L, const std::vector<IotaTerm>& terms, int rmax,
                     Reduction red = Reduction::GL2);

/// The closed forms for the coefficients of N(s) D(s), through q^rmax.
FormalSeries rhs_closed_form(const EtaleQuadratic& L, int rmax);

struct SeriesComparison {
  std::string name;
  bool equal = false;
  std::string first_discrepancy;  // empty when equal
};

struct VerificationReport {
  bool split = false;
  unsigned p = 0;
  long D = 0;
  int rmax = 0;
  std::vector<SeriesComparison> comparisons;
  nlohmann::json coefficients;
  std::size_t opaque_symbols = 0;
  double seconds = 0;
  bool passed() const;
  /// Wall time is included only on request so reports stay byte-stable.
  nlohmann::json to_json(bool timings = false) const;
};

/// First monomial (in q, symbol, w order) where a and b differ, or "" if equal.
std::string first_difference(const FormalSeries& a, const FormalSeries& b, const SymbolTable& table);

/// lhs_series == lhs_closed_form == apply_N(build_D) == rhs_closed_form through q^rmax.
VerificationReport verify_main_identity(const EtaleQuadratic& L, int rmax);

}  // namespace spinlocal

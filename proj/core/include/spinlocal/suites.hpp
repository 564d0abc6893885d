#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "spinlocal/config.hpp"

namespace spinlocal {

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

/// Outcome of one oracle comparison. A failing check names the datum that failed.
struct CheckResult {
  std::string name;
  std::string anchor;
  CheckStatus status = CheckStatus::Pass;
  uint64_t cases = 0;
  std::string detail;
  nlohmann::json data;
  double seconds = 0;

  bool passed() const { return status != CheckStatus::Fail; }
  nlohmann::json to_json(bool timings = false) const;
};

CheckResult check_main_identity(const SessionConfig& cfg);
/// Brute force, lattice and classification agree on a, b, c <= amax; B(m) = p^{a+2b+c}.
CheckResult check_admissible(const SessionConfig& cfg);
/// Integral (C) brute force against 0 / B(m) for admissible m with a >= 1, r <= amax + 1.
CheckResult check_integral_C(const SessionConfig& cfg);
/// GL3 and GL2 reductions of T03, T23 against raw GSp6 cosets for r <= 2, and the unit constant.
CheckResult check_hecke_reductions(const SessionConfig& cfg);
/// T_p vanishing, extremal and primed rewrites for r <= 4 and powers k <= 3.
CheckResult check_tp_lemmas(const SessionConfig& cfg);
CheckResult check_modulus(const SessionConfig& cfg);
CheckResult check_alphachi(const SessionConfig& cfg);
/// HNF of m_l (split case), the four translation identities, Fourier inversion.
CheckResult check_foundations(const SessionConfig& cfg);

const std::vector<std::string>& suite_names();
/// Runs the named suite ("admissible", "hecke", "modulus", "alphachi", "lemmas", "main" or "all")
/// in parallel; results sorted by name. Throws ConfigError on an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, const SessionConfig& cfg);

}  // namespace spinlocal

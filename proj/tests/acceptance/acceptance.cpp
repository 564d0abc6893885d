// Prints one PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <future>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "spinlocal/suites.hpp"

using namespace spinlocal;

namespace {

using Check = CheckResult (*)(const SessionConfig&);

struct Criterion {
  int number;
  std::string title;
  Check check;
  std::vector<std::pair<unsigned, long>> configs;
};

const std::vector<std::pair<unsigned, long>> kFour{{3, 5}, {5, 2}, {3, 13}, {5, 11}};
const std::vector<std::pair<unsigned, long>> kPThree{{3, 5}, {3, 13}};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "main identity through q^4, four series agree", check_main_identity, kFour},
      {2, "admissibility classification and B(m) = p^(a+2b+c), a,b,c <= 2", check_admissible, kFour},
      {3, "GL3 reductions of T03/T23 vs raw GSp6 cosets, unit constant", check_hecke_reductions, kPThree},
      {4, "T_p rewrite lemmas, r <= 4, k <= 3", check_tp_lemmas, kFour},
      {5, "modulus characters vs finite-quotient indices", check_modulus, kFour},
      {6, "local alpha_chi vs |t||l|^-1 or 0", check_alphachi, kFour},
      {7, "HNF of m_l, translation identities, Fourier inversion", check_foundations, kFour},
      {8, "integral (C): 0 for r < a, B(m) for r >= a", check_integral_C, kFour},
  };

  std::vector<std::vector<std::future<CheckResult>>> running;
  std::vector<std::vector<SessionConfig>> configs;
  for (const auto& c : criteria) {
    configs.emplace_back();
    for (auto [p, D] : c.configs) {
      SessionConfig cfg;
      cfg.p = p;
      cfg.D = D;
      configs.back().push_back(cfg);
    }
  }
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    running.emplace_back();
    for (const auto& cfg : configs[i])
      running.back().push_back(std::async(std::launch::async, criteria[i].check, std::cref(cfg)));
  }

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = true;
    uint64_t cases = 0;
    double seconds = 0;
    std::vector<std::string> failures;
    for (std::size_t k = 0; k < running[i].size(); ++k) {
      CheckResult r = running[i][k].get();
      cases += r.cases;
      seconds = std::max(seconds, r.seconds);
      if (!r.passed()) {
        ok = false;
        failures.push_back("p=" + std::to_string(configs[i][k].p) + " D=" + std::to_string(configs[i][k].D) + ": " +
                           r.detail);
      }
    }
    all = all && ok;
    std::cout << "criterion " << criteria[i].number << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].title
              << " [" << criteria[i].configs.size() << " configurations, " << cases << " exact comparisons, "
              << seconds << " s]\n";
    for (const auto& f : failures) std::cout << "    " << f << "\n";
  }
  std::cout << (all ? "all criteria pass" : "some criteria FAIL") << "\n";
  return all ? 0 : 1;
}

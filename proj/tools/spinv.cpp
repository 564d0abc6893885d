// spinv: verification driver for the local unramified computation.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "spinlocal/config.hpp"
#include "spinlocal/quadratic.hpp"
#include "spinlocal/rhs.hpp"
#include "spinlocal/spin.hpp"
#include "spinlocal/suites.hpp"

using namespace spinlocal;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;
constexpr const char* kSchema = "spinv-report/1";

void add_config_flags(CLI::App* cmd, SessionConfig& cfg, bool with_amax) {
  cmd->add_option("--p", cfg.p, "odd prime")->capture_default_str();
  cmd->add_option("--disc", cfg.D, "D with p not dividing 2D; split or inert is derived")->capture_default_str();
  cmd->add_option("--rmax", cfg.rmax, "truncation order in q")->capture_default_str();
  cmd->add_option("--precision", cfg.precision, "p-adic working precision")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  cmd->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
  if (with_amax) cmd->add_option("--amax", cfg.amax, "bound on a, b, c")->capture_default_str();
}

int write_report(const nlohmann::json& report, const std::string& out) {
  const std::string text = report.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return kPass;
  }
  std::ofstream f(out);
  if (!f) {
    std::cerr << "spinv: cannot write " << out << "\n";
    return kUsage;
  }
  f << text;
  return kPass;
}

int verify_main(const SessionConfig& cfg, const std::string& out, bool timings) {
  EtaleQuadratic L(cfg.p, cfg.D, cfg.precision);
  VerificationReport rep = verify_main_identity(L, cfg.rmax);
  for (const auto& c : rep.comparisons)
    std::cerr << (c.equal ? "  equal   " : "  DIFFERS ") << c.name
              << (c.equal ? "" : " at " + c.first_discrepancy) << "\n";
  std::cerr << "main identity " << (L.split() ? "split" : "inert") << " p=" << cfg.p << " D=" << cfg.D
            << " Rmax=" << cfg.rmax << ": " << (rep.passed() ? "pass" : "FAIL") << " (" << rep.seconds << " s)\n";
  nlohmann::json j{{"schema", kSchema}, {"command", "verify-main"},
                   {"anchor", "main identity: LHS = N * D through q^Rmax"}, {"config", cfg.to_json()},
                   {"report", rep.to_json(timings)}};
  if (!out.empty() && write_report(j, out) != kPass) return kUsage;
  return rep.passed() ? kPass : kFail;
}

int check_suite(const SessionConfig& cfg, const std::string& suite, const std::string& out, bool timings) {
  auto results = run_suite(suite, cfg);
  bool ok = true;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    std::cerr << "  " << to_string(r.status) << "  " << r.name << " (" << r.cases << " cases, " << r.seconds << " s)";
    if (!r.detail.empty()) std::cerr << ": " << r.detail;
    std::cerr << "\n";
    checks.push_back(r.to_json(timings));
  }
  std::cerr << "suite " << suite << ": " << (ok ? "pass" : "FAIL") << "\n";
  nlohmann::json j{{"schema", kSchema}, {"command", "check-suite"}, {"suite", suite}, {"config", cfg.to_json()},
                   {"checks", checks}, {"status", ok ? "pass" : "fail"}};
  if (!out.empty() && write_report(j, out) != kPass) return kUsage;
  return ok ? kPass : kFail;
}

std::array<mpq_class, 4> parse_satake(const std::string& s) {
  std::array<mpq_class, 4> a;
  std::stringstream in(s);
  std::string item;
  std::size_t n = 0;
  while (std::getline(in, item, ',')) {
    if (n == 4) throw ConfigError("expected four Satake parameters");
    try {
      a[n] = mpq_class(item);
    } catch (const std::invalid_argument&) {
      throw ConfigError("not a rational number: " + item);
    }
    a[n].canonicalize();
    if (a[n] == 0) throw ConfigError("Satake parameters must be nonzero");
    ++n;
  }
  if (n != 4) throw ConfigError("expected four Satake parameters");
  return a;
}

int report_spin(const std::string& satake, int rmax) {
  if (rmax < 0) throw ConfigError("rmax must be nonnegative");
  auto a = parse_satake(satake);
  auto coeffs = spin_euler_factor(a, rmax);
  std::cout << "L(Spin) Euler factor through q^" << rmax << " (display only):\n";
  for (int n = 0; n <= rmax; ++n) std::cout << "  q^" << n << ": " << coeffs[n].get_str() << "\n";
  std::cout << "inverse polynomial:";
  for (const auto& c : spin_inverse_polynomial(a)) std::cout << " " << c.get_str();
  std::cout << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the local unramified Spin computation on GSp6"};
  app.require_subcommand(1);

  SessionConfig cfg;
  std::string out, suite = "all", satake;
  bool timings = false;

  auto* vm = app.add_subcommand("verify-main", "compare the four series of the main identity");
  add_config_flags(vm, cfg, false);
  vm->add_option("--out", out, "JSON report file ('-' for stdout)");
  vm->add_flag("--timings", timings, "include wall time in the report");

  auto* cs = app.add_subcommand("check-suite", "run oracle comparisons");
  add_config_flags(cs, cfg, true);
  cs->add_option("--suite", suite, "admissible, hecke, modulus, alphachi, lemmas, main or all")
      ->check(CLI::IsMember(suite_names()))
      ->capture_default_str();
  cs->add_option("--out", out, "JSON report file ('-' for stdout)");
  cs->add_flag("--timings", timings, "include wall time in the report");

  int rmax_spin = 4;
  auto* rs = app.add_subcommand("report-spin", "print a truncated Spin Euler factor");
  rs->add_option("--satake", satake, "a0,a1,a2,a3 (rationals)")->required();
  rs->add_option("--rmax", rmax_spin, "truncation order")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kPass : kUsage;
  }

  try {
    if (rs->parsed()) return report_spin(satake, rmax_spin);
    cfg.apply_env();
    cfg.validate();
    if (vm->parsed()) return verify_main(cfg, out, timings);
    return check_suite(cfg, suite, out, timings);
  } catch (const ConfigError& e) {
    std::cerr << "spinv: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "spinv: " << e.what() << "\n";
    return kFail;
  }
}

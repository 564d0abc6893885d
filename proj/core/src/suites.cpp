#include "spinlocal/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>

#include "spinlocal/admissible.hpp"
#include "spinlocal/alphachi.hpp"
#include "spinlocal/cyclotomic.hpp"
#include "spinlocal/groups.hpp"
#include "spinlocal/hecke.hpp"
#include "spinlocal/lhs.hpp"
#include "spinlocal/modulus.hpp"
#include "spinlocal/quadratic.hpp"
#include "spinlocal/rhs.hpp"
#include "spinlocal/symbols.hpp"

namespace spinlocal {

namespace {

std::string q_str(const mpq_class& x) { return x.get_str(); }

// Records the first failure; later failures only bump the counter.
class Tally {
 public:
  explicit Tally(CheckResult& r) : r_(r) {}
  void expect(bool ok, const std::function<std::string()>& what) {
    ++r_.cases;
    if (ok) return;
    ++failures_;
    if (r_.status != CheckStatus::Fail) {
      r_.status = CheckStatus::Fail;
      r_.detail = what();
    }
  }
  uint64_t failures() const { return failures_; }

 private:
  CheckResult& r_;
  uint64_t failures_ = 0;
};

CheckResult timed(const std::string& name, const std::string& anchor, const SessionConfig& cfg,
                  const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  r.anchor = anchor;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    cfg.validate();
    body(r);
  } catch (const std::exception& e) {
    r.status = CheckStatus::Fail;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string where(const EtaleQuadratic& L, int r, const EllClass& l) {
  std::ostringstream s;
  s << "p=" << L.prime() << " D=" << L.disc() << " r=" << r << " l=(" << l.e1 << "," << l.e2 << ")";
  return s.str();
}

std::string diff(const FormalSeries& a, const FormalSeries& b, const EtaleQuadratic& L) {
  SymbolTable table(L, 6);
  return first_difference(a, b, table);
}

QuadElement ell_element(const EtaleQuadratic& L, int e1, int e2) {
  return L.split() ? split_power(L, e1, e2) : inert_power(L, e1);
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

nlohmann::json CheckResult::to_json(bool timings) const {
  nlohmann::json j{{"check", name}, {"anchor", anchor}, {"status", to_string(status)}, {"cases", cases}};
  if (timings) j["seconds"] = seconds;
  if (!detail.empty()) j["detail"] = detail;
  if (!data.is_null()) j["data"] = data;
  return j;
}

CheckResult check_main_identity(const SessionConfig& cfg) {
  return timed("main_identity", "main identity: LHS = N * D through q^Rmax", cfg, [&](CheckResult& r) {
    EtaleQuadratic L(cfg.p, cfg.D, cfg.precision);
    VerificationReport rep = verify_main_identity(L, cfg.rmax);
    r.cases = rep.comparisons.size();
    r.data = rep.to_json();
    if (!rep.passed()) {
      r.status = CheckStatus::Fail;
      for (const auto& c : rep.comparisons)
        if (!c.equal) r.detail += c.name + ": " + c.first_discrepancy + "; ";
      if (rep.opaque_symbols > 0) r.detail += std::to_string(rep.opaque_symbols) + " opaque symbols";
    }
  });
}

CheckResult check_admissible(const SessionConfig& cfg) {
  return timed("admissible", "admissibility classification and B(m) = p^(a+2b+c)", cfg, [&](CheckResult& r) {
    const unsigned p = cfg.p;
    const bool split = cfg.split();
    Tally t(r);
    std::map<RepresentativeM, AdmissibleRecord> cache;
    uint64_t admissible = 0, total = 0;
    for (const auto& m : enumerate_M(p, cfg.amax, cfg.amax, cfg.amax)) {
      ++total;
      auto key = um_class(m, p);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, admissible_bruteforce(key, p, cfg.D)).first;
      const auto& brute = it->second;
      auto lat = admissible_lattice(m, p, cfg.D);
      auto cls = admissible_classify(m, p, cfg.D, split);
      t.expect(brute.admissible == cls.admissible && lat.admissible == cls.admissible,
               [&] { return "admissibility differs at m = " + m.str(); });
      if (!cls.admissible) continue;
      ++admissible;
      t.expect(brute.B == cls.B && lat.B == cls.B,
               [&] { return "B(m) differs at m = " + m.str() + ": brute " + q_str(brute.B) + ", theorem " + q_str(cls.B); });
      t.expect(cls.B == qpow(p, m.a + 2 * m.b + m.c), [&] { return "B(m) != p^(a+2b+c) at m = " + m.str(); });
    }
    t.expect(admissible > 0, [] { return std::string("no admissible m found"); });
    r.data = {{"matrices", total}, {"admissible", admissible}, {"um_classes_bruteforced", cache.size()}};
  });
}

CheckResult check_integral_C(const SessionConfig& cfg) {
  return timed("integral_C", "integral (C): 0 for r < a, B(m) for r >= a", cfg, [&](CheckResult& r) {
    const unsigned p = cfg.p;
    Tally t(r);
    for (const auto& m : enumerate_M(p, cfg.amax, cfg.amax, cfg.amax)) {
      auto rec = admissible_classify(m, p, cfg.D, cfg.split());
      if (!rec.admissible || m.a == 0) continue;
      for (int rr = 0; rr <= cfg.amax + 1; ++rr) {
        mpq_class brute = integral_C_bruteforce(rec, p, rr);
        mpq_class expect = rr < m.a ? mpq_class(0) : rec.B;
        t.expect(brute == expect && integral_C(rec, rr) == expect, [&] {
          return "m = " + m.str() + " r = " + std::to_string(rr) + ": brute " + q_str(brute) + ", expected " + q_str(expect);
        });
      }
    }
  });
}

CheckResult check_hecke_reductions(const SessionConfig& cfg) {
  return timed("hecke_reductions", "GL3 reductions of T03, T23 and the unit constant", cfg, [&](CheckResult& r) {
    const unsigned p = cfg.p;
    EtaleQuadratic L(p, cfg.D, cfg.precision);
    const long d = cfg.D;
    auto t03 = gsp6_coset_reps(p, HeckeOp::T03);
    auto t23 = gsp6_coset_reps(p, HeckeOp::T23);
    Tally t(r);
    const mpz_class pp(p);
    const mpq_class n03 = (1 + pp) * (1 + pp * pp) * (1 + pp * pp * pp);
    const mpq_class n23 = mpq_class(pp * (pp * pp * pp * pp * pp * pp - 1) / (pp - 1));
    t.expect(mpq_class(t03.size()) == n03, [&] { return "T03 coset count " + std::to_string(t03.size()); });
    t.expect(mpq_class(t23.size()) == n23, [&] { return "T23 coset count " + std::to_string(t23.size()); });
    const mpq_class unit_shift = -mpq_class(pp * pp * pp) + L.epsilon() * mpq_class(pp * pp);
    uint64_t nonzero = 0;
    for (int rr = 0; rr <= 2; ++rr)
      for (const auto& l : support_classes(L, rr)) {
        SiegelLevi g = iota_class(L, rr, l);
        FormalSeries raw03 = apply_raw(d, g, t03), raw23 = apply_raw(d, g, t23);
        nonzero += !raw03.is_zero() + !raw23.is_zero();
        auto g3 = gl3_T03(d, g), g23 = gl3_T23(d, g);
        t.expect(g3 == raw03, [&] { return "GL3 T03 at " + where(L, rr, l) + ": " + diff(g3, raw03, L); });
        t.expect(g23 == raw23, [&] { return "GL3 T23 at " + where(L, rr, l) + ": " + diff(g23, raw23, L); });
        auto h3 = gl2_T03(L, rr, l), h23 = gl2_T23(L, rr, l);
        t.expect(h3 == raw03, [&] { return "GL2 T03 at " + where(L, rr, l) + ": " + diff(h3, raw03, L); });
        t.expect(h23 == raw23, [&] { return "GL2 T23 at " + where(L, rr, l) + ": " + diff(h23, raw23, L); });
        CyclotomicValue u = unit_sum(d, g);
        const mpq_class expect = ell_norm_valuation(L, l) == rr ? unit_shift : mpq_class(0);
        t.expect(u.is_rational() && u.rational() - (mpq_class(pp * pp * pp) - 1) == expect, [&] {
          return "unit sum at " + where(L, rr, l) + " is " + u.str() + ", expected p^3 - 1 + " + q_str(expect);
        });
      }
    t.expect(nonzero > 4, [] { return std::string("reductions are trivially zero"); });
    r.data = {{"T03_cosets", t03.size()}, {"T23_cosets", t23.size()}, {"unit_constant", q_str(unit_shift)}};
  });
}

CheckResult check_tp_lemmas(const SessionConfig& cfg) {
  return timed("tp_lemmas", "T_p vanishing, extremal and primed rewrites", cfg, [&](CheckResult& r) {
    const unsigned p = cfg.p;
    EtaleQuadratic L(p, cfg.D, cfg.precision);
    const long d = cfg.D;
    const CyclotomicValue one(1);
    Tally t(r);
    auto lam = [&](int rr, EllClass l, int w) {
      FormalSeries s(d);
      s.add_lambda(0, iota_class(L, rr, l), w, one);
      return s;
    };
    auto up = [&](const EllClass& l) { return L.split() ? EllClass{l.e1 + 1, l.e2 + 1} : EllClass{l.e1 + 1, 0}; };
    for (int rr = 0; rr <= 4; ++rr) {
      if (rr >= 2)
        for (const auto& l : support_classes(L, rr - 2)) {
          if (ell_norm_valuation(L, l) != rr - 2) continue;
          auto v = apply_Tp(d, iota_class(L, rr - 1, up(l)));
          t.expect(v.is_zero(), [&] { return "no vanishing at " + where(L, rr - 1, up(l)) + ": " + diff(v, FormalSeries(d), L); });
        }
      FormalSeries tau_term(d);
      tau_term.add_lambda(0, iota_class(L, rr, {0, 0}) * tau(p), 0, one);
      auto tt = apply_Tp(d, iota_class(L, rr, {0, 0}));
      t.expect(tt == tau_term, [&] { return "trivial l at r = " + std::to_string(rr) + ": " + diff(tt, tau_term, L); });
      for (const auto& l : support_classes(L, rr)) {
        if (ell_norm_valuation(L, l) != rr || rr == 0) continue;
        FormalSeries expect(d);
        if (L.split()) {
          expect += lam(rr - 1, {l.e1, l.e2 - 1}, 1);
          expect += lam(rr - 1, {l.e1 - 1, l.e2}, 1);
        }
        auto v = apply_Tp(d, iota_class(L, rr, l));
        t.expect(v == expect, [&] { return "extremal at " + where(L, rr, l) + ": " + diff(v, expect, L); });
      }
      for (const auto& l : support_classes(L, rr)) {
        auto a = apply_Tp(d, iota_class(L, rr, l), true);
        auto b = apply_Tp(d, iota_class(L, rr + 2, up(l))).shifted(0, -1);
        t.expect(a == b, [&] { return "T'T at " + where(L, rr, l) + ": " + diff(a, b, L); });
      }
      if (L.split())
        for (int k = 1; k <= 3; ++k) {
          auto a = apply_Tp(d, iota_class(L, rr, {k, 0})), ea = lam(rr - 1, {k - 1, 0}, 1);
          auto b = apply_Tp(d, iota_class(L, rr, {0, k})), eb = lam(rr - 1, {0, k - 1}, 1);
          t.expect(a == ea, [&] { return "pi1 power at " + where(L, rr, {k, 0}) + ": " + diff(a, ea, L); });
          t.expect(b == eb, [&] { return "pi2 power at " + where(L, rr, {0, k}) + ": " + diff(b, eb, L); });
        }
    }
  });
}

CheckResult check_modulus(const SessionConfig& cfg) {
  return timed("modulus", "modulus characters of R, P4 and the Borel at iota(t, l)", cfg, [&](CheckResult& r) {
    const unsigned p = cfg.p;
    EtaleQuadratic L(p, cfg.D, cfg.precision);
    Tally t(r);
    const int V = std::min(cfg.amax, 2);
    for (int rr = 0; rr <= V; ++rr)
      for (int e1 = 0; e1 <= V; ++e1)
        for (int e2 = 0; e2 <= (L.split() ? V : 0); ++e2) {
          QuadElement l = ell_element(L, e1, e2);
          LocalScalar tt(qpow(p, rr), p);
          SiegelLevi g = build_iota(L, tt, l);
          const std::string at = where(L, rr, {e1, e2});
          t.expect(modulus_R(g) == modulus_R_bruteforce(g), [&] { return "delta_R at " + at; });
          t.expect(modulus_BL(L, tt, l) == modulus_BL_bruteforce(L, tt, l), [&] { return "delta_B at " + at; });
        }
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> val(0, V);
    std::uniform_int_distribution<long> unit(1, static_cast<long>(p) - 1);
    auto rand_scalar = [&] { return LocalScalar(qpow(p, val(rng)) * unit(rng), p); };
    for (int trial = 0; trial < 40; ++trial) {
      LMat y = zero_matrix(p, 2, 2);
      for (;;) {
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) y(i, j) = rand_scalar();
        LocalScalar det = y(0, 0) * y(1, 1) - y(0, 1) * y(1, 0);
        if (!det.is_exact_zero() && det.valuation() <= V) break;
      }
      LocalScalar z = rand_scalar(), w = rand_scalar(), nu = rand_scalar();
      LMat B = zero_matrix(p, 3, 3);
      B.set_block(0, 0, y);
      B(2, 2) = z;
      SiegelLevi g{B, w * z};
      t.expect(modulus_R(g) == modulus_R_bruteforce(g), [&] { return "delta_R at random trial " + std::to_string(trial); });
      t.expect(modulus_P4(nu, y) == modulus_P4_bruteforce(nu, y),
               [&] { return "delta_P4 at random trial " + std::to_string(trial); });
    }
  });
}

CheckResult check_alphachi(const SessionConfig& cfg) {
  return timed("alphachi", "alpha_chi = |t||l|^-1 on |t| <= |l|, else 0", cfg, [&](CheckResult& r) {
    const unsigned p = cfg.p;
    EtaleQuadratic L(p, cfg.D, cfg.precision);
    Tally t(r);
    const int V = cfg.amax;
    for (int e1 = 0; e1 <= V; ++e1)
      for (int e2 = 0; e2 <= (L.split() ? V : 0); ++e2)
        for (bool twist : {false, true}) {
          QuadElement l = ell_element(L, e1, e2);
          if (twist) l = mul(L, l, quad(L, 1, 1));
          for (int vt = 0; vt <= V; ++vt)
            for (long u : {1L, 2L}) {
              LocalScalar tt(qpow(p, vt) * u, p);
              mpq_class brute = alpha_chi_bruteforce(L, gl2l_torus(L, tt, l));
              mpq_class closed = alpha_chi_closed(L, tt, l);
              t.expect(brute == closed, [&] {
                return where(L, vt, {e1, e2}) + (twist ? " (unit twist)" : "") + ": brute " + q_str(brute) +
                       ", closed " + q_str(closed);
              });
            }
        }
  });
}

CheckResult check_foundations(const SessionConfig& cfg) {
  return timed("foundations", "HNF of m_l, translation identities, Fourier inversion", cfg, [&](CheckResult& r) {
    const unsigned p = cfg.p;
    EtaleQuadratic L(p, cfg.D, cfg.precision);
    Tally t(r);
    if (L.split()) {
      const LocalScalar h = L.h().to_scalar();
      for (int k = 1; k <= 3; ++k)
        for (int sign : {1, -1}) {
          QuadElement l = sign > 0 ? split_power(L, k, 0) : split_power(L, 0, k);
          LMat hnf = zero_matrix(p, 2, 2);
          hnf(0, 0) = LocalScalar(qpow(p, k), p);
          hnf(0, 1) = sign > 0 ? -h : h;
          hnf(1, 1) = LocalScalar(1L, p);
          t.expect(coset_key(m_ell(L, l)) == coset_key(hnf),
                   [&] { return "m_l not equivalent to [[p^k, -h], [0, 1]] for k = " + std::to_string(k); });
        }
    }
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long> coord(-20, 20);
    std::uniform_int_distribution<int> expo(-3, 3);
    const LocalScalar P(static_cast<long>(p), p), Pinv = P.inverse();
    auto diag6 = [&](std::initializer_list<long> dd) {
      std::vector<mpq_class> v;
      for (long x : dd) v.emplace_back(x);
      return diagonal(p, v);
    };
    const long q = p;
    const LMat scalar_p = diag6({q, q, q, q, q, q});
    for (int trial = 0; trial < 20; ++trial) {
      QuadElement l = quad(L, coord(rng), coord(rng));
      LocalScalar tt(qpow(p, expo(rng)) * (1 + q * coord(rng) * coord(rng)), p);
      if (norm(L, l).is_exact_zero() || tt.is_exact_zero()) continue;
      LMat g = build_iota(L, tt, l).full();
      const std::string at = "trial " + std::to_string(trial);
      t.expect(g * diag6({1, 1, 1, q, q, q}) == build_iota(L, tt * Pinv, l).full() * scalar_p,
               [&] { return "identity 1 at " + at; });
      t.expect(g * diag6({q, q, q, 1, 1, 1}) == build_iota(L, tt * P, l).full(), [&] { return "identity 2 at " + at; });
      t.expect(g * diag6({q, 1, 1, q, q, 1}) == build_iota(L, tt * P, scale(l, P)).full(),
               [&] { return "identity 3 at " + at; });
      t.expect(g * diag6({1, q, q, 1, 1, q}) == build_iota(L, tt * Pinv, scale(l, Pinv)).full() * scalar_p,
               [&] { return "identity 4 at " + at; });
    }
    for (int n = 0; n <= 3; ++n)
      for (int e = -3; e <= 3; ++e)
        for (long u : {1L, 2L, q + 1}) {
          mpq_class v = qpow(p, e) * u;
          for (bool twisted : {false, true}) {
            const std::string at = "n=" + std::to_string(n) + " v=" + q_str(v) + (twisted ? " twisted" : "");
            t.expect(fourier_indicator(p, FourierDomain::Qp, v, 0, n, twisted) ==
                         fourier_indicator_bruteforce(p, cfg.D, FourierDomain::Qp, v, 0, n, twisted),
                     [&] { return "Fourier (Q_p) at " + at; });
            t.expect(fourier_indicator(p, FourierDomain::L, v, v / 2, n, twisted) ==
                         fourier_indicator_bruteforce(p, cfg.D, FourierDomain::L, v, v / 2, n, twisted),
                     [&] { return "Fourier (L) at " + at; });
            t.expect(fourier_indicator(p, FourierDomain::L, 1 + v, v, n, twisted) ==
                         fourier_indicator_bruteforce(p, cfg.D, FourierDomain::L, 1 + v, v, n, twisted),
                     [&] { return "Fourier (L, shifted) at " + at; });
          }
        }
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"admissible", "hecke", "modulus", "alphachi", "lemmas", "main", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const SessionConfig& cfg) {
  cfg.validate();
  using Check = CheckResult (*)(const SessionConfig&);
  const std::map<std::string, std::vector<Check>> table{
      {"admissible", {check_admissible, check_integral_C}},
      {"hecke", {check_hecke_reductions}},
      {"modulus", {check_modulus}},
      {"alphachi", {check_alphachi}},
      {"lemmas", {check_foundations, check_tp_lemmas}},
      {"main", {check_main_identity}},
  };
  std::vector<Check> checks;
  if (suite == "all") {
    for (const auto& [name, cs] : table) checks.insert(checks.end(), cs.begin(), cs.end());
  } else {
    auto it = table.find(suite);
    if (it == table.end()) throw ConfigError("unknown suite: " + suite);
    checks = it->second;
  }
  std::vector<CheckResult> results;
  const std::size_t width = std::max<std::size_t>(1, cfg.worker_count());
  for (std::size_t start = 0; start < checks.size(); start += width) {
    std::vector<std::future<CheckResult>> running;
    for (std::size_t i = start; i < std::min(checks.size(), start + width); ++i)
      running.push_back(std::async(std::launch::async, checks[i], std::cref(cfg)));
    for (auto& f : running) results.push_back(f.get());
  }
  std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return results;
}

}  // namespace spinlocal

#include "spinlocal/rhs.hpp"

#include <chrono>
#include <sstream>

#include "spinlocal/hecke.hpp"
#include "spinlocal/lhs.hpp"
#include "spinlocal/symbols.hpp"

namespace spinlocal {

namespace {

FormalSeries hecke_on_iota(const EtaleQuadratic& L, HeckeOp op, int r, const EllClass& l, Reduction red) {
  if (red == Reduction::GL2) return op == HeckeOp::T03 ? gl2_T03(L, r, l) : gl2_T23(L, r, l);
  SiegelLevi g = iota_class(L, r, l);
  return op == HeckeOp::T03 ? gl3_T03(L.disc(), g) : gl3_T23(L.disc(), g);
}

}  // namespace

std::vector<IotaTerm> build_D_prime(const EtaleQuadratic& L, int rmax) {
  const unsigned p = L.prime();
  std::vector<IotaTerm> out;
  for (int r = 0; r <= rmax; ++r)
    for (const auto& l : support_classes(L, r))
      out.push_back({r, r, l, 0, qpow(p, 6 * r - 2 * ell_norm_valuation(L, l))});
  return out;
}

std::vector<IotaTerm> times_zeta(const EtaleQuadratic& L, const std::vector<IotaTerm>& terms, int rmax) {
  const unsigned p = L.prime();
  std::vector<IotaTerm> out;
  for (const auto& t : terms)
    for (int k = 0; t.q + 2 * k <= rmax; ++k)
      out.push_back({t.q + 2 * k, t.r, t.l, t.w + k, t.coeff * qpow(p, 6 * k)});
  return out;
}

std::vector<IotaTerm> build_D(const EtaleQuadratic& L, int rmax) {
  return times_zeta(L, build_D_prime(L, rmax), rmax);
}

FormalSeries evaluate(const EtaleQuadratic& L, const std::vector<IotaTerm>& terms) {
  FormalSeries out(L.disc());
  for (const auto& t : terms) out.add_lambda(t.q, iota_class(L, t.r, t.l), t.w, CyclotomicValue(1) * t.coeff);
  return out;
}

FormalSeries apply_N(const EtaleQuadratic& L, const std::vector<IotaTerm>& terms, int rmax, Reduction red) {
  const unsigned p = L.prime();
  const mpq_class c2 = qpow(p, 4) + qpow(p, 2) + 1;
  FormalSeries out(L.disc());
  for (const auto& t : terms) {
    FormalSeries lam(L.disc());
    lam.add_lambda(0, iota_class(L, t.r, t.l), 0, CyclotomicValue(1));
    auto place = [&](const FormalSeries& s, int dq, int dw, const mpq_class& c) {
      if (t.q + dq <= rmax) out += s.shifted(t.q + dq, t.w + dw).scaled(c * t.coeff);
    };
    place(lam, 0, 0, 1);
    if (t.q + 2 > rmax) continue;
    FormalSeries t23 = hecke_on_iota(L, HeckeOp::T23, t.r, t.l, red);
    place(t23, 2, 0, -qpow(p, 2));
    place(lam, 2, 1, -qpow(p, 2) * c2);
    if (t.q + 3 <= rmax) place(hecke_on_iota(L, HeckeOp::T03, t.r, t.l, red), 3, 1, qpow(p, 4) * (1 + p));
    place(t23, 4, 1, -qpow(p, 7));
    place(lam, 4, 2, -qpow(p, 7) * c2);
    place(lam, 6, 3, qpow(p, 15));
  }
  return out;
}

FormalSeries rhs_closed_form(const EtaleQuadratic& L, int rmax) {
  const unsigned p = L.prime();
  const CyclotomicValue one(1);
  FormalSeries out(L.disc());
  for (int r = 0; r <= rmax; ++r) {
    out.add_lambda(r, iota_class(L, r, {0, 0}), 0, one * qpow(p, 6 * r));
    if (r >= 1) out.add_lambda(r, iota_class(L, r - 1, {0, 0}) * tau(p), 0, one * -qpow(p, 6 * r - 6));
    if (!L.split()) continue;
    for (int k = 1; k <= r; ++k)
      for (EllClass l : {EllClass{k, 0}, EllClass{0, k}})
        out.add_lambda(r, iota_class(L, r, l), 0, one * qpow(p, 6 * r - 2 * k));
    for (int j = 0; j <= r - 2; ++j)
      for (EllClass l : {EllClass{j, 0}, EllClass{0, j}})
        out.add_lambda(r, iota_class(L, r - 2, l), 1, one * -qpow(p, 6 * r - 8 - 2 * j));
  }
  return out;
}

std::string first_difference(const FormalSeries& a, const FormalSeries& b, const SymbolTable& table) {
  FormalSeries diff = a;
  diff -= b;
  if (diff.is_zero()) return "";
  const auto& [m, c] = *diff.terms().begin();
  std::ostringstream os;
  auto get = [&](const FormalSeries& s) {
    auto it = s.terms().find(m);
    return it == s.terms().end() ? std::string("0") : it->second.str();
  };
  os << "q^" << m.q << " w^" << m.w << " " << table.label(m.key) << ": " << get(a) << " vs " << get(b);
  return os.str();
}

bool VerificationReport::passed() const {
  if (opaque_symbols != 0) return false;
  for (const auto& c : comparisons)
    if (!c.equal) return false;
  return !comparisons.empty();
}

nlohmann::json VerificationReport::to_json(bool timings) const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : comparisons) {
    nlohmann::json j{{"name", c.name}, {"equal", c.equal}};
    if (!c.equal) j["first_discrepancy"] = c.first_discrepancy;
    checks.push_back(j);
  }
  nlohmann::json out{{"case", split ? "split" : "inert"},
          {"p", p},
          {"D", D},
          {"Rmax", rmax},
          {"coefficients", coefficients},
          {"checks", checks},
          {"opaque_symbols", opaque_symbols},
          {"status", passed() ? "pass" : "fail"}};
  if (timings) out["seconds"] = seconds;
  return out;
}

VerificationReport verify_main_identity(const EtaleQuadratic& L, int rmax) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.split = L.split();
  rep.p = L.prime();
  rep.D = L.disc();
  rep.rmax = rmax;
  SymbolTable table(L, rmax);
  FormalSeries lhs = lhs_series(L, rmax);
  FormalSeries lhs_cf = lhs_closed_form(L, rmax);
  FormalSeries nd = apply_N(L, build_D(L, rmax), rmax);
  FormalSeries rhs_cf = rhs_closed_form(L, rmax);
  auto compare = [&](const std::string& name, const FormalSeries& a, const FormalSeries& b) {
    std::string d = first_difference(a, b, table);
    rep.comparisons.push_back({name, d.empty(), d});
  };
  compare("lhs_bruteforce == lhs_closed_form", lhs, lhs_cf);
  compare("lhs_closed_form == N*D", lhs_cf, nd);
  compare("N*D == rhs_closed_form", nd, rhs_cf);
  for (const auto* s : {&lhs, &lhs_cf, &nd, &rhs_cf})
    for (const auto& [m, c] : s->terms())
      if (!table.known(m.key)) ++rep.opaque_symbols;
  rep.coefficients = nd.coefficients_json(table);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace spinlocal

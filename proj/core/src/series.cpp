#include "spinlocal/series.hpp"

#include <sstream>

namespace spinlocal {

void FormalSeries::add(const Monomial& m, const CyclotomicValue& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void FormalSeries::add_lambda(int q, const SiegelLevi& g, int w, const CyclotomicValue& c) {
  Canonical can = canonicalize(g, D_);
  if (can.vanishes) {
    ++vanished_;
    return;
  }
  CyclotomicValue coeff = can.phase == 0 ? c : c * CyclotomicValue::psi(g.prime(), can.phase);
  add({q, can.key, w + can.w_power}, coeff);
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

FormalSeries FormalSeries::scaled(const mpq_class& s) const {
  FormalSeries out(D_);
  mpq_class t = s;
  t.canonicalize();
  if (t == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * t);
  return out;
}

FormalSeries FormalSeries::shifted(int dq, int dw) const {
  FormalSeries out(D_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{m.q + dq, m.key, m.w + dw}, c);
  return out;
}

FormalSeries FormalSeries::truncated(int qmax) const {
  FormalSeries out(D_);
  for (const auto& [m, c] : terms_)
    if (m.q <= qmax) out.terms_.emplace(m, c);
  return out;
}

nlohmann::json FormalSeries::coefficients_json(const SymbolTable& table) const {
  nlohmann::json out = nlohmann::json::array();
  int current = 0;
  nlohmann::json* block = nullptr;
  for (const auto& [m, c] : terms_) {
    if (!block || m.q != current) {
      out.push_back({{"q_power", m.q}, {"terms", nlohmann::json::array()}});
      block = &out.back();
      current = m.q;
    }
    nlohmann::json t{{"symbol", table.label(m.key)}, {"w_power", m.w}};
    if (c.is_rational())
      t["rational"] = c.rational().get_str();
    else
      t["cyclotomic"] = c.str();
    (*block)["terms"].push_back(t);
  }
  return out;
}

std::string FormalSeries::str(const SymbolTable& table) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (m.w) os << "*w^" << m.w;
    os << "*" << table.label(m.key);
    if (m.q) os << "*q^" << m.q;
  }
  return first ? "0" : os.str();
}

}  // namespace spinlocal

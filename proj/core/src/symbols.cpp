#include "spinlocal/symbols.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "spinlocal/hnf.hpp"

namespace spinlocal {

bool operator<(const LambdaKey& a, const LambdaKey& b) {
  return std::tie(a.nu, a.e1, a.e2, a.c, a.beta) < std::tie(b.nu, b.e1, b.e2, b.c, b.beta);
}

bool operator==(const LambdaKey& a, const LambdaKey& b) {
  return a.nu == b.nu && a.e1 == b.e1 && a.e2 == b.e2 && a.c == b.c && a.beta == b.beta;
}

std::string LambdaKey::str() const {
  std::ostringstream os;
  os << "L[nu=" << nu << ";y=(" << e1 << "," << e2 << "," << beta.get_str() << ");z=" << c << "]";
  return os.str();
}

SiegelLevi LambdaKey::element(unsigned p) const {
  LMat B = diagonal(p, {qpow(p, e1), qpow(p, e2), qpow(p, c)});
  B(0, 1) = LocalScalar(beta, p);
  return {B, LocalScalar(qpow(p, nu), p)};
}

namespace {

std::vector<std::pair<std::string, LMat>> unipotent_generators(unsigned p) {
  LocalScalar one(1L, p), zero(0L, p);
  std::vector<std::pair<std::string, LMat>> gens;
  gens.emplace_back("n_v(1,0)", n_v(p, one, zero));
  gens.emplace_back("n_v(0,1)", n_v(p, zero, one));
  LMat u = zero_matrix(p, 2, 2);
  u(0, 0) = one;
  gens.emplace_back("n_u(E11)", n_u(u));
  u(0, 0) = zero;
  u(1, 1) = one;
  gens.emplace_back("n_u(E22)", n_u(u));
  u(1, 1) = zero;
  u(0, 1) = one;
  u(1, 0) = one;
  gens.emplace_back("n_u(E12+E21)", n_u(u));
  return gens;
}

int min_entry_valuation(const LMat& m) {
  int v = kValInfinity;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_exact_zero()) v = std::min(v, m(i, j).valuation());
  return v;
}

}  // namespace

std::optional<std::string> vanish_by_unipotent(const SiegelLevi& g, long D) {
  unsigned p = g.prime();
  LMat G = g.full();
  LMat Gi = SiegelLevi{inverse(g.B), g.nu.inverse()}.full();
  for (const auto& [name, n] : unipotent_generators(p)) {
    LocalScalar e = chi_exponent(G * n * Gi, D);
    if (!e.is_integral()) return name + " -> psi(" + e.value().get_str() + ")";
  }
  return std::nullopt;
}

Canonical canonicalize(const SiegelLevi& g, long D) {
  unsigned p = g.prime();
  auto h = hermite_normal_form_local(g.B);
  const LMat& H = h.H;
  Canonical out;
  int nu_val = g.nu.valuation();
  mpq_class z = qpow(p, h.exponents[2]);
  // g ~ (H, p^v) = n_v(-gamma / z) * diag(y, z)
  out.phase = LocalScalar(-H(0, 2).value() / z, p).fractional_part();
  LMat B0 = diagonal(p, {qpow(p, h.exponents[0]), qpow(p, h.exponents[1]), z});
  B0(0, 1) = H(0, 1);
  SiegelLevi g0{B0, LocalScalar(qpow(p, nu_val), p)};
  if (auto cert = vanish_by_unipotent(g0, D)) {
    out.vanishes = true;
    out.certificate = *cert;
    return out;
  }
  int k = std::min(min_entry_valuation(g0.B), min_entry_valuation(g0.A()));
  out.w_power = k;
  out.key.nu = nu_val - 2 * k;
  out.key.e1 = h.exponents[0] - k;
  out.key.e2 = h.exponents[1] - k;
  out.key.c = h.exponents[2] - k;
  out.key.beta = H(0, 1).value() / qpow(p, k);
  return out;
}

std::vector<EllClass> support_classes(const EtaleQuadratic& L, int r) {
  std::vector<EllClass> out;
  if (L.split()) {
    for (int a = 0; a <= r; ++a)
      for (int b = 0; a + b <= r; ++b) out.push_back({a, b});
  } else {
    for (int k = 0; 2 * k <= r; ++k) out.push_back({k, 0});
  }
  return out;
}

SymbolTable::SymbolTable(const EtaleQuadratic& L, int rmax) {
  unsigned p = L.prime();
  for (int r = 0; r <= rmax; ++r) {
    for (const auto& c : support_classes(L, r))
      add(iota_class(L, r, c), "Iota(" + std::to_string(r) + ";" + ell_label(L, c) + ")", L.disc());
    add(iota_class(L, r, {0, 0}) * tau(p), "IotaTau(" + std::to_string(r) + ";1)", L.disc());
  }
}

void SymbolTable::add(const SiegelLevi& g, const std::string& name, long D) {
  Canonical c = canonicalize(g, D);
  if (c.vanishes) return;
  if (c.phase != 0 || c.w_power != 0) {
    collisions_.push_back(name + " is not in canonical position");
    return;
  }
  auto [it, inserted] = labels_.emplace(c.key, name);
  if (!inserted && it->second != name) collisions_.push_back(it->second + " == " + name);
}

std::string SymbolTable::label(const LambdaKey& key) const {
  auto it = labels_.find(key);
  return it == labels_.end() ? key.str() : it->second;
}

}  // namespace spinlocal

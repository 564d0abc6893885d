#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinlocal/cyclotomic.hpp"
#include "spinlocal/groups.hpp"
#include "spinlocal/quadratic.hpp"

namespace spinlocal {

/// Canonical key of a lambda value on a Siegel-Levi element modulo right
/// GSp6(Z_p) intersected with the Levi, left chi-equivariance and the center:
/// the element diag(A, B) with B = diag([[p^e1, beta], [0, p^e2]], p^c) and
/// similitude p^nu, no further central power dividing it.
struct LambdaKey {
  int nu = 0;
  int e1 = 0, e2 = 0;
  mpq_class beta = 0;
  int c = 0;

  friend bool operator<(const LambdaKey& a, const LambdaKey& b);
  friend bool operator==(const LambdaKey& a, const LambdaKey& b);
  std::string str() const;
  SiegelLevi element(unsigned p) const;
};

/// lambda(g) = psi(phase) * w^{w_power} * lambda(key), or lambda(g) = 0 with a certificate.
struct Canonical {
  bool vanishes = false;
  LambdaKey key;
  int w_power = 0;
  mpq_class phase = 0;
  std::string certificate;
};

Canonical canonicalize(const SiegelLevi& g, long D);

/// Unipotent witness test on a block-diagonal element diag(y, z) (no gamma):
/// returns a certificate if some n in U_R(Z_p) has chi(g n g^{-1}) != 1.
std::optional<std::string> vanish_by_unipotent(const SiegelLevi& g, long D);

/// Labels Iota(r; l) and IotaTau(r; 1) for the support symbols, keyed by their
/// canonical keys; collisions between distinct labels are recorded.
class SymbolTable {
 public:
  SymbolTable(const EtaleQuadratic& L, int rmax);

  std::string label(const LambdaKey& key) const;
  bool known(const LambdaKey& key) const { return labels_.count(key) > 0; }
  const std::vector<std::string>& collisions() const { return collisions_; }
  std::size_t size() const { return labels_.size(); }

 private:
  void add(const SiegelLevi& g, const std::string& name, long D);
  std::map<LambdaKey, std::string> labels_;
  std::vector<std::string> collisions_;
};

/// All integral classes l with |p^r| <= |l| <= 1.
std::vector<EllClass> support_classes(const EtaleQuadratic& L, int r);

}  // namespace spinlocal

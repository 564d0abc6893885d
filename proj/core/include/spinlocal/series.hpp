#pragma once

#include <map>
#include <string>
#include <tuple>

#include "json.hpp"
#include "spinlocal/cyclotomic.hpp"
#include "spinlocal/symbols.hpp"

namespace spinlocal {

/// Monomial q^q w^w lambda(key).
struct Monomial {
  int q = 0;
  LambdaKey key;
  int w = 0;

  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.q != b.q) return a.q < b.q;
    if (!(a.key == b.key)) return a.key < b.key;
    return a.w < b.w;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.q == b.q && a.key == b.key && a.w == b.w;
  }
};

/// Finite sum of cyclotomic multiples of monomials; q = p^{-s}.
class FormalSeries {
 public:
  explicit FormalSeries(long D = 0) : D_(D) {}

  long disc() const { return D_; }
  void add(const Monomial& m, const CyclotomicValue& c);
  /// coeff * w^w * q^q * lambda(g), with g reduced to its canonical key.
  void add_lambda(int q, const SiegelLevi& g, int w, const CyclotomicValue& c);

  FormalSeries& operator+=(const FormalSeries& o);
  FormalSeries& operator-=(const FormalSeries& o);
  FormalSeries scaled(const mpq_class& s) const;
  /// Multiply by q^dq w^dw.
  FormalSeries shifted(int dq, int dw) const;
  FormalSeries truncated(int qmax) const;

  const std::map<Monomial, CyclotomicValue>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const FormalSeries& o) const { return terms_ == o.terms_; }
  std::size_t vanished() const { return vanished_; }

  /// {q_power, terms: [{symbol, w_power, rational}]} sorted by q.
  nlohmann::json coefficients_json(const SymbolTable& table) const;
  std::string str(const SymbolTable& table) const;

 private:
  long D_;
  std::map<Monomial, CyclotomicValue> terms_;
  std::size_t vanished_ = 0;
};

}  // namespace spinlocal

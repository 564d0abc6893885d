#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace spinlocal {

/// Exact element of Q(zeta_{p^K}) written as sum c_j * psi(j / p^K), where psi
/// is the additive character of Q_p with kernel exactly Z_p.
///
/// Canonical form: at level K >= 1 no exponent has leading base-p digit p-1
/// (those are rewritten with sum_{i<p} zeta^{j0 + i p^{K-1}} = 0), and K is
/// the smallest level containing the value. Equal values compare equal.
class CyclotomicValue {
 public:
  CyclotomicValue() = default;
  explicit CyclotomicValue(const mpq_class& r);
  CyclotomicValue(long r) : CyclotomicValue(mpq_class(r)) {}

  /// psi(x) for x in Q; only the class of x in Q_p / Z_p matters.
  static CyclotomicValue psi(unsigned p, const mpq_class& x);

  unsigned prime() const { return p_; }
  int level() const { return level_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Rational value; throws std::domain_error if the value is irrational.
  mpq_class rational() const;
  const std::map<uint64_t, mpq_class>& terms() const { return terms_; }

  CyclotomicValue& operator+=(const CyclotomicValue& o);
  CyclotomicValue& operator-=(const CyclotomicValue& o);
  CyclotomicValue& operator*=(const mpq_class& s);
  CyclotomicValue operator-() const;
  friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) { return a += b; }
  friend CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b) { return a -= b; }
  friend CyclotomicValue operator*(CyclotomicValue a, const mpq_class& s) { return a *= s; }
  friend CyclotomicValue operator*(const mpq_class& s, CyclotomicValue a) { return a *= s; }
  friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b);
  friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  friend class CharacterCounter;
  void lift_to(unsigned p, int level);
  void canonicalize();
  uint64_t modulus() const;

  unsigned p_ = 0;
  int level_ = 0;
  std::map<uint64_t, mpq_class> terms_;
};

/// Exact sum of psi(x_i) over a finite list of exponents with denominators
/// dividing p^k. Throws std::invalid_argument for any other denominator.
CyclotomicValue character_sum(unsigned p, int k, const std::vector<mpq_class>& exponents);

/// Accumulates psi(j / p^level) with integer multiplicities; cheap for large sums.
class CharacterCounter {
 public:
  CharacterCounter(unsigned p, int level);
  void add(uint64_t j, uint64_t count = 1);
  unsigned prime() const { return p_; }
  int level() const { return level_; }
  uint64_t modulus() const { return mod_; }
  CyclotomicValue value() const;

 private:
  unsigned p_;
  int level_;
  uint64_t mod_;
  std::vector<uint64_t> counts_;
};

enum class FourierDomain { Qp, L };

/// Closed form of the Fourier inversion lemma: 1 iff v lies in p^n O_M
/// (or in 1 + p^n O_M when twisted). For M = L, v = v1 + v2 sqrt(D).
mpq_class fourier_indicator(unsigned p, FourierDomain domain, const mpq_class& v1,
                            const mpq_class& v2, int n, bool twisted);

/// The same quantity as an explicit character sum on a finite quotient grid.
mpq_class fourier_indicator_bruteforce(unsigned p, const mpq_class& D, FourierDomain domain,
                                       const mpq_class& v1, const mpq_class& v2, int n,
                                       bool twisted);

}  // namespace spinlocal

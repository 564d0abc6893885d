#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinlocal {

/// Valuation of zero.
inline constexpr int kValInfinity = INT_MAX;
/// Absolute precision of an exact value.
inline constexpr int64_t kExact = INT64_MAX / 4;

class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotASquare : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int valuation(const mpz_class& n, unsigned p);
int valuation(const mpq_class& x, unsigned p);
mpz_class ipow(unsigned p, unsigned e);
mpq_class qpow(unsigned p, int e);

/// Legendre symbol (a|p) for odd prime p; 0 when p divides a.
int legendre(const mpz_class& a, unsigned p);

/// Element of Q_p. Either an exact rational, or a rational representative
/// known modulo p^precision (absolute). Truncated values are kept in a
/// canonical digit form so that equal classes have equal representatives.
class LocalScalar {
 public:
  LocalScalar() = default;
  LocalScalar(mpq_class value, unsigned p);
  LocalScalar(long value, unsigned p) : LocalScalar(mpq_class(value), p) {}

  static LocalScalar truncated(const mpq_class& value, int64_t abs_precision, unsigned p);

  unsigned prime() const { return p_; }
  bool exact() const { return precision_ >= kExact; }
  int64_t precision() const { return precision_; }
  const mpq_class& value() const { return value_; }

  /// Certified valuation; throws PrecisionExhausted when the value is zero to
  /// the working precision. Returns kValInfinity for an exact zero.
  int valuation() const;
  /// Lower bound on the valuation that never throws.
  int64_t valuation_lower_bound() const;

  /// x in p^k Z_p. Throws when undecidable at the tracked precision.
  bool in_pk(int k) const;
  bool is_integral() const { return in_pk(0); }
  /// Certified zero test (exact zero only, or throws).
  bool is_zero() const;
  bool is_exact_zero() const { return exact() && value_ == 0; }

  /// Class of x in Q_p / Z_p as a rational in [0,1) with p-power denominator.
  mpq_class fractional_part() const;
  /// Representative of x modulo p^k Z_p, as a rational in [0, p^k).
  mpq_class residue_mod(int k) const;

  /// Unit part x / p^v reduced modulo p^k (integer in [0, p^k)).
  mpz_class unit_residue(int k) const;

  LocalScalar inverse() const;
  LocalScalar operator-() const;
  LocalScalar& operator+=(const LocalScalar& o);
  LocalScalar& operator-=(const LocalScalar& o);
  LocalScalar& operator*=(const LocalScalar& o);
  LocalScalar& operator/=(const LocalScalar& o);

  friend LocalScalar operator+(LocalScalar a, const LocalScalar& b) { return a += b; }
  friend LocalScalar operator-(LocalScalar a, const LocalScalar& b) { return a -= b; }
  friend LocalScalar operator*(LocalScalar a, const LocalScalar& b) { return a *= b; }
  friend LocalScalar operator/(LocalScalar a, const LocalScalar& b) { return a /= b; }

  /// Equality of classes: certified when the difference is decidable.
  bool equals(const LocalScalar& o) const;

  std::string str() const;

 private:
  void normalize();
  unsigned merge_prime(const LocalScalar& o) const;

  mpq_class value_{0};
  int64_t precision_ = kExact;
  unsigned p_ = 0;
};

/// h with h^2 = D mod p^N, residue mod p in [1, (p-1)/2].
struct TruncatedPadic {
  mpz_class residue;  // in [0, p^precision)
  int precision = 0;
  unsigned prime = 0;

  LocalScalar to_scalar() const {
    return LocalScalar::truncated(mpq_class(residue), precision, prime);
  }
};

TruncatedPadic hensel_sqrt(const mpz_class& D, unsigned p, int precision);

}  // namespace spinlocal

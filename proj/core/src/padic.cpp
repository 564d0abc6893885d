#include "spinlocal/padic.hpp"

#include <algorithm>
#include <sstream>

namespace spinlocal {

int valuation(const mpz_class& n, unsigned p) {
  if (n == 0) return kValInfinity;
  mpz_class m = abs(n);
  int v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int valuation(const mpq_class& x, unsigned p) {
  if (x == 0) return kValInfinity;
  return valuation(mpz_class(x.get_num()), p) - valuation(mpz_class(x.get_den()), p);
}

mpz_class ipow(unsigned p, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

mpq_class qpow(unsigned p, int e) {
  if (e >= 0) return mpq_class(ipow(p, static_cast<unsigned>(e)));
  return mpq_class(mpz_class(1), ipow(p, static_cast<unsigned>(-e)));
}

int legendre(const mpz_class& a, unsigned p) {
  mpz_class pp(p);
  mpz_class r = a % pp;
  if (r < 0) r += pp;
  return mpz_legendre(r.get_mpz_t(), pp.get_mpz_t());
}

namespace {

// Representative of x (p-integral after scaling by p^s) modulo p^(k+s), divided by p^s.
mpq_class reduce_mod(const mpq_class& x, unsigned p, int64_t k) {
  if (x == 0) return 0;
  int v = valuation(x, p);
  if (v >= k) return 0;
  int s = std::max(0, -v);
  mpq_class scaled = x * qpow(p, s);
  mpz_class n = scaled.get_num();
  mpz_class d = scaled.get_den();
  mpz_class mod = ipow(p, static_cast<unsigned>(k + s));
  mpz_class dinv;
  mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
  mpz_class r = (n * dinv) % mod;
  if (r < 0) r += mod;
  mpq_class out(r, ipow(p, static_cast<unsigned>(s)));
  out.canonicalize();
  return out;
}

}  // namespace

LocalScalar::LocalScalar(mpq_class value, unsigned p) : value_(std::move(value)), p_(p) {
  value_.canonicalize();
}

LocalScalar LocalScalar::truncated(const mpq_class& value, int64_t abs_precision, unsigned p) {
  LocalScalar s(value, p);
  s.precision_ = std::min(abs_precision, kExact);
  s.normalize();
  return s;
}

void LocalScalar::normalize() {
  if (exact()) return;
  value_ = reduce_mod(value_, p_, precision_);
}

unsigned LocalScalar::merge_prime(const LocalScalar& o) const {
  if (p_ == 0) return o.p_;
  if (o.p_ != 0 && o.p_ != p_) throw std::logic_error("LocalScalar: mixed primes");
  return p_;
}

int LocalScalar::valuation() const {
  if (value_ == 0) {
    if (exact()) return kValInfinity;
    throw PrecisionExhausted("valuation undecidable: value is zero to precision " +
                             std::to_string(precision_));
  }
  return spinlocal::valuation(value_, p_);
}

int64_t LocalScalar::valuation_lower_bound() const {
  if (value_ == 0) return exact() ? kExact : precision_;
  return spinlocal::valuation(value_, p_);
}

bool LocalScalar::in_pk(int k) const {
  if (value_ == 0) {
    if (exact() || k <= precision_) return true;
    throw PrecisionExhausted("membership in p^" + std::to_string(k) +
                             "Z_p undecidable at precision " + std::to_string(precision_));
  }
  return spinlocal::valuation(value_, p_) >= k;
}

bool LocalScalar::is_zero() const {
  if (value_ != 0) return false;
  if (exact()) return true;
  throw PrecisionExhausted("zero test undecidable at precision " + std::to_string(precision_));
}

mpq_class LocalScalar::fractional_part() const {
  if (!exact() && precision_ < 0)
    throw PrecisionExhausted("fractional part needs nonnegative precision");
  if (value_ == 0) return 0;
  int v = spinlocal::valuation(value_, p_);
  if (v >= 0) return 0;
  return reduce_mod(value_, p_, 0);
}

mpq_class LocalScalar::residue_mod(int k) const {
  if (!exact() && precision_ < k)
    throw PrecisionExhausted("residue mod p^" + std::to_string(k) + " needs more precision");
  return reduce_mod(value_, p_, k);
}

mpz_class LocalScalar::unit_residue(int k) const {
  int v = valuation();
  if (!exact() && precision_ - v < k)
    throw PrecisionExhausted("unit residue mod p^" + std::to_string(k) + " needs more precision");
  mpq_class u = value_ * qpow(p_, -v);
  return mpz_class(reduce_mod(u, p_, k));
}

LocalScalar LocalScalar::inverse() const {
  int v = valuation();
  if (v == kValInfinity) throw std::domain_error("inverse of zero");
  LocalScalar r(1 / value_, p_);
  if (!exact()) {
    r.precision_ = precision_ - 2 * static_cast<int64_t>(v);
    r.normalize();
  }
  return r;
}

LocalScalar LocalScalar::operator-() const {
  LocalScalar r = *this;
  r.value_ = -r.value_;
  r.normalize();
  return r;
}

LocalScalar& LocalScalar::operator+=(const LocalScalar& o) {
  p_ = merge_prime(o);
  value_ += o.value_;
  precision_ = std::min(precision_, o.precision_);
  normalize();
  return *this;
}

LocalScalar& LocalScalar::operator-=(const LocalScalar& o) {
  p_ = merge_prime(o);
  value_ -= o.value_;
  precision_ = std::min(precision_, o.precision_);
  normalize();
  return *this;
}

LocalScalar& LocalScalar::operator*=(const LocalScalar& o) {
  p_ = merge_prime(o);
  if (is_exact_zero() || o.is_exact_zero()) {
    value_ = 0;
    precision_ = kExact;
    return *this;
  }
  int64_t prec = kExact;
  if (!exact()) prec = std::min(prec, precision_ + o.valuation_lower_bound());
  if (!o.exact()) prec = std::min(prec, o.precision_ + valuation_lower_bound());
  value_ *= o.value_;
  precision_ = std::min(prec, kExact);
  normalize();
  return *this;
}

LocalScalar& LocalScalar::operator/=(const LocalScalar& o) { return *this *= o.inverse(); }

bool LocalScalar::equals(const LocalScalar& o) const {
  LocalScalar d = *this - o;
  return d.value_ == 0;
}

std::string LocalScalar::str() const {
  std::ostringstream os;
  os << value_.get_str();
  if (!exact()) os << " + O(" << p_ << "^" << precision_ << ")";
  return os.str();
}

TruncatedPadic hensel_sqrt(const mpz_class& D, unsigned p, int precision) {
  if (p == 2) throw std::invalid_argument("hensel_sqrt: p must be odd");
  if (D % p == 0) throw std::invalid_argument("hensel_sqrt: p divides D");
  if (legendre(D, p) != 1)
    throw NotASquare(D.get_str() + " is not a square mod " + std::to_string(p));
  mpz_class pp(p);
  mpz_class root = 0;
  for (unsigned r = 1; r <= (p - 1) / 2; ++r) {
    mpz_class diff = mpz_class(r) * r - D;
    if (diff % pp == 0) {
      root = r;
      break;
    }
  }
  mpz_class mod = ipow(p, static_cast<unsigned>(precision));
  mpz_class dmod = D % mod;
  if (dmod < 0) dmod += mod;
  // Newton iteration; each step at least doubles the correct digits.
  for (int correct = 1; correct < precision; correct *= 2) {
    mpz_class inv;
    mpz_class twice = (2 * root) % mod;
    mpz_invert(inv.get_mpz_t(), twice.get_mpz_t(), mod.get_mpz_t());
    root = (root - (root * root - dmod) * inv) % mod;
    if (root < 0) root += mod;
  }
  root %= mod;
  return TruncatedPadic{root, precision, p};
}

}  // namespace spinlocal

#include "spinlocal/cyclotomic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "spinlocal/padic.hpp"

namespace spinlocal {

namespace {

uint64_t upow(unsigned p, int e) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// Class of x in Q_p/Z_p as (numerator, level) with numerator in [0, p^level).
std::pair<uint64_t, int> fractional_digits(unsigned p, const mpq_class& x) {
  mpq_class f = LocalScalar(x, p).fractional_part();
  if (f == 0) return {0, 0};
  int level = -valuation(f, p);
  mpq_class numq = f * mpq_class(ipow(p, level));
  mpz_class num = numq.get_num();
  return {num.get_ui(), level};
}

}  // namespace

CyclotomicValue::CyclotomicValue(const mpq_class& r) {
  mpq_class c = r;
  c.canonicalize();
  if (c != 0) terms_[0] = c;
}

CyclotomicValue CyclotomicValue::psi(unsigned p, const mpq_class& x) {
  CyclotomicValue v;
  auto [j, level] = fractional_digits(p, x);
  v.p_ = p;
  v.level_ = level;
  v.terms_[j] = 1;
  v.canonicalize();
  return v;
}

uint64_t CyclotomicValue::modulus() const { return upow(p_, level_); }

bool CyclotomicValue::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

mpq_class CyclotomicValue::rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
  return terms_.empty() ? mpq_class(0) : terms_.begin()->second;
}

void CyclotomicValue::lift_to(unsigned p, int level) {
  if (p != 0) {
    if (p_ != 0 && p_ != p) throw std::logic_error("CyclotomicValue: mixed primes");
    p_ = p;
  }
  if (level <= level_) return;
  uint64_t scale = upow(p_, level - level_);
  std::map<uint64_t, mpq_class> lifted;
  for (auto& [j, c] : terms_) lifted[j * scale] = c;
  terms_ = std::move(lifted);
  level_ = level;
}

void CyclotomicValue::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) it = terms_.erase(it);
    else ++it;
  }
  if (level_ == 0) return;
  uint64_t step = upow(p_, level_ - 1);
  uint64_t top = step * (p_ - 1);
  std::vector<std::pair<uint64_t, mpq_class>> moved;
  for (auto it = terms_.lower_bound(top); it != terms_.end();) {
    moved.emplace_back(it->first - top, it->second);
    it = terms_.erase(it);
  }
  for (auto& [j0, c] : moved)
    for (unsigned i = 0; i + 1 < p_; ++i) terms_[j0 + i * step] -= c;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) it = terms_.erase(it);
    else ++it;
  }
  while (level_ > 0 &&
         std::all_of(terms_.begin(), terms_.end(), [&](auto& t) { return t.first % p_ == 0; })) {
    std::map<uint64_t, mpq_class> shrunk;
    for (auto& [j, c] : terms_) shrunk[j / p_] = c;
    terms_ = std::move(shrunk);
    --level_;
  }
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& o) {
  if (o.terms_.empty()) return *this;
  CyclotomicValue rhs = o;
  int level = std::max(level_, o.level_);
  unsigned p = p_ ? p_ : o.p_;
  lift_to(p, level);
  rhs.lift_to(p, level);
  for (auto& [j, c] : rhs.terms_) terms_[j] += c;
  canonicalize();
  return *this;
}

CyclotomicValue& CyclotomicValue::operator-=(const CyclotomicValue& o) { return *this += -o; }

CyclotomicValue& CyclotomicValue::operator*=(const mpq_class& s) {
  if (s == 0) {
    terms_.clear();
    level_ = 0;
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

CyclotomicValue CyclotomicValue::operator-() const {
  CyclotomicValue r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b) {
  CyclotomicValue x = a, y = b;
  int level = std::max(a.level_, b.level_);
  unsigned p = a.p_ ? a.p_ : b.p_;
  x.lift_to(p, level);
  y.lift_to(p, level);
  CyclotomicValue out;
  out.p_ = p;
  out.level_ = level;
  uint64_t mod = level ? x.modulus() : 1;
  for (auto& [i, c] : x.terms_)
    for (auto& [j, d] : y.terms_) out.terms_[(i + j) % mod] += c * d;
  out.canonicalize();
  return out;
}

std::string CyclotomicValue::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [j, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (j != 0) os << "*psi(" << j << "/" << p_ << "^" << level_ << ")";
  }
  return os.str();
}

CyclotomicValue character_sum(unsigned p, int k, const std::vector<mpq_class>& exponents) {
  mpz_class bound = ipow(p, k);
  CharacterCounter counter(p, k);
  for (const auto& x : exponents) {
    mpq_class scaled = x * mpq_class(bound);
    if (scaled.get_den() != 1)
      throw std::invalid_argument("character_sum: exponent " + x.get_str() +
                                  " has denominator not dividing p^k");
    mpz_class j = scaled.get_num() % bound;
    if (j < 0) j += bound;
    counter.add(j.get_ui());
  }
  return counter.value();
}

CharacterCounter::CharacterCounter(unsigned p, int level)
    : p_(p), level_(level), mod_(upow(p, level)), counts_(mod_, 0) {}

void CharacterCounter::add(uint64_t j, uint64_t count) { counts_[j % mod_] += count; }

CyclotomicValue CharacterCounter::value() const {
  if (level_ == 0) return CyclotomicValue(mpq_class(mpz_class(static_cast<unsigned long>(counts_[0]))));
  CyclotomicValue total;
  total.p_ = p_;
  total.level_ = level_;
  for (uint64_t j = 0; j < mod_; ++j)
    if (counts_[j] != 0) total.terms_[j] = mpq_class(mpz_class(static_cast<unsigned long>(counts_[j])));
  total.canonicalize();
  return total;
}

mpq_class fourier_indicator(unsigned p, FourierDomain domain, const mpq_class& v1,
                            const mpq_class& v2, int n, bool twisted) {
  mpq_class a = twisted ? v1 - 1 : v1;
  if (domain == FourierDomain::Qp && v2 != 0)
    throw std::invalid_argument("fourier_indicator: v2 must vanish over Q_p");
  auto in_pn = [&](const mpq_class& x) { return x == 0 || valuation(x, p) >= n; };
  return in_pn(a) && in_pn(v2) ? 1 : 0;
}

mpq_class fourier_indicator_bruteforce(unsigned p, const mpq_class& D, FourierDomain domain,
                                       const mpq_class& v1, const mpq_class& v2, int n,
                                       bool twisted) {
  // Integrate psi(a z1 + D b z2) over z in p^{-n}O, with |p|^n_M normalisation.
  mpq_class a = twisted ? v1 - 1 : v1;
  mpq_class b = domain == FourierDomain::L ? v2 : mpq_class(0);
  int dims = domain == FourierDomain::L ? 2 : 1;
  auto cell_exp = [&](const mpq_class& x) { return x == 0 ? 0 : std::max(0, -valuation(x, p)); };
  int K = std::max(cell_exp(a), cell_exp(D * b));
  int width = n + K;  // z = j / p^n with j mod p^{n+K}
  uint64_t count = upow(p, width);
  // psi(x j / p^n): exponent numerators in a common level.
  auto digits = [&](const mpq_class& x) { return fractional_digits(p, x / mpq_class(ipow(p, n))); };
  auto [ja, la] = digits(a);
  auto [jb, lb] = digits(D * b);
  int level = std::max(la, lb);
  uint64_t mod = upow(p, level);
  uint64_t sa = ja * upow(p, level - la) % std::max<uint64_t>(mod, 1);
  uint64_t sb = jb * upow(p, level - lb) % std::max<uint64_t>(mod, 1);
  // The sum factors over the coordinates.
  auto line_sum = [&](uint64_t step) {
    CharacterCounter counter(p, level);
    for (uint64_t j = 0; j < count; ++j) counter.add(mod ? (step * (j % mod)) % mod : 0);
    return counter.value();
  };
  CyclotomicValue total = line_sum(sa);
  if (dims == 2) total = total * line_sum(sb);
  // Each cell has measure p^{-K} per coordinate; |p|^n_M = p^{-n * dims}.
  mpq_class weight = qpow(p, -(n + K) * dims);
  return total.rational() * weight;
}

}  // namespace spinlocal

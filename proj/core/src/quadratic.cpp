#include "spinlocal/quadratic.hpp"

#include <stdexcept>

namespace spinlocal {

EtaleQuadratic::EtaleQuadratic(unsigned p, long D, int precision)
    : p_(p), D_(D), precision_(precision) {
  if (p == 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 25) == 0)
    throw std::invalid_argument("p must be an odd prime");
  if (D == 0 || D % static_cast<long>(p) == 0)
    throw std::invalid_argument("p must not divide 2D");
  split_ = legendre(mpz_class(D), p) == 1;
  if (split_) h_ = hensel_sqrt(mpz_class(D), p, precision);
}

const TruncatedPadic& EtaleQuadratic::h() const {
  if (!split_) throw std::logic_error("h exists only in the split case");
  return h_;
}

QuadElement quad(const EtaleQuadratic& L, const mpq_class& x, const mpq_class& y) {
  return {L.scalar(x), L.scalar(y)};
}

QuadElement mul(const EtaleQuadratic& L, const QuadElement& a, const QuadElement& b) {
  LocalScalar d = L.scalar(L.disc());
  return {a.x * b.x + d * a.y * b.y, a.x * b.y + a.y * b.x};
}

QuadElement scale(const QuadElement& a, const LocalScalar& s) { return {a.x * s, a.y * s}; }

LocalScalar norm(const EtaleQuadratic& L, const QuadElement& a) {
  return a.x * a.x - L.scalar(L.disc()) * a.y * a.y;
}

int norm_valuation(const EtaleQuadratic& L, const QuadElement& a) { return norm(L, a).valuation(); }

QuadElement inert_power(const EtaleQuadratic& L, int k) {
  return {LocalScalar(qpow(L.prime(), k), L.prime()), LocalScalar(0L, L.prime())};
}

QuadElement split_power(const EtaleQuadratic& L, int e1, int e2) {
  unsigned p = L.prime();
  LocalScalar a(qpow(p, e1), p), b(qpow(p, e2), p);
  LocalScalar half(mpq_class(1, 2), p);
  // x + h y = p^{e1}, x - h y = p^{e2}.
  return {(a + b) * half, (a - b) * half / L.h().to_scalar()};
}

LMat m_ell(const EtaleQuadratic& L, const QuadElement& l) {
  LMat m(2, 2, LocalScalar(0L, L.prime()));
  m(0, 0) = l.x;
  m(0, 1) = L.scalar(L.disc()) * l.y;
  m(1, 0) = l.y;
  m(1, 1) = l.x;
  return m;
}

QuadElement ell_element(const EtaleQuadratic& L, const EllClass& c) {
  return L.split() ? split_power(L, c.e1, c.e2) : inert_power(L, c.e1);
}

int ell_norm_valuation(const EtaleQuadratic& L, const EllClass& c) {
  return L.split() ? c.e1 + c.e2 : 2 * c.e1;
}

std::string ell_label(const EtaleQuadratic& L, const EllClass& c) {
  if (!L.split()) return c.e1 == 0 ? "1" : "p^" + std::to_string(c.e1);
  if (c.e1 == 0 && c.e2 == 0) return "1";
  std::string s;
  auto part = [&](int e, const char* name) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  };
  part(c.e1, "pi1");
  part(c.e2, "pi2");
  return s;
}

}  // namespace spinlocal

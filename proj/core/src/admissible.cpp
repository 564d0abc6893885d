#include "spinlocal/admissible.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

#include "spinlocal/groups.hpp"
#include "spinlocal/hnf.hpp"
#include "spinlocal/padic.hpp"

namespace spinlocal {

namespace {

int64_t ip(unsigned p, int e) {
  int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

int64_t mod(int64_t x, int64_t m) {
  int64_t r = x % m;
  return r < 0 ? r + m : r;
}

bool divisible(int64_t x, int64_t m) { return x % m == 0; }

bool in_pk(const mpq_class& x, unsigned p, int k) { return x == 0 || valuation(x, p) >= k; }

// Inverse of a unit modulo p^k (k >= 1).
int64_t inv_mod(int64_t x, int64_t m) {
  mpz_class r, xx = mod(x, m), mm = m;
  if (!mpz_invert(r.get_mpz_t(), xx.get_mpz_t(), mm.get_mpz_t()))
    throw std::domain_error("inv_mod: not a unit");
  return r.get_si();
}

}  // namespace

bool RepresentativeM::in_M(unsigned p) const { return a >= c && divisible(beta, ip(p, c)); }

bool RepresentativeM::reduced(unsigned p) const {
  return a >= 0 && b >= 0 && c >= 0 && beta >= 0 && beta < ip(p, a) && gamma1 >= 0 &&
         gamma1 < ip(p, a) && gamma2 >= 0 && gamma2 < ip(p, b);
}

LMat RepresentativeM::matrix(unsigned p) const {
  LMat m = diagonal(p, {qpow(p, a), qpow(p, b), qpow(p, c)});
  m(0, 1) = LocalScalar(mpq_class(beta), p);
  m(0, 2) = LocalScalar(mpq_class(gamma1), p);
  m(1, 2) = LocalScalar(mpq_class(gamma2), p);
  return m;
}

std::string RepresentativeM::str() const {
  std::ostringstream os;
  os << "m(a=" << a << ",b=" << b << ",c=" << c << ",beta=" << beta << ",g1=" << gamma1
     << ",g2=" << gamma2 << ")";
  return os.str();
}

bool operator<(const RepresentativeM& x, const RepresentativeM& y) {
  return std::tie(x.a, x.b, x.c, x.beta, x.gamma1, x.gamma2) <
         std::tie(y.a, y.b, y.c, y.beta, y.gamma1, y.gamma2);
}

bool operator==(const RepresentativeM& x, const RepresentativeM& y) {
  return std::tie(x.a, x.b, x.c, x.beta, x.gamma1, x.gamma2) ==
         std::tie(y.a, y.b, y.c, y.beta, y.gamma1, y.gamma2);
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm: return "closed_form";
    case Provenance::BruteForce: return "brute_force";
    case Provenance::Lattice: return "lattice";
  }
  return "?";
}

bool um_contains(const RepresentativeM& m, unsigned p, const mpq_class& u11, const mpq_class& u12,
                 const mpq_class& u22) {
  mpq_class pa = qpow(p, m.a), pb = qpow(p, m.b);
  mpq_class be = m.beta, g1 = m.gamma1, g2 = m.gamma2;
  mpq_class y00 = u11 * pa, y01 = u11 * be + u12 * pb, y10 = u12 * pa, y11 = u12 * be + u22 * pb;
  if (!in_pk(y00, p, 0) || !in_pk(y01, p, 0) || !in_pk(y10, p, 0) || !in_pk(y11, p, 0))
    return false;
  mpq_class first = g1 * y00 + g2 * y10, second = g1 * y01 + g2 * y11;
  return in_pk(first, p, m.c) && in_pk(second, p, std::min(m.b, m.c));
}

AdmissibleRecord admissible_bruteforce(const RepresentativeM& m, unsigned p, long D) {
  // Numerators over S = p^{a+b}; classes modulo p^c Sym_2(Z_p) are numerators mod W = p^c S.
  const int a = m.a, b = m.b, c = m.c, e = std::min(b, c);
  const int64_t S = ip(p, a + b), W = ip(p, a + b + c), pa = ip(p, a), pb = ip(p, b);
  const int64_t be = m.beta, g1 = m.gamma1, g2 = m.gamma2;
  const int64_t peS = ip(p, e) * S, pcS = ip(p, c) * S;
  const int64_t Dm = mod(D, W);
  AdmissibleRecord rec{m, true, 0, Provenance::BruteForce, 0};
  uint64_t count = 0;
  for (int64_t I = 0; I < W; I += pb) {      // u11 in p^-a Z_p
    for (int64_t J = 0; J < W; J += pb) {    // u12 in p^-a Z_p
      if (!divisible(I * be + J * pb, S)) continue;
      if (!divisible(pa * (I * g1 + J * g2), pcS)) continue;
      // u12 beta + u22 p^b integral pins K modulo p^a.
      if (!divisible(J * be, pb)) continue;
      int64_t k0 = mod(-(J * be) / pb, pa);
      for (int64_t K = k0; K < W; K += pa) {
        if (!divisible((I * be + J * pb) * g1 + (J * be + K * pb) * g2, peS)) continue;
        ++count;
        if (!divisible(mod(K - Dm * I, W), S)) {
          rec.admissible = false;
          rec.classes = count;
          return rec;
        }
      }
    }
  }
  rec.classes = count;
  rec.B = mpq_class(ip(p, 2 * c + e)) * mpq_class(count) / mpq_class(ip(p, 3 * c));
  return rec;
}

AdmissibleRecord admissible_lattice(const RepresentativeM& m, unsigned p, long D) {
  const int e = std::min(m.b, m.c);
  mpq_class pa = qpow(p, m.a), pb = qpow(p, m.b), pc = qpow(p, m.c), pe = qpow(p, e);
  mpq_class be = m.beta, g1 = m.gamma1, g2 = m.gamma2;
  QMat F(6, 3, mpq_class(0));
  F(0, 0) = pa;
  F(1, 0) = be;
  F(1, 1) = pb;
  F(2, 1) = pa;
  F(3, 1) = be;
  F(3, 2) = pb;
  F(4, 0) = pa * g1 / pc;
  F(4, 1) = pa * g2 / pc;
  F(5, 0) = be * g1 / pe;
  F(5, 1) = (pb * g1 + be * g2) / pe;
  F(5, 2) = pb * g2 / pe;
  QMat R = local_row_echelon(F, p);
  QMat basis = inverse(R);
  AdmissibleRecord rec{m, true, 0, Provenance::Lattice, 0};
  for (std::size_t j = 0; j < 3; ++j) {
    mpq_class chi = -mpq_class(D) * basis(0, j) + basis(2, j);
    if (!in_pk(chi, p, 0)) {
      rec.admissible = false;
      return rec;
    }
  }
  rec.B = qpow(p, 2 * m.c + e + valuation(determinant(R), p));
  return rec;
}

AdmissibleRecord admissible_classify(const RepresentativeM& m, unsigned p, long D, bool split) {
  AdmissibleRecord rec{m, false, 0, Provenance::ClosedForm, 0};
  const int a = m.a, b = m.b, c = m.c;
  auto unit = [&](int64_t x) { return !divisible(x, p); };
  auto admit = [&](int exponent) {
    rec.admissible = true;
    rec.B = qpow(p, exponent);
    return rec;
  };
  // gamma1 * gamma2^{-1} squared minus D, modulo p^k.
  auto ratio_sq_ok = [&](int k) {
    if (k <= 0) return true;
    int64_t pk = ip(p, k);
    int64_t g = mod(mod(m.gamma1, pk) * inv_mod(m.gamma2, pk), pk);
    return divisible(mod(g * g - D, pk), pk);
  };
  if (!split) {
    if (b == 0 && c == a && m.beta == 0 && m.gamma2 == 0 && (a == 0 || unit(m.gamma1)))
      return admit(2 * a);
    return rec;
  }
  if (b == 0 && c == 0) {
    int64_t pa = ip(p, a);
    if (divisible(mod(m.beta * m.beta - D, pa), pa)) return admit(a);
    return rec;
  }
  if (b == 0 && a == c && a >= 1) {
    if (m.beta == 0 && unit(m.gamma1)) return admit(2 * a);
    return rec;
  }
  if (a == c && c >= b && b >= 1) {
    if (m.beta == 0 && unit(m.gamma1) && unit(m.gamma2) && ratio_sq_ok(b)) return admit(2 * a + 2 * b);
    return rec;
  }
  if (a > c && c == b && b >= 1) {
    int64_t pc = ip(p, c);
    if (!divisible(m.beta, pc) || !unit(m.gamma1) || !unit(m.gamma2) || !ratio_sq_ok(c)) return rec;
    int64_t b0 = m.beta / pc;
    int64_t pac = ip(p, a - c);
    if (!divisible(mod(b0 * b0 - D, pac), pac)) return rec;
    int64_t pk = ip(p, std::min(a - c, c));
    int64_t g = mod(mod(m.gamma1, pk) * inv_mod(m.gamma2, pk), pk);
    if (!divisible(mod(b0 + g, pk), pk)) return rec;
    return admit(a + 3 * c);
  }
  return rec;
}

std::vector<RepresentativeM> enumerate_M(unsigned p, int amax, int bmax, int cmax) {
  std::vector<RepresentativeM> out;
  for (int a = 0; a <= amax; ++a)
    for (int b = 0; b <= bmax; ++b)
      for (int c = 0; c <= std::min(a, cmax); ++c) {
        int64_t pa = ip(p, a), pb = ip(p, b), pc = ip(p, c);
        for (int64_t be = 0; be < pa; be += pc)
          for (int64_t g1 = 0; g1 < pa; ++g1)
            for (int64_t g2 = 0; g2 < pb; ++g2) out.push_back({a, b, c, be, g1, g2});
      }
  return out;
}

RepresentativeM um_class(const RepresentativeM& m, unsigned p) {
  RepresentativeM r = m;
  int64_t pc = ip(p, m.c);
  r.gamma1 = mod(m.gamma1, pc);
  r.gamma2 = mod(m.gamma2, pc);
  return r;
}

mpq_class uprime_integral_bruteforce(const RepresentativeM& m, unsigned p, const mpq_class& u11,
                                     const mpq_class& u12, const mpq_class& u22) {
  int du = 0;
  for (const auto* x : {&u11, &u12, &u22})
    if (*x != 0) du = std::max(du, -valuation(*x, p));
  const int K = m.c + du, M = K + m.c;
  const int64_t pK = ip(p, K), pM = ip(p, M);
  LMat mm = m.matrix(p);
  QMat y(3, 3, mpq_class(0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) y(i, j) = mm(i, j).value();
  uint64_t count = 0;
  for (int64_t i1 = 0; i1 < pK; ++i1)
    for (int64_t i2 = 0; i2 < pK; ++i2)
      for (int64_t k = 0; k < pM; ++k) {
        mpq_class r1(i1, pK), r2(i2, pK), u3(k, pM);
        r1.canonicalize();
        r2.canonicalize();
        u3.canonicalize();
        QMat X(3, 3, mpq_class(0));
        X(0, 0) = r1;
        X(0, 1) = r2;
        X(0, 2) = u3;
        X(1, 0) = u11;
        X(1, 1) = u12;
        X(1, 2) = r1;
        X(2, 0) = u12;
        X(2, 1) = u22;
        X(2, 2) = r2;
        QMat P = X * y;
        bool ok = true;
        for (std::size_t a = 0; a < 3 && ok; ++a)
          for (std::size_t b = 0; b < 3 && ok; ++b) ok = in_pk(P(a, b), p, 0);
        if (ok) ++count;
      }
  return mpq_class(count);
}

}  // namespace spinlocal

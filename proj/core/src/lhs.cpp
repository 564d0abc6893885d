#include "spinlocal/lhs.hpp"

#include <map>

#include "spinlocal/cyclotomic.hpp"
#include "spinlocal/symbols.hpp"

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

bool all_integral(const LMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_integral()) return false;
  return true;
}

}  // namespace

SiegelLevi siegel_levi_element(const RepresentativeM& m, unsigned p, int r) {
  return {m.matrix(p), LocalScalar(qpow(p, r + m.c), p)};
}

SiegelLevi levi_part(const RepresentativeM& m, unsigned p, int r) {
  LMat B = diagonal(p, {qpow(p, m.a), qpow(p, m.b), qpow(p, m.c)});
  B(0, 1) = LocalScalar(mpq_class(m.beta), p);
  return {B, LocalScalar(qpow(p, r + m.c), p)};
}

mpq_class integral_C(const AdmissibleRecord& rec, int r) {
  if (!rec.admissible) return 0;
  return r >= rec.m.a ? rec.B : mpq_class(0);
}

mpq_class integral_C_bruteforce(const AdmissibleRecord& rec, unsigned p, int r, int K) {
  if (!rec.admissible) return 0;
  const RepresentativeM& m = rec.m;
  LMat G = levi_part(m, p, r).full();
  const int64_t pK = ip(p, K);
  mpq_class pc = qpow(p, m.c);
  CyclotomicValue acc;
  for (int64_t k1 = 0; k1 < pK; ++k1)
    for (int64_t k2 = 0; k2 < pK; ++k2) {
      mpq_class c1 = mpq_class(m.gamma1 + ip(p, m.a) * k1 + m.beta * k2);
      mpq_class c2 = mpq_class(m.gamma2 + ip(p, m.b) * k2);
      mpq_class v1 = -c1 / pc, v2 = -c2 / pc;
      LMat N = n_v(p, LocalScalar(v1, p), LocalScalar(v2, p)) * G;
      if (all_integral(N)) acc += CyclotomicValue::psi(p, v1);
    }
  // The class measure cancels against the normalization; only the grid weight remains.
  acc = acc * CyclotomicValue::psi(p, mpq_class(m.gamma1) / pc);
  acc *= rec.B / mpq_class(pK * pK);
  return acc.rational();
}

FormalSeries lhs_series(const EtaleQuadratic& L, int rmax, LhsStats* stats) {
  const unsigned p = L.prime();
  const long D = L.disc();
  FormalSeries out(D);
  LhsStats st;
  std::map<RepresentativeM, AdmissibleRecord> cache;
  for (int R = 0; R <= rmax; ++R)
    for (int c = 0; c <= R; ++c) {
      const int r = R - c;
      // x = p^{r+c} y^{-T} integral forces a, b <= r + c.
      for (int a = 0; a <= R; ++a)
        for (int b = 0; b <= R; ++b) {
          const int64_t pa = ip(p, a), pb = ip(p, b), pc = ip(p, c);
          const int64_t beta_step = ip(p, std::max(0, a + b - R));
          for (int64_t beta = 0; beta < pa; beta += beta_step) {
            ++st.levi_elements;
            RepresentativeM base{a, b, c, beta, 0, 0};
            SiegelLevi g = levi_part(base, p, r);
            Canonical can = canonicalize(g, D);
            if (can.vanishes) {
              ++st.lambda_vanished;
              continue;
            }
            CharacterCounter counter(p, c);
            // p^r y^{-1} gamma integral: gamma2 in p^{b-r} Z, and
            // p^{r-a} gamma1 - p^{r-a-b} beta gamma2 integral.
            const int64_t g2_step = ip(p, std::max(0, b - r));
            for (int64_t g2 = 0; g2 < pb; g2 += g2_step)
              for (int64_t g1 = 0; g1 < pa; ++g1) {
                // p^{a+b-r} | (p^b g1 - beta g2), tested on the scaled numerator.
                int64_t num = pb * g1 - beta * g2;
                int e = a + b - r;
                if (e > 0 && num % ip(p, e) != 0) continue;
                ++st.classes;
                RepresentativeM m{a, b, c, beta, g1, g2};
                RepresentativeM key = um_class(m, p);
                auto it = cache.find(key);
                if (it == cache.end()) it = cache.emplace(key, admissible_lattice(key, p, D)).first;
                if (!it->second.admissible) continue;
                ++st.admissible;
                counter.add(static_cast<uint64_t>(mod(-g1, pc)), it->second.B.get_num().get_ui());
              }
            CyclotomicValue coeff = counter.value();
            if (coeff.is_zero()) continue;
            coeff *= qpow(p, 2 * c - a - b) * qpow(p, 6 * r - 3 * a - 3 * b);
            out.add_lambda(R, g, 0, coeff);
          }
        }
    }
  if (stats) *stats = st;
  return out;
}

FormalSeries lhs_closed_form(const EtaleQuadratic& L, int rmax) {
  const unsigned p = L.prime();
  FormalSeries out(L.disc());
  const CyclotomicValue one(1);
  auto iota = [&](int r, EllClass cl) { return iota_class(L, r, cl); };
  for (int r = 0; r <= rmax; ++r) {
    out.add_lambda(r, iota(r, {0, 0}), 0, one * qpow(p, 6 * r));
    if (r >= 2) out.add_lambda(r, iota(r - 1, {0, 0}) * tau(p), 0, one * -qpow(p, 6 * r - 6));
    if (!L.split()) continue;
    for (int a = 1; a <= r; ++a)
      for (EllClass cl : {EllClass{a, 0}, EllClass{0, a}})
        out.add_lambda(r, iota(r, cl), 0, one * qpow(p, 6 * r - 2 * a));
    if (r >= 2) out.add_lambda(r, iota(r - 2, {0, 0}) * central(p, 1), 0, one * -(2 * qpow(p, 6 * r - 8)));
    for (int a = 2; a + 1 <= r; ++a)
      for (EllClass cl : {EllClass{a - 1, 0}, EllClass{0, a - 1}})
        out.add_lambda(r, iota(r - 2, cl) * central(p, 1), 0, one * -qpow(p, 6 * r - 2 * a - 6));
  }
  return out;
}

}  // namespace spinlocal

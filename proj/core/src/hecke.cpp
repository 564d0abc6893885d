#include "spinlocal/hecke.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spinlocal/hnf.hpp"
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

QMat values(const LMat& m) {
  QMat q(m.rows(), m.cols(), mpq_class(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j).value();
  return q;
}

int64_t primitive_root_mod_p2(unsigned p) {
  const int64_t p2 = int64_t(p) * p, order = int64_t(p) * (p - 1);
  for (int64_t g = 2; g < p2; ++g) {
    if (g % p == 0) continue;
    int64_t x = 1, k = 0;
    do {
      x = x * g % p2;
      ++k;
    } while (x != 1);
    if (k == order) return g;
  }
  throw std::logic_error("no primitive root");
}

// Symmetric matrix from (z11, z12, z13, z22, z23, z33) over p^f.
LMat sym_matrix(const std::array<int64_t, 6>& z, unsigned p, int f) {
  static const int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  LMat Z = zero_matrix(p, 3, 3);
  mpq_class d = qpow(p, f);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Z(i, j) = LocalScalar(mpq_class(z[idx[i][j]]) / d, p);
  return Z;
}

// chi-exponent of h n(Z) h^{-1} = n(A Z S B^{-1}) on the six symmetric basis matrices.
std::array<LocalScalar, 6> chi_form(const SiegelLevi& h, long D) {
  unsigned p = h.prime();
  LMat A = h.A(), Bi = inverse(h.B), S = siegel_S(p);
  LocalScalar d(D, p);
  std::array<LocalScalar, 6> out;
  for (int k = 0; k < 6; ++k) {
    std::array<int64_t, 6> e{};
    e[k] = 1;
    LMat X = A * sym_matrix(e, p, 0) * S * Bi;
    out[k] = -(d * X(1, 0)) + X(2, 1);
  }
  return out;
}

// int64 rank over F_p of a matrix given modulo p.
int rank_small(std::vector<std::vector<int64_t>> a, unsigned p) {
  for (auto& row : a)
    for (auto& v : row) v = mod(v, p);
  int rank = 0;
  std::size_t rows = a.size(), cols = a[0].size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (a[r][c] % p != 0) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    int64_t inv = 1;
    for (int64_t x = a[rank][c]; (x * inv) % p != 1;) ++inv;
    for (auto& v : a[rank]) v = mod(v * inv, p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] % p == 0) continue;
      int64_t f = a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = mod(a[r][j] - f * a[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<int64_t>> int_matrix(const LMat& m) {
  std::vector<std::vector<int64_t>> a(m.rows(), std::vector<int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& v = m(i, j).value();
      if (v.get_den() != 1) throw std::logic_error("int_matrix: non-integer entry");
      a[i][j] = v.get_num().get_si();
    }
  return a;
}

using IMat3 = std::vector<std::vector<int64_t>>;

// Calls fn(z) for every symmetric numerator vector z mod pf with A Z = 0 mod pf,
// pruning column by column.
template <class Fn>
void for_each_integral_Z(const IMat3& A, int64_t pf, Fn&& fn) {
  static const int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  std::array<int64_t, 6> z{};
  auto column_ok = [&](int j) {
    for (int i = 0; i < 3; ++i) {
      int64_t s = 0;
      for (int k = 0; k < 3; ++k) s += A[i][k] * z[idx[k][j]];
      if (s % pf != 0) return false;
    }
    return true;
  };
  for (z[0] = 0; z[0] < pf; ++z[0])
    for (z[1] = 0; z[1] < pf; ++z[1])
      for (z[2] = 0; z[2] < pf; ++z[2]) {
        if (!column_ok(0)) continue;
        for (z[3] = 0; z[3] < pf; ++z[3])
          for (z[4] = 0; z[4] < pf; ++z[4]) {
            if (!column_ok(1)) continue;
            for (z[5] = 0; z[5] < pf; ++z[5])
              if (column_ok(2)) fn(z);
          }
      }
}

// All upper triangular HNF matrices with diagonal exponents in [0, emax] summing to total.
void for_each_hnf(unsigned p, std::size_t n, int emax, int total,
                  const std::function<void(const LMat&)>& fn) {
  std::vector<int> d(n, 0);
  std::function<void(std::size_t, int)> diag = [&](std::size_t i, int left) {
    if (i == n) {
      if (left != 0) return;
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) slots.emplace_back(r, c);
      LMat m = zero_matrix(p, n, n);
      for (std::size_t r = 0; r < n; ++r) m(r, r) = LocalScalar(qpow(p, d[r]), p);
      std::function<void(std::size_t)> fill = [&](std::size_t s) {
        if (s == slots.size()) {
          fn(m);
          return;
        }
        auto [r, c] = slots[s];
        for (int64_t v = 0; v < ip(p, d[r]); ++v) {
          m(r, c) = LocalScalar(mpq_class(v), p);
          fill(s + 1);
        }
        m(r, c) = LocalScalar(0L, p);
      };
      fill(0);
      return;
    }
    for (int e = 0; e <= std::min(emax, left); ++e) {
      d[i] = e;
      diag(i + 1, left - e);
    }
  };
  diag(0, total);
}

EllClass times_p(const EtaleQuadratic& L, EllClass c) {
  return L.split() ? EllClass{c.e1 + 1, c.e2 + 1} : EllClass{c.e1 + 1, 0};
}

EllClass div_p(const EtaleQuadratic& L, EllClass c) {
  return L.split() ? EllClass{c.e1 - 1, c.e2 - 1} : EllClass{c.e1 - 1, 0};
}

}  // namespace

std::string coset_key(const LMat& m) {
  auto h = hermite_normal_form_local(m);
  std::ostringstream os;
  for (std::size_t i = 0; i < h.H.rows(); ++i)
    for (std::size_t j = 0; j < h.H.cols(); ++j) os << h.H(i, j).value().get_str() << ",";
  return os.str();
}

bool gl_cosets_closed(unsigned p, const std::vector<LMat>& reps) {
  if (reps.empty()) return true;
  std::size_t n = reps[0].rows();
  std::set<std::string> keys;
  for (const auto& v : reps) keys.insert(coset_key(v));
  if (keys.size() != reps.size()) return false;
  std::vector<LMat> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      LMat e = identity_matrix(p, n);
      e(i, j) = LocalScalar(1L, p);
      gens.push_back(e);
    }
  LMat u = identity_matrix(p, n);
  u(0, 0) = LocalScalar(primitive_root_mod_p2(p), p);
  gens.push_back(u);
  for (const auto& k : gens)
    for (const auto& v : reps)
      if (!keys.count(coset_key(k * v))) return false;
  return true;
}

std::vector<LMat> gl_coset_reps(unsigned p, const std::vector<int>& exps) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, std::vector<int>>, std::vector<LMat>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, exps);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<int> want = exps;
  std::sort(want.begin(), want.end());
  int total = 0, emax = 0;
  for (int e : exps) {
    total += e;
    emax = std::max(emax, e);
  }
  std::vector<LMat> reps;
  for_each_hnf(p, exps.size(), emax, total, [&](const LMat& m) {
    if (elementary_divisors(values(m), p) == want) reps.push_back(m);
  });
  if (!gl_cosets_closed(p, reps)) throw std::logic_error("gl_coset_reps: list is not K-stable");
  cache.emplace(key, reps);
  return reps;
}

std::vector<LMat> tp_matrices(unsigned p) {
  std::vector<LMat> out;
  out.push_back(diagonal(p, {mpq_class(1), mpq_class(p)}));
  for (unsigned a = 0; a < p; ++a) {
    LMat u = diagonal(p, {mpq_class(p), mpq_class(1)});
    u(0, 1) = LocalScalar(long(a), p);
    out.push_back(u);
  }
  return out;
}

FormalSeries apply_Tp(long D, const SiegelLevi& g, bool primed) {
  FormalSeries out(D);
  for (const auto& u : tp_matrices(g.prime()))
    out.add_lambda(0, g * (primed ? hecke_Tprime(u) : hecke_T(u)), 0, CyclotomicValue(1));
  return out;
}

FormalSeries lift_sum(long D, const SiegelLevi& g, const std::vector<int>& exps) {
  unsigned p = g.prime();
  FormalSeries out(D);
  LocalScalar pp(long(p), p);
  for (const auto& v : gl_coset_reps(p, exps)) out.add_lambda(0, g * siegel_from_A(v, pp), 0, CyclotomicValue(1));
  return out;
}

CyclotomicValue unit_sum(long D, const SiegelLevi& g) {
  unsigned p = g.prime();
  auto form = chi_form(g, D);
  std::array<mpq_class, 6> f;
  for (int k = 0; k < 6; ++k) f[k] = (form[k] / LocalScalar(long(p), p)).fractional_part();
  CyclotomicValue acc;
  std::array<int64_t, 6> z{};
  const int64_t P = p;
  for (z[0] = 0; z[0] < P; ++z[0])
    for (z[1] = 0; z[1] < P; ++z[1])
      for (z[2] = 0; z[2] < P; ++z[2])
        for (z[3] = 0; z[3] < P; ++z[3])
          for (z[4] = 0; z[4] < P; ++z[4])
            for (z[5] = 0; z[5] < P; ++z[5]) {
              std::vector<std::vector<int64_t>> m{{z[0], z[1], z[2]}, {z[1], z[3], z[4]}, {z[2], z[4], z[5]}};
              if (rank_small(m, p) != 1) continue;
              mpq_class e = 0;
              for (int k = 0; k < 6; ++k) e += f[k] * z[k];
              acc += CyclotomicValue::psi(p, e);
            }
  return acc;
}

FormalSeries gl3_T03(long D, const SiegelLevi& g) {
  unsigned p = g.prime();
  FormalSeries out = lift_sum(D, g, {0, 0, 0});
  out += lift_sum(D, g, {1, 0, 0}).scaled(qpow(p, 1));
  out += lift_sum(D, g, {1, 1, 0}).scaled(qpow(p, 3));
  out += lift_sum(D, g, {1, 1, 1}).scaled(qpow(p, 6));
  return out;
}

FormalSeries gl3_T23(long D, const SiegelLevi& g) {
  unsigned p = g.prime();
  FormalSeries out = lift_sum(D, g * lower_p(p), {0, 1, 1});
  out += lift_sum(D, g * upper_p(p), {1, 0, 0}).scaled(qpow(p, 4));
  out.add_lambda(0, g, 1, unit_sum(D, g));
  return out;
}

FormalSeries gl2_T03(const EtaleQuadratic& L, int r, const EllClass& l) {
  const unsigned p = L.prime();
  const long D = L.disc();
  const CyclotomicValue one(1);
  FormalSeries out(D);
  out.add_lambda(0, iota_class(L, r - 1, l), 1, one);
  out.add_lambda(0, iota_class(L, r + 1, times_p(L, l)), 0, one * qpow(p, 3));
  out += apply_Tp(D, iota_class(L, r, l)).scaled(qpow(p, 1));
  out += apply_Tp(D, iota_class(L, r + 2, times_p(L, l))).scaled(qpow(p, 4)).shifted(0, -1);
  out.add_lambda(0, iota_class(L, r - 1, div_p(L, l)), 1, one * qpow(p, 3));
  out.add_lambda(0, iota_class(L, r + 1, l), 0, one * qpow(p, 6));
  return out;
}

FormalSeries gl2_T23(const EtaleQuadratic& L, int r, const EllClass& l) {
  const unsigned p = L.prime();
  const long D = L.disc();
  const CyclotomicValue one(1);
  FormalSeries out(D);
  out += apply_Tp(D, iota_class(L, r + 1, times_p(L, l))).scaled(qpow(p, 1));
  out.add_lambda(0, iota_class(L, r - 2, div_p(L, l)), 2, one);
  out.add_lambda(0, iota_class(L, r + 2, times_p(L, l)), 0, one * qpow(p, 6));
  out += apply_Tp(D, iota_class(L, r + 1, l)).scaled(qpow(p, 4));
  mpq_class c = qpow(p, 3) - 1;
  if (ell_norm_valuation(L, l) == r) c += -qpow(p, 3) + L.epsilon() * qpow(p, 2);
  out.add_lambda(0, iota_class(L, r, l), 1, one * c);
  return out;
}

std::string to_string(HeckeOp op) {
  switch (op) {
    case HeckeOp::T03: return "T03";
    case HeckeOp::T23: return "T23";
    case HeckeOp::T33: return "T33";
  }
  return "?";
}

uint64_t GspCosetList::size() const {
  uint64_t n = 0;
  for (const auto& g : groups) n += g.Z.size();
  return n;
}

GspCosetList gsp6_coset_reps(unsigned p, HeckeOp op) {
  if (p > 5) throw std::invalid_argument("gsp6_coset_reps: p too large for enumeration");
  GspCosetList out{op, p, {}};
  if (op == HeckeOp::T33) {
    out.groups.push_back({central(p, 1), 0, {std::array<int64_t, 6>{}}});
    return out;
  }
  const int f = op == HeckeOp::T03 ? 1 : 2;
  const int64_t pf = ip(p, f);
  LocalScalar nu(qpow(p, f), p);
  for (int total = 0; total <= 3 * f; ++total)
    for_each_hnf(p, 3, f, total, [&](const LMat& B) {
      SiegelLevi L{B, nu};
      LMat A = L.A();
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (!A(i, j).is_integral()) return;
      auto Ai = int_matrix(A), Bi = int_matrix(B);
      std::vector<std::vector<int64_t>> Amod = Ai, Bmod = Bi;
      if (op == HeckeOp::T23 && rank_small(Amod, p) + rank_small(Bmod, p) > 1) return;
      GspCosetGroup group{L, f, {}};
      static const int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
      static const int s_of[3] = {1, 2, 0};
      IMat3 x(6, std::vector<int64_t>(6, 0));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          x[i][j] = mod(Ai[i][j], p);
          x[3 + i][3 + j] = mod(Bi[i][j], p);
        }
      for_each_integral_Z(Ai, pf, [&](const std::array<int64_t, 6>& z) {
        if (op == HeckeOp::T23) {
          // x = [[A, A Z S], [0, B]] modulo p; (A Z S)_{ij} = (A Z)_{i, s(j)}.
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
              int64_t s = 0;
              for (int k = 0; k < 3; ++k) s += Ai[i][k] * z[idx[k][s_of[j]]];
              x[i][3 + j] = mod(s / pf, p);
            }
          if (rank_small(x, p) != 1) return;
        }
        group.Z.push_back(z);
      });
      if (!group.Z.empty()) out.groups.push_back(std::move(group));
    });
  return out;
}

LMat coset_matrix(const GspCosetGroup& g, const std::array<int64_t, 6>& z, unsigned p) {
  return g.levi.full() * siegel_unipotent(sym_matrix(z, p, g.denom_exp));
}

FormalSeries apply_raw(long D, const SiegelLevi& g, const GspCosetList& cosets) {
  const unsigned p = cosets.p;
  FormalSeries out(D);
  for (const auto& group : cosets.groups) {
    SiegelLevi h = g * group.levi;
    Canonical can = canonicalize(h, D);
    if (can.vanishes) continue;
    auto form = chi_form(h, D);
    LocalScalar scale(qpow(p, group.denom_exp), p);
    std::array<mpq_class, 6> f;
    int level = 0;
    for (int k = 0; k < 6; ++k) {
      f[k] = (form[k] / scale).fractional_part();
      if (f[k] != 0) level = std::max(level, -valuation(f[k], p));
    }
    CharacterCounter counter(p, level);
    const int64_t M = ip(p, level);
    std::array<int64_t, 6> n{};
    for (int k = 0; k < 6; ++k) {
      mpq_class t = f[k] * M;
      n[k] = t.get_num().get_si();
    }
    for (const auto& z : group.Z) {
      int64_t j = 0;
      for (int k = 0; k < 6; ++k) j = mod(j + mod(z[k], M) * n[k], M);
      counter.add(static_cast<uint64_t>(j));
    }
    out.add_lambda(0, h, 0, counter.value());
  }
  return out;
}

uint64_t um_size(const LMat& v, unsigned p) {
  auto ed = elementary_divisors(values(v), p);
  const int f = ed.back();
  const int64_t pf = ip(p, f);
  auto Ai = int_matrix(v);
  uint64_t count = 0;
  for_each_integral_Z(Ai, pf, [&](const std::array<int64_t, 6>&) { ++count; });
  return count;
}

bool integral_conjugate_reps_exist(const LMat& v, unsigned p) {
  auto ed = elementary_divisors(values(v), p);
  if (ed.back() > 1) throw std::invalid_argument("integral_conjugate_reps_exist: similitude p only");
  const int64_t P = p, P2 = P * P;
  auto Ai = int_matrix(v);
  static const int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  auto in_U = [&](const std::array<int64_t, 6>& z) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int64_t s = 0;
        for (int k = 0; k < 3; ++k) s += Ai[i][k] * z[idx[k][j]];
        if (s % P != 0) return false;
      }
    return true;
  };
  // v (z + p y) v^T = 0 mod p^2 for numerators over p.
  auto conj_integral = [&](const std::array<int64_t, 6>& w) {
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        int64_t s = 0;
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) s += Ai[i][k] * w[idx[k][l]] * Ai[j][l];
        if (s % P2 != 0) return false;
      }
    return true;
  };
  std::array<int64_t, 6> z{}, y{};
  for (z[0] = 0; z[0] < P; ++z[0])
    for (z[1] = 0; z[1] < P; ++z[1])
      for (z[2] = 0; z[2] < P; ++z[2])
        for (z[3] = 0; z[3] < P; ++z[3])
          for (z[4] = 0; z[4] < P; ++z[4])
            for (z[5] = 0; z[5] < P; ++z[5]) {
              if (!in_U(z)) continue;
              bool found = false;
              for (int64_t code = 0; code < P2 * P2 * P2 && !found; ++code) {
                int64_t c = code;
                std::array<int64_t, 6> w;
                for (int k = 0; k < 6; ++k) {
                  y[k] = c % P;
                  c /= P;
                  w[k] = z[k] + P * y[k];
                }
                found = conj_integral(w);
              }
              if (!found) return false;
            }
  return true;
}

}  // namespace spinlocal

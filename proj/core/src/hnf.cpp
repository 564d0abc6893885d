#include "spinlocal/hnf.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "spinlocal/groups.hpp"

namespace spinlocal {

namespace {

void swap_cols(LMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// col_dst -= f * col_src
void axpy_col(LMat& m, std::size_t dst, std::size_t src, const LocalScalar& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= f * m(i, src);
}

void scale_col(LMat& m, std::size_t c, const LocalScalar& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) *= f;
}

}  // namespace

ColumnHNF hermite_normal_form_local(const LMat& A) {
  std::size_t n = A.rows();
  if (n == 0 || n != A.cols()) throw std::invalid_argument("HNF: need a square matrix");
  unsigned p = A(0, 0).prime();
  LMat H = A;
  LMat g = identity_matrix(p, n);
  std::vector<int> e(n, 0);
  for (std::size_t ii = n; ii-- > 0;) {
    std::size_t best = n;
    int best_v = kValInfinity;
    for (std::size_t j = 0; j <= ii; ++j) {
      const LocalScalar& x = H(ii, j);
      if (x.is_exact_zero()) continue;
      int v = x.valuation();
      if (best == n || v < best_v) {
        best = j;
        best_v = v;
      }
    }
    if (best == n) throw std::domain_error("HNF: matrix is singular");
    swap_cols(H, best, ii);
    swap_cols(g, best, ii);
    LocalScalar pe(qpow(p, best_v), p);
    LocalScalar unit_inv = pe / H(ii, ii);
    scale_col(H, ii, unit_inv);
    scale_col(g, ii, unit_inv);
    H(ii, ii) = pe;
    e[ii] = best_v;
    for (std::size_t j = 0; j < ii; ++j) {
      if (H(ii, j).is_exact_zero()) continue;
      LocalScalar f = H(ii, j) / pe;
      axpy_col(H, j, ii, f);
      axpy_col(g, j, ii, f);
      H(ii, j) = LocalScalar(0L, p);
    }
  }
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t ii = j; ii-- > 0;) {
      LocalScalar pe(qpow(p, e[ii]), p);
      LocalScalar res(H(ii, j).residue_mod(e[ii]), p);
      LocalScalar k = (H(ii, j) - res) / pe;
      if (!k.is_exact_zero() && k.value() != 0) {
        axpy_col(H, j, ii, k);
        axpy_col(g, j, ii, k);
      }
      H(ii, j) = res;
    }
  return {H, g, e};
}

QMat local_row_echelon(const QMat& F, unsigned p) {
  QMat a = F;
  std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t best = rows;
    int best_v = kValInfinity;
    for (std::size_t r = c; r < rows; ++r) {
      if (a(r, c) == 0) continue;
      int v = valuation(a(r, c), p);
      if (best == rows || v < best_v) {
        best = r;
        best_v = v;
      }
    }
    if (best == rows) throw std::domain_error("local_row_echelon: rank deficient");
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(best, j), a(c, j));
    for (std::size_t r = 0; r < rows; ++r) {
      if (r <= c || a(r, c) == 0) continue;
      mpq_class f = a(r, c) / a(c, c);
      for (std::size_t j = 0; j < cols; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return a.block(0, 0, cols, cols);
}

std::vector<int> elementary_divisors(const QMat& m, unsigned p) {
  QMat a = m;
  std::size_t n = std::min(a.rows(), a.cols());
  std::vector<int> out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t bi = a.rows(), bj = a.cols();
    int best = kValInfinity;
    for (std::size_t i = k; i < a.rows(); ++i)
      for (std::size_t j = k; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        int v = valuation(a(i, j), p);
        if (bi == a.rows() || v < best) {
          bi = i;
          bj = j;
          best = v;
        }
      }
    if (bi == a.rows()) {
      out.insert(out.end(), n - k, kValInfinity);
      break;
    }
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(k, j), a(bi, j));
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, k), a(i, bj));
    for (std::size_t i = k + 1; i < a.rows(); ++i) {
      if (a(i, k) == 0) continue;
      mpq_class f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < a.cols(); ++j) a(i, j) -= f * a(k, j);
    }
    for (std::size_t j = k + 1; j < a.cols(); ++j) {
      if (a(k, j) == 0) continue;
      mpq_class f = a(k, j) / a(k, k);
      for (std::size_t i = k; i < a.rows(); ++i) a(i, j) -= f * a(i, k);
    }
    out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int rank_mod_p(const QMat& m, unsigned p) {
  std::vector<std::vector<int64_t>> a(m.rows(), std::vector<int64_t>(m.cols()));
  mpz_class pz = p;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0 && valuation(m(i, j), p) < 0)
        throw std::domain_error("rank_mod_p: entry is not p-integral");
      mpz_class num = m(i, j).get_num(), den = m(i, j).get_den(), inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
      mpz_class r = (num * inv) % pz;
      if (r < 0) r += pz;
      a[i][j] = r.get_si();
    }
  int rank = 0;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    mpz_class inv, x = a[rank][c];
    mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
    int64_t iv = inv.get_si();
    for (auto& v : a[rank]) v = v * iv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
      int64_t f = a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

mpz_class subgroup_order_mod(const std::vector<std::vector<mpz_class>>& gens, unsigned p, int N) {
  if (gens.empty()) return 1;
  std::size_t d = gens[0].size();
  mpz_class mod = ipow(p, static_cast<unsigned>(N));
  std::vector<std::vector<mpz_class>> rows = gens;
  for (auto& r : rows)
    for (auto& x : r) {
      x %= mod;
      if (x < 0) x += mod;
    }
  // Echelon form over Z/p^N: pivot on minimal valuation per column.
  mpz_class order = 1;
  std::size_t top = 0;
  for (std::size_t c = 0; c < d && top < rows.size(); ++c) {
    std::size_t best = rows.size();
    int best_v = N;
    for (std::size_t r = top; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      int v = std::min(valuation(rows[r][c], p), N);
      if (v < best_v) {
        best = r;
        best_v = v;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[best], rows[top]);
    mpz_class pv = ipow(p, static_cast<unsigned>(best_v));
    mpz_class unit = rows[top][c] / pv, uinv;
    mpz_invert(uinv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
    for (auto& x : rows[top]) x = (x * uinv) % mod;
    for (std::size_t r = top + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      mpz_class f = rows[r][c] / pv;
      for (std::size_t j = 0; j < d; ++j) {
        rows[r][j] = (rows[r][j] - f * rows[top][j]) % mod;
        if (rows[r][j] < 0) rows[r][j] += mod;
      }
    }
    // The pivot row contributes p^{N - v} elements; the annihilated multiple
    // p^{N-v} * row stays in the module and is appended for further reduction.
    order *= ipow(p, static_cast<unsigned>(N - best_v));
    std::vector<mpz_class> extra(d);
    mpz_class s = ipow(p, static_cast<unsigned>(N - best_v));
    bool nonzero = false;
    for (std::size_t j = 0; j < d; ++j) {
      extra[j] = (rows[top][j] * s) % mod;
      if (extra[j] != 0) nonzero = true;
    }
    ++top;
    if (nonzero) rows.push_back(extra);
  }
  return order;
}

}  // namespace spinlocal

#include "spinlocal/matrix.hpp"

#include <sstream>
#include <utility>

namespace spinlocal {

LMat to_local(const QMat& m, unsigned p) {
  LMat out(m.rows(), m.cols(), LocalScalar(0L, p));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = LocalScalar(m(i, j), p);
  return out;
}

QMat to_rational(const LMat& m) {
  QMat out(m.rows(), m.cols(), mpq_class(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).value();
  return out;
}

namespace {

template <class T, class PickPivot>
std::pair<Mat<T>, T> eliminate(const Mat<T>& m, const T& one, PickPivot pick) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  Mat<T> a = m;
  T zero = one - one;
  Mat<T> inv = Mat<T>::identity(n, one, zero);
  T det = one;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = pick(a, col);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
      det = zero - det;
    }
    T d = a(col, col);
    det = det * d;
    T dinv = one / d;
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) * dinv;
      inv(col, j) = inv(col, j) * dinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      T f = a(i, col);
      if constexpr (std::is_same_v<T, LocalScalar>) {
        if (f.is_exact_zero()) continue;
      } else {
        if (f == 0) continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = a(i, j) - f * a(col, j);
        inv(i, j) = inv(i, j) - f * inv(col, j);
      }
    }
  }
  return {inv, det};
}

std::size_t pick_rational(const QMat& a, std::size_t col) {
  for (std::size_t i = col; i < a.rows(); ++i)
    if (a(i, col) != 0) return i;
  throw std::domain_error("matrix is singular");
}

std::size_t pick_local(const LMat& a, std::size_t col) {
  std::size_t best = a.rows();
  int best_v = kValInfinity;
  for (std::size_t i = col; i < a.rows(); ++i) {
    const LocalScalar& x = a(i, col);
    if (x.is_exact_zero()) continue;
    if (x.value() == 0) continue;  // zero to precision: never a pivot
    int v = x.valuation();
    if (best == a.rows() || v < best_v) {
      best = i;
      best_v = v;
    }
  }
  if (best == a.rows()) {
    for (std::size_t i = col; i < a.rows(); ++i)
      if (!a(i, col).is_exact_zero())
        throw PrecisionExhausted("inverse: pivot column is zero to working precision");
    throw std::domain_error("matrix is singular");
  }
  return best;
}

}  // namespace

QMat inverse(const QMat& m) { return eliminate(m, mpq_class(1), pick_rational).first; }

mpq_class determinant(const QMat& m) {
  try {
    return eliminate(m, mpq_class(1), pick_rational).second;
  } catch (const std::domain_error&) {
    return 0;
  }
}

LMat inverse(const LMat& m) {
  unsigned p = m.rows() ? m(0, 0).prime() : 0;
  return eliminate(m, LocalScalar(1L, p), pick_local).first;
}

LocalScalar determinant(const LMat& m) {
  unsigned p = m.rows() ? m(0, 0).prime() : 0;
  return eliminate(m, LocalScalar(1L, p), pick_local).second;
}

int min_valuation(const LMat& m) {
  int best = kValInfinity;
  for (const auto& x : m.data()) {
    if (x.is_exact_zero()) continue;
    best = std::min(best, x.valuation());
  }
  return best;
}

bool is_integral(const LMat& m) {
  for (const auto& x : m.data())
    if (!x.is_integral()) return false;
  return true;
}

bool is_integral(const QMat& m, unsigned p) {
  for (const auto& x : m.data())
    if (x != 0 && valuation(x, p) < 0) return false;
  return true;
}

std::string to_string(const QMat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
  }
  os << "]";
  return os.str();
}

std::string to_string(const LMat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).str();
  }
  os << "]";
  return os.str();
}

}  // namespace spinlocal

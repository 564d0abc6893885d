#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinlocal/padic.hpp"

namespace spinlocal {

/// Dense row-major matrix over a ring-like scalar type (mpq_class, LocalScalar, int64_t).
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("Mat: ragged initializer");
      for (auto& x : row) a_.push_back(x);
    }
  }

  static Mat identity(std::size_t n, const T& one, const T& zero = T()) {
    Mat m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Mat transpose() const {
    Mat t(cols_, rows_, zero_like());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Mat b(nr, nc, zero_like());
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
    Mat z(x.rows_, y.cols_, x.zero_like());
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (is_structural_zero(xik)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) z(i, j) += xik * y(k, j);
      }
    return z;
  }
  friend Mat operator+(Mat x, const Mat& y) {
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }
  friend Mat operator-(Mat x, const Mat& y) {
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }
  friend Mat operator*(const T& s, Mat x) {
    for (auto& e : x.a_) e = s * e;
    return x;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (std::size_t i = 0; i < x.a_.size(); ++i)
      if (!scalar_equal(x.a_[i], y.a_[i])) return false;
    return true;
  }

  T zero_like() const {
    if (a_.empty()) return T();
    return a_[0] - a_[0];
  }

  const std::vector<T>& data() const { return a_; }

 private:
  static bool is_structural_zero(const T& x) {
    if constexpr (std::is_same_v<T, LocalScalar>) return x.is_exact_zero();
    else return x == 0;
  }
  static bool scalar_equal(const T& x, const T& y) {
    if constexpr (std::is_same_v<T, LocalScalar>) return x.equals(y);
    else return x == y;
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using QMat = Mat<mpq_class>;
using LMat = Mat<LocalScalar>;

LMat to_local(const QMat& m, unsigned p);
QMat to_rational(const LMat& m);

/// Exact inverse over Q.
QMat inverse(const QMat& m);
mpq_class determinant(const QMat& m);

/// Inverse over Q_p with precision tracking; pivots chosen by minimal valuation.
LMat inverse(const LMat& m);
LocalScalar determinant(const LMat& m);

/// Minimal valuation over all entries (certified; exact zeros ignored).
int min_valuation(const LMat& m);
bool is_integral(const LMat& m);
bool is_integral(const QMat& m, unsigned p);

std::string to_string(const QMat& m);
std::string to_string(const LMat& m);

}  // namespace spinlocal

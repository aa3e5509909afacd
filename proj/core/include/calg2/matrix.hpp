#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "calg2/rational.hpp"

namespace calg2 {

// Dense row-major matrix over any ring-like scalar.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

QMatrix identity_matrix(std::size_t n);
QMatrix transpose(const QMatrix& m);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& a, const QVector& x);
QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
QMatrix from_columns(const std::vector<QVector>& columns, std::size_t rows);

template <class T, class F>
auto map_matrix(const Matrix<T>& m, F f) -> Matrix<decltype(f(m(0, 0)))> {
  Matrix<decltype(f(m(0, 0)))> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = f(m(r, c));
  return out;
}

// Laplace expansion memoized over the set of used columns: O(n 2^n) ring
// operations, no division, so it works over polynomial and radical scalars.
template <class T>
T determinant(const Matrix<T>& m, const T& one) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n > 20) throw std::invalid_argument("determinant: matrix too large for cofactor expansion");
  const std::size_t full = (std::size_t{1} << n) - 1;
  // value[mask] = det of rows popcount(mask).. n-1 against columns outside mask
  std::vector<std::optional<T>> value(full + 1);
  value[full] = one;
  for (std::size_t mask = full; mask-- > 0;) {
    std::size_t r = static_cast<std::size_t>(__builtin_popcountll(mask));
    std::optional<T> acc;
    int parity = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      const std::optional<T>& sub = value[mask | (std::size_t{1} << c)];
      if (sub) {
        T term = m(r, c) * *sub;
        if (parity) term = -term;
        if (acc)
          *acc += term;
        else
          acc = std::move(term);
      }
      parity ^= 1;
    }
    value[mask] = std::move(acc);
  }
  return value[0] ? *value[0] : one - one;
}

}  // namespace calg2

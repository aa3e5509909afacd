#include "calg2/linalg.hpp"

#include <stdexcept>

namespace calg2 {

QMatrix identity_matrix(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix transpose(const QMatrix& m) {
  QMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

QVector operator*(const QMatrix& a, const QVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  QVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!is_zero(x[k])) out[i] += a(i, k) * x[k];
  return out;
}

QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged input");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix from_columns(const std::vector<QVector>& columns, std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("from_columns: ragged input");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RrefResult rref(QMatrix m) {
  RrefResult res;
  std::size_t lead = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && is_zero(m(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(lead, j));
    Rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || is_zero(m(r, c))) continue;
      Rational f = m(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(m(lead, j))) m(r, j) -= f * m(lead, j);
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.reduced = std::move(m);
  return res;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<QVector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  RrefResult r = rref(from_rows(vectors, ambient_dim));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) s.basis_.push_back(r.reduced.row(i));
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    QVector v(ambient_dim);
    v[i] = 1;
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

QVector Subspace::reduce(QVector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector has wrong dimension");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::size_t p = pivots_[i];
    if (is_zero(v[p])) continue;
    Rational f = v[p];
    for (std::size_t j = p; j < ambient_; ++j)
      if (!is_zero(basis_[i][j])) v[j] -= f * basis_[i][j];
  }
  return v;
}

bool Subspace::contains(const QVector& v) const {
  for (const Rational& x : reduce(v))
    if (!is_zero(x)) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
  for (const QVector& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
  std::vector<QVector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace kernel(const QMatrix& m) {
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<QVector> vectors;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

Subspace column_space(const QMatrix& m) {
  std::vector<QVector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.rows(), cols);
}

Subspace preimage_of_subspace(const QMatrix& m, const Subspace& w) {
  if (w.ambient_dim() != m.rows())
    throw std::invalid_argument("preimage_of_subspace: subspace lives in the wrong space");
  // w = ker(p) where the rows of p span the annihilator of w.
  Subspace ann = w.dim() == 0 ? Subspace::full(m.rows())
                              : kernel(from_rows(w.basis(), w.ambient_dim()));
  if (ann.dim() == 0) return Subspace::full(m.cols());
  QMatrix p = from_rows(ann.basis(), m.rows());
  return kernel(p * m);
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_equal: ambient dimension mismatch");
  return a == b;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  RrefResult r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  QVector x(a.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult r = rref(std::move(aug));
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

QMatrix left_inverse(const QMatrix& m) {
  const std::size_t k = m.cols();
  // Independent rows of m are the pivot columns of its transpose.
  RrefResult rt = rref(transpose(m));
  if (rt.pivots.size() != k) throw std::invalid_argument("left_inverse: columns are dependent");
  QMatrix sub(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rt.pivots[i], j);
  QMatrix sub_inv = *inverse(sub);
  QMatrix l(k, m.rows());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) l(i, rt.pivots[j]) = sub_inv(i, j);
  return l;
}

QMatrix leading_minor(const QMatrix& m, std::size_t k) {
  QMatrix sub(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
  return sub;
}

bool is_definite(const QMatrix& b) {
  return is_definite_with(b, Rational(1), [](const Rational& q) { return sgn(q); });
}

}  // namespace calg2

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "calg2/matrix.hpp"

namespace calg2 {

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

// Unique reduced row-echelon form; pivots are column indices.
RrefResult rref(QMatrix m);
std::size_t rank(const QMatrix& m);

// Exact subspace of Q^n, stored as its nonzero RREF rows.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<QVector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Remainder of v after elimination against the basis; zero iff v is inside.
  QVector reduce(QVector v) const;
  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<QVector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const QMatrix& m);
Subspace column_space(const QMatrix& m);
// {x : m x in w}
Subspace preimage_of_subspace(const QMatrix& m, const Subspace& w);
bool subspace_equal(const Subspace& a, const Subspace& b);

// Some x with a x = b (free variables set to zero), if one exists.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

// For m of full column rank: l with l m = identity.
QMatrix left_inverse(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);

QMatrix leading_minor(const QMatrix& m, std::size_t k);

// Sylvester test on leading principal minors, with a sign oracle for the
// scalar type. Accepts positive or negative definite.
template <class T, class SignFn>
bool is_definite_with(const Matrix<T>& b, const T& one, SignFn sign_of) {
  const std::size_t n = b.rows();
  if (n != b.cols()) throw std::invalid_argument("is_definite: matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(b(i, j) == b(j, i))) throw std::invalid_argument("is_definite: matrix is not symmetric");
  if (n == 0) return false;
  bool positive = true, negative = true;
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = b(i, j);
    int s = sign_of(determinant(sub, one));
    if (s == 0) return false;
    if (s < 0) positive = false;
    if (s != ((k % 2) ? -1 : 1)) negative = false;
    if (!positive && !negative) return false;
  }
  return true;
}

bool is_definite(const QMatrix& b);

}  // namespace calg2

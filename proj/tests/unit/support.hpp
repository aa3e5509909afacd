#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "calg2/exterior.hpp"
#include "calg2/matrix.hpp"
#include "calg2/notation.hpp"
#include "calg2/polynomial.hpp"

inline void PrintTo(const mpq_class& q, std::ostream* os) { *os << calg2::to_string(q); }

namespace calg2 {

inline void PrintTo(const Radical& r, std::ostream* os) { *os << r.to_string(); }
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Form& f, std::ostream* os) { *os << print_form(f) << " (dim " << f.dim() << ", degree " << f.degree() << ")"; }
inline void PrintTo(const RadicalForm& f, std::ostream* os) { *os << print_form(f); }

}  // namespace calg2

namespace calg2::testing {

inline Rational random_rational(std::mt19937& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  return make_rational(num(rng), den(rng));
}

inline Form random_form(std::mt19937& rng, int dim, int degree, double density = 0.5, int range = 3) {
  std::bernoulli_distribution keep(density);
  Form f(dim, degree);
  for (MultiIndex m : basis_monomials(dim, degree))
    if (keep(rng)) f.add_term(m, random_rational(rng, range));
  return f;
}

inline QMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range = 3) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng, range);
  return m;
}

// Unit lower times unit upper triangular, so det = 1 before the diagonal scale.
inline QMatrix random_invertible(std::mt19937& rng, std::size_t n, int range = 2) {
  QMatrix l = identity_matrix(n), u = identity_matrix(n);
  std::uniform_int_distribution<int> v(-range, range);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i) l(i, j) = v(rng);
      if (j > i) u(i, j) = v(rng);
    }
  std::uniform_int_distribution<int> d(1, 2);
  for (std::size_t i = 0; i < n; ++i) u(i, i) = Rational(d(rng) * (v(rng) < 0 ? -1 : 1));
  return l * u;
}

// Leibniz formula over all permutations; independent of the library's cofactor expansion.
template <class T, class Mul>
T leibniz_determinant(std::size_t n, const T& zero, Mul entry_product) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  T total = zero;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    T term = entry_product(p);
    if (inversions % 2) total = total - term;
    else total = total + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Rational leibniz_determinant(const QMatrix& m) {
  return leibniz_determinant<Rational>(m.rows(), Rational(0), [&](const std::vector<std::size_t>& p) {
    Rational t = 1;
    for (std::size_t i = 0; i < p.size(); ++i) t *= m(i, p[i]);
    return t;
  });
}

}  // namespace calg2::testing

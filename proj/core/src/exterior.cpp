#include "calg2/exterior.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace calg2 {

std::pair<int, MultiIndex> MultiIndex::from_sequence(const std::vector<int>& indices) {
  std::uint16_t mask = 0;
  int inversions = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    int v = indices[i];
    if (v < 1 || v > kMaxDim) throw std::invalid_argument("index out of range 1..9");
    if (mask & (1u << (v - 1))) return {0, MultiIndex()};
    // Count earlier entries larger than v.
    inversions += __builtin_popcount(mask >> v);
    mask |= static_cast<std::uint16_t>(1u << (v - 1));
  }
  return {(inversions % 2) ? -1 : 1, from_mask(mask)};
}

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 16; ++i)
    if (mask_ & (1u << (i - 1))) out.push_back(i);
  return out;
}

std::string MultiIndex::digits() const {
  std::string s;
  for (int i : indices()) s += static_cast<char>('0' + i);
  return s;
}

int wedge_sign(MultiIndex a, MultiIndex b) {
  unsigned ma = a.mask(), mb = b.mask();
  if (ma & mb) return 0;
  // Each index of b passes over the indices of a that are larger than it.
  int swaps = 0;
  while (mb) {
    unsigned low = mb & (~mb + 1);
    swaps += __builtin_popcount(ma & ~((low << 1) - 1));
    mb &= mb - 1;
  }
  return (swaps % 2) ? -1 : 1;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

namespace {

struct MonomialTables {
  std::array<std::array<std::vector<MultiIndex>, kMaxDim + 1>, kMaxDim + 1> by_degree;
  std::array<std::vector<std::size_t>, kMaxDim + 1> position;

  MonomialTables() {
    for (int n = 0; n <= kMaxDim; ++n) {
      position[n].assign(std::size_t{1} << n, 0);
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        MultiIndex m = MultiIndex::from_mask(static_cast<std::uint16_t>(mask));
        by_degree[n][m.degree()].push_back(m);
      }
      for (int k = 0; k <= n; ++k) {
        auto& v = by_degree[n][k];
        std::sort(v.begin(), v.end());
        for (std::size_t i = 0; i < v.size(); ++i) position[n][v[i].mask()] = i;
      }
    }
  }
};

const MonomialTables& tables() {
  static const MonomialTables t;
  return t;
}

}  // namespace

const std::vector<MultiIndex>& basis_monomials(int dim, int degree) {
  if (dim < 0 || dim > kMaxDim || degree < 0 || degree > dim)
    throw std::invalid_argument("basis_monomials: dimension or degree out of range");
  return tables().by_degree[dim][degree];
}

std::size_t monomial_position(int dim, MultiIndex m) {
  if (dim < 0 || dim > kMaxDim || (m.mask() >> dim))
    throw std::invalid_argument("monomial_position: index out of range");
  return tables().position[dim][m.mask()];
}

Vector basis_vector(int dim, int i) {
  if (i < 1 || i > dim) throw std::invalid_argument("basis_vector: index out of range");
  Vector v(dim);
  v[i - 1] = 1;
  return v;
}

Form basis_one_form(int dim, int i) {
  if (i < 1 || i > dim) throw std::invalid_argument("basis_one_form: index out of range");
  return Form::monomial(dim, MultiIndex::from_mask(static_cast<std::uint16_t>(1u << (i - 1))), 1);
}

Form monomial_form(int dim, std::initializer_list<int> indices, const Rational& coef) {
  auto [s, m] = MultiIndex::from_sequence(std::vector<int>(indices));
  Form f(dim, static_cast<int>(indices.size()));
  if (s) f.add_term(m, s > 0 ? coef : Rational(-coef));
  return f;
}

Form cube(const Form& b) {
  if (b.degree() != 2) throw std::invalid_argument("cube: expected a 2-form");
  return wedge(wedge(b, b), b);
}

bool cube_is_zero(const Form& b) { return cube(b).is_zero(); }

QVector form_coords(const Form& a) {
  QVector v(binomial(a.dim(), a.degree()));
  for (const auto& [m, c] : a.terms()) v[monomial_position(a.dim(), m)] = c;
  return v;
}

Form coords_to_form(int dim, int degree, const QVector& coords) {
  const auto& basis = basis_monomials(dim, degree);
  if (coords.size() != basis.size()) throw std::invalid_argument("coords_to_form: wrong coordinate count");
  Form f(dim, degree);
  for (std::size_t i = 0; i < coords.size(); ++i) f.add_term(basis[i], coords[i]);
  return f;
}

}  // namespace calg2

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "calg2/matrix.hpp"
#include "calg2/rational.hpp"

namespace calg2 {

inline constexpr int kMaxDim = 9;

// Strictly increasing index tuple (i1 < ... < ik), indices 1-based, stored
// as a bitmask. Ordered by degree, then lexicographically.
class MultiIndex {
 public:
  constexpr MultiIndex() = default;
  static constexpr MultiIndex from_mask(std::uint16_t mask) {
    MultiIndex m;
    m.mask_ = mask;
    return m;
  }
  // Sorts the sequence; sign is the permutation parity, 0 on a repeat.
  static std::pair<int, MultiIndex> from_sequence(const std::vector<int>& indices);

  std::uint16_t mask() const { return mask_; }
  int degree() const { return __builtin_popcount(mask_); }
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  int max_index() const { return mask_ ? 32 - __builtin_clz(static_cast<unsigned>(mask_)) : 0; }
  std::vector<int> indices() const;
  std::string digits() const;

  friend bool operator==(MultiIndex a, MultiIndex b) { return a.mask_ == b.mask_; }
  friend bool operator!=(MultiIndex a, MultiIndex b) { return a.mask_ != b.mask_; }
  friend bool operator<(MultiIndex a, MultiIndex b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    std::uint16_t x = a.mask_ ^ b.mask_;
    if (!x) return false;
    // The smallest index in the symmetric difference decides.
    return (a.mask_ & (x & (~x + 1))) != 0;
  }

 private:
  std::uint16_t mask_ = 0;
};

// Sign of e^a ^ e^b relative to e^{a u b}; 0 if they share an index.
int wedge_sign(MultiIndex a, MultiIndex b);

// Monomials of degree k in dimension n, in lexicographic order.
const std::vector<MultiIndex>& basis_monomials(int dim, int degree);
std::size_t monomial_position(int dim, MultiIndex m);
std::size_t binomial(int n, int k);

namespace detail {
template <class S>
bool scalar_is_zero(const S& s) {
  return is_zero(s);
}
}  // namespace detail

// Sparse exterior form of fixed degree on an n-dimensional dual space.
// The scalar type needs +, -, *, unary -, == and a free is_zero().
template <class S>
class BasicForm {
 public:
  using Terms = std::map<MultiIndex, S>;

  BasicForm() = default;
  BasicForm(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("form dimension out of range");
    if (degree < 0 || degree > dim) throw std::invalid_argument("form degree out of range");
  }

  static BasicForm monomial(int dim, MultiIndex m, const S& coef) {
    BasicForm f(dim, m.degree());
    f.add_term(m, coef);
    return f;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const S* find(MultiIndex m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_term(MultiIndex m, const S& coef) {
    if (m.degree() != degree_) throw std::invalid_argument("term degree does not match form degree");
    if (m.mask() >> dim_) throw std::invalid_argument("term index exceeds form dimension");
    if (is_zero_scalar(coef)) return;
    auto [it, inserted] = terms_.emplace(m, coef);
    if (!inserted) {
      it->second += coef;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  BasicForm& operator+=(const BasicForm& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicForm& operator-=(const BasicForm& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BasicForm operator-() const {
    BasicForm r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
  friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }
  friend BasicForm operator*(const S& s, const BasicForm& a) {
    BasicForm r(a.dim_, a.degree_);
    for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
    return r;
  }
  friend bool operator==(const BasicForm& a, const BasicForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  static bool is_zero_scalar(const S& s) { return detail::scalar_is_zero(s); }
  void check_compatible(const BasicForm& o) const {
    if (o.dim_ != dim_ || o.degree_ != degree_)
      throw std::invalid_argument("forms of different dimension or degree");
  }

  int dim_ = 0;
  int degree_ = 0;
  Terms terms_;
};

using Form = BasicForm<Rational>;
using Vector = QVector;

Vector basis_vector(int dim, int i);  // e_i, 1-based
Form basis_one_form(int dim, int i);  // e^i, 1-based
Form monomial_form(int dim, std::initializer_list<int> indices, const Rational& coef = 1);

template <class S>
BasicForm<S> wedge(const BasicForm<S>& a, const BasicForm<S>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: forms live in different dimensions");
  const int deg = a.degree() + b.degree();
  if (deg > a.dim()) return BasicForm<S>(a.dim(), 0);
  BasicForm<S> r(a.dim(), deg);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (!s) continue;
      S c = ca * cb;
      r.add_term(MultiIndex::from_mask(ma.mask() | mb.mask()), s > 0 ? c : -c);
    }
  }
  return r;
}

template <class S>
BasicForm<S> contract(const Vector& x, const BasicForm<S>& a) {
  if (static_cast<int>(x.size()) != a.dim()) throw std::invalid_argument("contract: dimension mismatch");
  if (a.degree() == 0) throw std::invalid_argument("contract: cannot contract a degree-0 form");
  BasicForm<S> r(a.dim(), a.degree() - 1);
  for (const auto& [m, c] : a.terms()) {
    int j = 0;
    for (int i : m.indices()) {
      const Rational& xi = x[i - 1];
      if (!is_zero(xi)) {
        S t = S(xi) * c;
        MultiIndex rest = MultiIndex::from_mask(m.mask() & ~(1u << (i - 1)));
        r.add_term(rest, (j % 2) ? -t : t);
      }
      ++j;
    }
  }
  return r;
}

// Substitutes e^i -> images[i-1] (1-forms in a possibly different dimension).
template <class S>
BasicForm<S> substitute(const BasicForm<S>& a, const std::vector<BasicForm<S>>& images, int target_dim) {
  if (static_cast<int>(images.size()) != a.dim()) throw std::invalid_argument("substitute: wrong number of images");
  for (const auto& f : images)
    if (f.degree() != 1 || f.dim() != target_dim) throw std::invalid_argument("substitute: images must be 1-forms");
  BasicForm<S> r(target_dim, a.degree());
  for (const auto& [m, c] : a.terms()) {
    BasicForm<S> t(target_dim, 0);
    t.add_term(MultiIndex(), c);
    for (int i : m.indices()) t = wedge(t, images[i - 1]);
    r += t;
  }
  return r;
}

template <class T, class S, class F>
BasicForm<T> map_coefficients(const BasicForm<S>& a, F f) {
  BasicForm<T> r(a.dim(), a.degree());
  for (const auto& [m, c] : a.terms()) r.add_term(m, f(c));
  return r;
}

// Moves a form to dimension new_dim >= dim (new coordinates unused).
template <class S>
BasicForm<S> extend_dimension(const BasicForm<S>& a, int new_dim) {
  if (new_dim < a.dim()) throw std::invalid_argument("extend_dimension: cannot shrink");
  BasicForm<S> r(new_dim, a.degree());
  for (const auto& [m, c] : a.terms()) r.add_term(m, c);
  return r;
}

Form cube(const Form& b);
bool cube_is_zero(const Form& b);

QVector form_coords(const Form& a);
Form coords_to_form(int dim, int degree, const QVector& coords);

}  // namespace calg2

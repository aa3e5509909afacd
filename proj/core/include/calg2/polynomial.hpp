#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "calg2/matrix.hpp"
#include "calg2/rational.hpp"

namespace calg2 {

using VariableList = std::shared_ptr<const std::vector<std::string>>;

// Names prefix1 .. prefixN, e.g. l1..l4.
VariableList make_variables(const std::string& prefix, std::size_t count);

// Sparse polynomial over Q in a fixed, ordered set of variables. A polynomial
// with no variable list is a constant and adapts to any list it meets.
class Poly {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, Rational>;

  Poly() = default;
  explicit Poly(VariableList vars) : vars_(std::move(vars)) {}
  Poly(const Rational& c);  // NOLINT: constant promotion
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT

  static Poly constant(VariableList vars, const Rational& c);
  static Poly variable(VariableList vars, std::size_t index);

  const VariableList& variables() const { return vars_; }
  std::size_t variable_count() const { return vars_ ? vars_->size() : 0; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned total_degree() const;
  Rational coefficient(const Exponents& e) const;
  // Indices of the variables that actually occur.
  std::vector<std::size_t> support() const;

  Rational evaluate(const std::vector<Rational>& point) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(unsigned k) const;

  // e.g. "-4*l4^4", "4*l3^4+8*l3^2*l4^2+4*l4^4"
  std::string to_string() const;

 private:
  void unify(const Poly& o);
  void add_term(const Exponents& e, const Rational& c);
  VariableList vars_;
  Terms terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

using PolyMatrix = Matrix<Poly>;

Poly det_poly(const PolyMatrix& m);
PolyMatrix evaluate_matrix(const PolyMatrix& m, const std::vector<Rational>& point);
QMatrix evaluate(const PolyMatrix& m, const std::vector<Rational>& point);

// True iff every monomial of p involves at least one of the given variables.
bool monomial_ideal_member(const Poly& p, const std::vector<std::size_t>& vars);

}  // namespace calg2

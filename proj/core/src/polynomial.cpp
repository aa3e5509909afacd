#include "calg2/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace calg2 {

VariableList make_variables(const std::string& prefix, std::size_t count) {
  auto names = std::make_shared<std::vector<std::string>>();
  for (std::size_t i = 1; i <= count; ++i) names->push_back(prefix + std::to_string(i));
  return names;
}

Poly::Poly(const Rational& c) {
  if (!calg2::is_zero(c)) terms_.emplace(Exponents{}, c);
}

Poly Poly::constant(VariableList vars, const Rational& c) {
  Poly p(vars);
  if (!calg2::is_zero(c)) p.terms_.emplace(Exponents(p.variable_count(), 0), c);
  return p;
}

Poly Poly::variable(VariableList vars, std::size_t index) {
  Poly p(vars);
  if (index >= p.variable_count()) throw std::out_of_range("Poly::variable: index out of range");
  Exponents e(p.variable_count(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

void Poly::unify(const Poly& o) {
  if (vars_ == o.vars_ || !o.vars_) return;
  if (!vars_) {
    // Constant adopts the other list.
    Terms t;
    for (auto& [e, c] : terms_) t.emplace(Exponents(o.vars_->size(), 0), c);
    terms_ = std::move(t);
    vars_ = o.vars_;
    return;
  }
  if (*vars_ != *o.vars_) throw std::invalid_argument("Poly: variable lists differ");
}

bool Poly::is_constant() const {
  for (const auto& [e, c] : terms_)
    if (std::any_of(e.begin(), e.end(), [](unsigned x) { return x != 0; })) return false;
  return true;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Rational Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::size_t> Poly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < variable_count(); ++i)
    for (const auto& [e, c] : terms_)
      if (e[i] != 0) {
        out.push_back(i);
        break;
      }
  return out;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != variable_count() && !terms_.empty() && !is_constant())
    throw std::invalid_argument("Poly::evaluate: point has wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (calg2::is_zero(it->second)) terms_.erase(it);
  } else if (calg2::is_zero(c)) {
    terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  unify(o);
  Poly other = o;
  other.unify(*this);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
  unify(o);
  Poly other = o;
  other.unify(*this);
  Poly r(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  *this = std::move(r);
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  Poly d = a - b;
  return d.is_zero();
}

Poly Poly::pow(unsigned k) const {
  Poly r = Poly::constant(vars_, 1);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  // Highest total degree first, then lexicographically larger exponents first.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.rbegin(), terms_.rend());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    unsigned dx = 0, dy = 0;
    for (unsigned v : x.first) dx += v;
    for (unsigned v : y.first) dy += v;
    return dx > dy;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational a = abs(c);
    if (sgn(c) < 0)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    if (mono.empty())
      out += calg2::to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += calg2::to_string(a) + "*" + mono;
  }
  return out;
}

Poly det_poly(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_poly: matrix is not square");
  if (m.rows() > 8) throw std::invalid_argument("det_poly: size limit is 8");
  VariableList vars;
  for (std::size_t r = 0; r < m.rows() && !vars; ++r)
    for (std::size_t c = 0; c < m.cols() && !vars; ++c) vars = m(r, c).variables();
  return determinant(m, Poly::constant(vars, 1));
}

QMatrix evaluate(const PolyMatrix& m, const std::vector<Rational>& point) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).evaluate(point);
  return out;
}

PolyMatrix evaluate_matrix(const PolyMatrix& m, const std::vector<Rational>& point) {
  return map_matrix(m, [&](const Poly& p) { return Poly(p.evaluate(point)); });
}

bool monomial_ideal_member(const Poly& p, const std::vector<std::size_t>& vars) {
  for (const auto& [e, c] : p.terms()) {
    bool hit = false;
    for (std::size_t v : vars)
      if (v < e.size() && e[v] != 0) hit = true;
    if (!hit) return false;
  }
  return true;
}

}  // namespace calg2

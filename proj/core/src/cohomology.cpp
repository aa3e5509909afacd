#include "calg2/cohomology.hpp"

#include <stdexcept>

namespace calg2 {

Subspace closed_forms(const LieAlgebra& g, int degree) {
  if (degree < 0 || degree > g.dim()) throw std::invalid_argument("closed_forms: degree out of range");
  if (degree == g.dim()) return Subspace::full(1);
  return kernel(g.differential_matrix(degree));
}

Subspace exact_forms(const LieAlgebra& g, int degree) {
  if (degree < 0 || degree > g.dim()) throw std::invalid_argument("exact_forms: degree out of range");
  std::size_t ambient = binomial(g.dim(), degree);
  if (degree == 0) return Subspace(ambient);
  return column_space(g.differential_matrix(degree - 1));
}

int betti(const LieAlgebra& g, int degree) {
  return static_cast<int>(closed_forms(g, degree).dim()) - static_cast<int>(exact_forms(g, degree).dim());
}

CochainSpaces::CochainSpaces(const LieAlgebra& g, int degree)
    : dim_(g.dim()), degree_(degree), closed_(closed_forms(g, degree)), exact_(exact_forms(g, degree)) {
  Subspace acc = exact_;
  std::vector<QVector> rep_coords;
  for (const QVector& z : closed_.basis()) {
    if (acc.contains(z)) continue;
    rep_coords.push_back(z);
    reps_.push_back(coords_to_form(dim_, degree_, z));
    acc = acc.sum(Subspace::span(z.size(), {z}));
  }
  const std::size_t ambient = closed_.ambient_dim();
  std::vector<QVector> columns = rep_coords;
  columns.insert(columns.end(), exact_.basis().begin(), exact_.basis().end());
  coord_map_ = QMatrix(reps_.size(), ambient);
  if (!columns.empty()) {
    QMatrix full = left_inverse(from_columns(columns, ambient));
    for (std::size_t i = 0; i < reps_.size(); ++i)
      for (std::size_t j = 0; j < ambient; ++j) coord_map_(i, j) = full(i, j);
  }
}

QVector CochainSpaces::class_coords(const Form& a) const {
  if (a.dim() != dim_ || a.degree() != degree_) throw std::invalid_argument("class_coords: form has wrong shape");
  QVector v = form_coords(a);
  if (!closed_.contains(v)) throw std::invalid_argument("class_coords: form is not closed");
  return coord_map_ * v;
}

std::optional<Form> is_exact(const LieAlgebra& g, const Form& a) {
  if (a.dim() != g.dim()) throw std::invalid_argument("is_exact: form lives in the wrong dimension");
  if (a.is_zero()) return a.degree() == 0 ? Form(g.dim(), 0) : Form(g.dim(), a.degree() - 1);
  if (a.degree() == 0) return std::nullopt;
  auto x = solve(g.differential_matrix(a.degree() - 1), form_coords(a));
  if (!x) return std::nullopt;
  return coords_to_form(g.dim(), a.degree() - 1, *x);
}

QMatrix lefschetz_matrix(const LieAlgebra& h, const Form& beta, const std::vector<Form>& h2_reps) {
  if (beta.degree() != 2 || beta.dim() != h.dim()) throw std::invalid_argument("lefschetz_matrix: beta must be a 2-form on h");
  if (!h.d(beta).is_zero()) throw std::invalid_argument("lefschetz_matrix: beta is not closed");
  CochainSpaces h4(h, 4);
  QMatrix m(static_cast<std::size_t>(h4.betti()), h2_reps.size());
  for (std::size_t j = 0; j < h2_reps.size(); ++j) {
    if (!h.d(h2_reps[j]).is_zero()) throw std::invalid_argument("lefschetz_matrix: representative is not closed");
    QVector c = h4.class_coords(wedge(h2_reps[j], beta));
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return m;
}

QMatrix lefschetz_matrix(const LieAlgebra& h, const Form& beta) {
  return lefschetz_matrix(h, beta, CochainSpaces(h, 2).reps());
}

BasicForm<Poly> generic_combination(const std::vector<Form>& reps, const VariableList& vars) {
  if (reps.empty()) throw std::invalid_argument("generic_combination: no representatives");
  if (vars->size() != reps.size()) throw std::invalid_argument("generic_combination: one variable per representative");
  BasicForm<Poly> omega(reps[0].dim(), reps[0].degree());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    Poly l = Poly::variable(vars, i);
    for (const auto& [m, q] : reps[i].terms()) omega.add_term(m, Poly::constant(vars, q) * l);
  }
  return omega;
}

PolyMatrix lefschetz_matrix_parametric(const LieAlgebra& h, const std::vector<Form>& reps, const VariableList& vars) {
  for (const Form& r : reps)
    if (r.degree() != 2 || r.dim() != h.dim() || !h.d(r).is_zero())
      throw std::invalid_argument("lefschetz_matrix_parametric: representatives must be closed 2-forms on h");
  BasicForm<Poly> omega = generic_combination(reps, vars);
  CochainSpaces h4(h, 4);
  const QMatrix& map = h4.coordinate_map();
  PolyMatrix m(static_cast<std::size_t>(h4.betti()), reps.size(), Poly::constant(vars, 0));
  for (std::size_t j = 0; j < reps.size(); ++j) {
    auto alpha = map_coefficients<Poly>(reps[j], [&](const Rational& q) { return Poly::constant(vars, q); });
    BasicForm<Poly> prod = wedge(alpha, omega);
    for (std::size_t i = 0; i < map.rows(); ++i) {
      Poly entry = Poly::constant(vars, 0);
      for (const auto& [mono, p] : prod.terms()) {
        const Rational& f = map(i, monomial_position(h.dim(), mono));
        if (!is_zero(f)) entry += Poly::constant(vars, f) * p;
      }
      m(i, j) = entry;
    }
  }
  return m;
}

}  // namespace calg2

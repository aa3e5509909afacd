#include "calg2/obstructions.hpp"

#include <stdexcept>

#include "calg2/notation.hpp"

namespace calg2 {

std::string to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::None: return "None";
    case ObstructionKind::Obstr2: return "Obstr2";
    case ObstructionKind::PropEpi: return "PropEpi";
    case ObstructionKind::PropEpiDecomposableForced: return "PropEpiDecomposableForced";
    case ObstructionKind::B3: return "B3";
  }
  return "?";
}

std::string to_string(LefschetzVerdict v) {
  switch (v) {
    case LefschetzVerdict::Holds: return "Holds";
    case LefschetzVerdict::FailsWithWitness: return "FailsWithWitness";
    case LefschetzVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::optional<std::array<std::size_t, 3>> nonvanishing_triple(const std::vector<Form>& basis) {
  const std::size_t m = basis.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Form wij = wedge(basis[i], basis[j]);
      if (wij.is_zero()) continue;
      for (std::size_t k = j; k < m; ++k)
        if (!wedge(wij, basis[k]).is_zero()) return std::array<std::size_t, 3>{i, j, k};
    }
  return std::nullopt;
}

bool triple_wedges_vanish(const std::vector<Form>& basis) { return !nonvanishing_triple(basis); }

std::optional<Form> nondegenerate_element(const std::vector<Form>& basis) {
  auto t = nonvanishing_triple(basis);
  if (!t) return std::nullopt;
  std::vector<std::size_t> coords{(*t)[0]};
  for (std::size_t idx : {(*t)[1], (*t)[2]})
    if (idx != coords.back()) coords.push_back(idx);
  const int dim = basis[0].dim();
  std::vector<int> x(coords.size(), 0);
  // Odometer over {0..3}^|coords|; the cube restricted to these coordinates
  // is a nonzero polynomial of degree <= 3 in each variable.
  while (true) {
    std::size_t p = x.size();
    while (p > 0) {
      --p;
      if (x[p] < 3) {
        ++x[p];
        break;
      }
      x[p] = 0;
      if (p == 0) return std::nullopt;
    }
    Form omega(dim, 2);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (x[i]) omega += Rational(x[i]) * basis[coords[i]];
    if (!cube_is_zero(omega)) return omega;
  }
}

std::vector<Form> contracted_closed_three_forms(const LieAlgebra& g, const Vector& x) {
  const int n = g.dim();
  std::vector<QVector> images;
  Subspace z3 = closed_forms(g, 3);
  for (const QVector& z : z3.basis())
    images.push_back(form_coords(contract(x, coords_to_form(n, 3, z))));
  std::vector<Form> out;
  Subspace w = Subspace::span(binomial(n, 2), images);
  for (const QVector& v : w.basis()) out.push_back(coords_to_form(n, 2, v));
  return out;
}

namespace {

void require_nonzero(const Vector& x) {
  for (const Rational& q : x)
    if (!is_zero(q)) return;
  throw std::invalid_argument("vector must be nonzero");
}

std::string vector_label(const Vector& x) {
  int nonzero = 0, idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) {
      ++nonzero;
      idx = static_cast<int>(i) + 1;
    }
  if (nonzero == 1 && x[static_cast<std::size_t>(idx - 1)] == 1) return "e" + std::to_string(idx);
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + to_string(x[i]);
  return s + ")";
}

}  // namespace

bool obstr2_holds(const LieAlgebra& g, const Vector& x) {
  require_nonzero(x);
  if (g.dim() != 7) throw std::invalid_argument("obstr2_holds: algebra must be 7-dimensional");
  return triple_wedges_vanish(contracted_closed_three_forms(g, x));
}

ObstructionVerdict obstr2(const LieAlgebra& g, const Vector& x) {
  require_nonzero(x);
  if (g.dim() != 7) throw std::invalid_argument("obstr2: algebra must be 7-dimensional");
  std::vector<Form> w = contracted_closed_three_forms(g, x);
  ObstructionVerdict v;
  auto omega = nondegenerate_element(w);
  if (!omega) {
    v.kind = ObstructionKind::Obstr2;
    v.detail = vector_label(x) + " -| Z^3 has dimension " + std::to_string(w.size()) + " and contains no form with nonzero cube";
  } else {
    v.witness = omega;
    v.detail = vector_label(x) + " -| Z^3 contains " + print_form(*omega) + " with nonzero cube";
  }
  return v;
}

std::optional<Form> symplectic_exists(const LieAlgebra& h) {
  if (h.dim() != 6) throw std::invalid_argument("symplectic_exists: algebra must be 6-dimensional");
  std::vector<Form> z;
  Subspace z2 = closed_forms(h, 2);
  for (const QVector& v : z2.basis()) z.push_back(coords_to_form(6, 2, v));
  auto omega = nondegenerate_element(z);
  if (omega && (!h.d(*omega).is_zero() || cube_is_zero(*omega)))
    throw std::logic_error("symplectic_exists: witness failed re-verification");
  return omega;
}

std::vector<Form> epi_admissible_forms(const CentralQuotient& q) {
  const LieAlgebra& h = q.quotient;
  const int n = h.dim();
  Subspace z2 = closed_forms(h, 2);
  Subspace b4 = exact_forms(h, 4);
  // Matrix of omega -> d eta ^ omega on the coordinates of the Z^2 basis.
  std::vector<QVector> cols;
  for (const QVector& z : z2.basis()) cols.push_back(form_coords(wedge(q.curvature, coords_to_form(n, 2, z))));
  std::vector<Form> out;
  if (cols.empty()) return out;
  QMatrix m = from_columns(cols, binomial(n, 4));
  Subspace s = preimage_of_subspace(m, b4);
  for (const QVector& c : s.basis()) {
    Form f(n, 2);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!is_zero(c[i])) f += c[i] * coords_to_form(n, 2, z2.basis()[i]);
    out.push_back(std::move(f));
  }
  return out;
}

ObstructionVerdict prop_epi_obstructs(const LieAlgebra& g, const Vector& xi) {
  require_nonzero(xi);
  CentralQuotient q = central_quotient(g, xi);
  std::vector<Form> s = epi_admissible_forms(q);
  ObstructionVerdict v;
  const std::string label = "quotient by " + vector_label(xi) + " is (" + q.quotient.salamon() + "), curvature " +
                            print_form(q.curvature);
  auto omega = nondegenerate_element(s);
  if (!omega) {
    v.kind = ObstructionKind::PropEpi;
    v.detail = label + "; the " + std::to_string(s.size()) +
               "-dimensional space of closed omega with exact curvature ^ omega has no symplectic element";
    return v;
  }
  if (!q.quotient.d(*omega).is_zero() || cube_is_zero(*omega) ||
      !is_exact(q.quotient, wedge(q.curvature, *omega)))
    throw std::logic_error("prop_epi_obstructs: witness failed re-verification");
  v.witness = omega;
  if (!q.curvature.is_zero() && is_exact(q.quotient, q.curvature)) {
    v.kind = ObstructionKind::PropEpiDecomposableForced;
    v.detail = label + "; curvature is exact, so a calibrated structure would force a decomposable algebra";
  } else {
    v.detail = label + "; symplectic " + print_form(*omega) + " passes";
  }
  return v;
}

bool b3_positive(const LieAlgebra& g) { return betti(g, 3) > 0; }

bool two_lefschetz_witness(const LieAlgebra& h, const Form& omega, const Form& gamma) {
  if (h.dim() != 6) throw std::invalid_argument("two_lefschetz_witness: algebra must be 6-dimensional");
  if (omega.dim() != 6 || omega.degree() != 2 || gamma.dim() != 6 || gamma.degree() != 2)
    throw std::invalid_argument("two_lefschetz_witness: expects 2-forms on h");
  if (!h.d(omega).is_zero() || cube_is_zero(omega)) return false;
  if (!h.d(gamma).is_zero() || is_exact(h, gamma)) return false;
  return is_exact(h, wedge(gamma, omega)).has_value();
}

namespace {

// Positive rational s with s^m = t, if one exists.
std::optional<Rational> rational_root(const Rational& t, unsigned m) {
  if (sgn(t) <= 0) return std::nullopt;
  mpz_class num, den;
  if (!mpz_root(num.get_mpz_t(), t.get_num().get_mpz_t(), m)) return std::nullopt;
  if (!mpz_root(den.get_mpz_t(), t.get_den().get_mpz_t(), m)) return std::nullopt;
  Rational s(num, den);
  s.canonicalize();
  return s;
}

Poly volume_coefficient(const BasicForm<Poly>& top) {
  if (top.terms().empty()) return Poly();
  return top.terms().begin()->second;
}

bool try_pattern_b(const Poly& d, std::size_t i, std::size_t j, const VariableList& vars) {
  unsigned deg = d.total_degree();
  if (deg == 0 || deg % 2) return false;
  unsigned m = deg / 2;
  Poly::Exponents ei(vars->size(), 0), ej(vars->size(), 0);
  ei[i] = deg;
  ej[j] = deg;
  Rational a = d.coefficient(ei), b = d.coefficient(ej);
  if (is_zero(a) || is_zero(b)) return false;
  auto s = rational_root(b / a, m);
  if (!s) return false;
  Poly li = Poly::variable(vars, i), lj = Poly::variable(vars, j);
  Poly q = li * li + Poly::constant(vars, *s) * lj * lj;
  return d == Poly::constant(vars, a) * q.pow(m);
}

}  // namespace

LefschetzAnalysis two_lefschetz_abelian(const LieAlgebra& h) {
  if (h.dim() != 6 || !h.is_abelian()) throw std::invalid_argument("two_lefschetz_abelian: expects the abelian 6-dimensional algebra");
  LefschetzAnalysis out;
  Form omega0 = parse_form("12+34+56", 6, 2);
  QMatrix l = lefschetz_matrix(h, omega0);
  bool invertible = l.rows() == l.cols() && rank(l) == l.rows();
  out.rule = "abelian";
  out.verdict = invertible ? LefschetzVerdict::Holds : LefschetzVerdict::Inconclusive;
  out.detail = std::string("d = 0, so every symplectic form is equivalent to 12+34+56; its ") +
               std::to_string(l.rows()) + "x" + std::to_string(l.cols()) + " Lefschetz matrix has rank " +
               std::to_string(rank(l));
  return out;
}

LefschetzAnalysis two_lefschetz_parametric(const LieAlgebra& h, const std::vector<Form>& reps) {
  if (h.dim() != 6) throw std::invalid_argument("two_lefschetz_parametric: algebra must be 6-dimensional");
  if (h.is_abelian()) return two_lefschetz_abelian(h);
  CochainSpaces h2(h, 2);
  if (static_cast<int>(reps.size()) != h2.betti())
    throw std::invalid_argument("two_lefschetz_parametric: need exactly b2 representatives");
  {
    std::vector<QVector> cols;
    for (const Form& r : reps) {
      if (r.dim() != 6 || r.degree() != 2 || !h.d(r).is_zero())
        throw std::invalid_argument("two_lefschetz_parametric: representatives must be closed 2-forms");
      cols.push_back(h2.class_coords(r));
    }
    if (rank(from_columns(cols, reps.size())) != reps.size())
      throw std::invalid_argument("two_lefschetz_parametric: representatives do not span H^2");
  }
  LefschetzAnalysis out;
  VariableList vars = make_variables("l", reps.size());
  PolyMatrix m = lefschetz_matrix_parametric(h, reps, vars);
  out.matrix = m;
  if (m.rows() != m.cols()) {
    out.detail = "b2 != b4";
    return out;
  }
  Poly d = det_poly(m);
  BasicForm<Poly> omega = generic_combination(reps, vars);
  Poly n = volume_coefficient(wedge(wedge(omega, omega), omega));
  if (n.variables() == nullptr) n = Poly::constant(vars, 0);
  out.det = d;
  out.cubic = n;

  std::vector<std::size_t> sup = d.support();
  if (!d.is_zero() && sup.empty()) {
    out.verdict = LefschetzVerdict::Holds;
    out.rule = "constant";
    out.detail = "determinant is the nonzero constant " + d.to_string();
    return out;
  }
  if (d.terms().size() == 1 && sup.size() == 1 && monomial_ideal_member(n, sup)) {
    out.verdict = LefschetzVerdict::Holds;
    out.rule = "pattern (a)";
    out.detail = "det = " + d.to_string() + " vanishes only where l" + std::to_string(sup[0] + 1) +
                 " = 0, which makes omega degenerate";
    return out;
  }
  if (sup.size() == 2 && try_pattern_b(d, sup[0], sup[1], vars) && monomial_ideal_member(n, sup)) {
    out.verdict = LefschetzVerdict::Holds;
    out.rule = "pattern (b)";
    out.detail = "det = " + d.to_string() + " vanishes only where l" + std::to_string(sup[0] + 1) + " = l" +
                 std::to_string(sup[1] + 1) + " = 0, which makes omega degenerate";
    return out;
  }

  // Search {-2..2}^b2 for a symplectic omega with a singular Lefschetz map.
  const std::vector<int> values{0, 1, -1, 2, -2};
  std::vector<std::size_t> pos(reps.size(), 0);
  while (true) {
    std::size_t p = pos.size();
    bool done = false;
    while (true) {
      if (p == 0) {
        done = true;
        break;
      }
      --p;
      if (pos[p] + 1 < values.size()) {
        ++pos[p];
        break;
      }
      pos[p] = 0;
    }
    if (done) break;
    std::vector<Rational> point;
    for (std::size_t k : pos) point.emplace_back(values[k]);
    if (!is_zero(d.evaluate(point)) || is_zero(n.evaluate(point))) continue;
    Form w(6, 2);
    for (std::size_t i = 0; i < reps.size(); ++i) w += point[i] * reps[i];
    Subspace ker = kernel(lefschetz_matrix(h, w, reps));
    if (ker.dim() == 0) throw std::logic_error("two_lefschetz_parametric: determinant and matrix disagree");
    Form gamma(6, 2);
    const QVector& c = ker.basis()[0];
    for (std::size_t i = 0; i < reps.size(); ++i) gamma += c[i] * reps[i];
    if (!two_lefschetz_witness(h, w, gamma)) throw std::logic_error("two_lefschetz_parametric: witness failed re-verification");
    out.verdict = LefschetzVerdict::FailsWithWitness;
    out.rule = "grid";
    out.omega = w;
    out.gamma = gamma;
    out.detail = "omega = " + print_form(w) + " is symplectic and gamma = " + print_form(gamma) +
                 " is a nontrivial class with exact gamma ^ omega";
    return out;
  }
  out.detail = "det = " + d.to_string() + " matches no decidable pattern and the grid has no witness";
  return out;
}

}  // namespace calg2

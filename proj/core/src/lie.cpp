#include "calg2/lie.hpp"

#include <stdexcept>

#include "calg2/notation.hpp"

namespace calg2 {

LieAlgebra::LieAlgebra(std::vector<Form> d_one) : dim_(static_cast<int>(d_one.size())), d_one_(std::move(d_one)) {
  if (dim_ > kMaxDim) throw std::invalid_argument("LieAlgebra: dimension above 9");
  for (const Form& f : d_one_)
    if (f.dim() != dim_ || f.degree() != 2)
      throw std::invalid_argument("LieAlgebra: each de^i must be a 2-form in the algebra's dimension");
}

LieAlgebra LieAlgebra::from_salamon(std::string_view text, int dim) { return LieAlgebra(parse_salamon(text, dim)); }

LieAlgebra LieAlgebra::abelian(int dim) {
  std::vector<Form> d(static_cast<std::size_t>(dim), Form(dim, 2));
  return LieAlgebra(std::move(d));
}

bool LieAlgebra::is_abelian() const {
  for (const Form& f : d_one_)
    if (!f.is_zero()) return false;
  return true;
}

QMatrix LieAlgebra::differential_matrix(int degree) const {
  if (degree < 0 || degree > dim_) throw std::invalid_argument("differential_matrix: degree out of range");
  const auto& src = basis_monomials(dim_, degree);
  std::size_t rows = degree == dim_ ? 0 : binomial(dim_, degree + 1);
  QMatrix m(rows, src.size());
  if (rows == 0) return m;
  for (std::size_t c = 0; c < src.size(); ++c) {
    Form image = d(Form::monomial(dim_, src[c], 1));
    for (const auto& [mono, coef] : image.terms()) m(monomial_position(dim_, mono), c) = coef;
  }
  return m;
}

std::string LieAlgebra::salamon() const { return print_salamon(d_one_); }

bool is_jacobi(const LieAlgebra& g) {
  for (const Form& f : g.d_one())
    if (!g.d(f).is_zero()) return false;
  return true;
}

namespace {

// Span of a ^ b for a, b in the given 1-form subspace.
Subspace wedge_square(int dim, const Subspace& v) {
  std::vector<QVector> out;
  const auto& b = v.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      out.push_back(form_coords(wedge(coords_to_form(dim, 1, b[i]), coords_to_form(dim, 1, b[j]))));
  return Subspace::span(binomial(dim, 2), out);
}

}  // namespace

bool is_nilpotent(const LieAlgebra& g) {
  const int n = g.dim();
  if (n == 0) return true;
  QMatrix d1 = g.differential_matrix(1);
  Subspace v = kernel(d1);
  for (int step = 0; step <= n; ++step) {
    if (v.dim() == static_cast<std::size_t>(n)) return true;
    Subspace target = wedge_square(n, v);
    Subspace next = preimage_of_subspace(d1, target);
    if (next == v) return false;
    v = next;
  }
  return v.dim() == static_cast<std::size_t>(n);
}

Subspace center(const LieAlgebra& g) {
  const int n = g.dim();
  // Row block i: coordinates of e_j -| de^i as a linear function of X.
  std::vector<QVector> rows;
  for (int i = 1; i <= n; ++i) {
    QMatrix block(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
      Form c = contract(basis_vector(n, j), g.de(i));
      for (const auto& [m, q] : c.terms()) block(monomial_position(n, m), static_cast<std::size_t>(j - 1)) = q;
    }
    for (std::size_t r = 0; r < block.rows(); ++r) rows.push_back(block.row(r));
  }
  if (rows.empty()) return Subspace::full(static_cast<std::size_t>(n));
  return kernel(from_rows(rows, static_cast<std::size_t>(n)));
}

bool is_central(const LieAlgebra& g, const Vector& x) {
  if (static_cast<int>(x.size()) != g.dim()) throw std::invalid_argument("is_central: vector has wrong dimension");
  for (const Form& f : g.d_one())
    if (!contract(x, f).is_zero()) return false;
  return true;
}

QMatrix coframe_matrix(const std::vector<Form>& coframe) {
  const std::size_t n = coframe.size();
  QMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coframe[i].degree() != 1 || coframe[i].dim() != static_cast<int>(n))
      throw std::invalid_argument("coframe entries must be 1-forms in the algebra's dimension");
    for (const auto& [m, q] : coframe[i].terms()) a(i, static_cast<std::size_t>(m.indices()[0] - 1)) = q;
  }
  return a;
}

namespace {

// Rewrites forms in the e-coframe in terms of f^i = sum_j A_ij e^j.
std::vector<Form> inverse_images(const QMatrix& a) {
  auto inv = inverse(a);
  if (!inv) throw std::invalid_argument("coframe is singular");
  const int n = static_cast<int>(a.rows());
  // e^j = sum_k inv_jk f^k
  std::vector<Form> images;
  for (int j = 0; j < n; ++j) {
    Form f(n, 1);
    for (int k = 0; k < n; ++k) f.add_term(MultiIndex::from_mask(static_cast<std::uint16_t>(1u << k)), (*inv)(j, k));
    images.push_back(std::move(f));
  }
  return images;
}

}  // namespace

LieAlgebra change_coframe(const LieAlgebra& g, const std::vector<Form>& coframe) {
  const int n = g.dim();
  QMatrix a = coframe_matrix(coframe);
  std::vector<Form> images = inverse_images(a);
  std::vector<Form> d_new;
  for (const Form& f : coframe) d_new.push_back(substitute(g.d(f), images, n));
  return LieAlgebra(std::move(d_new));
}

CentralQuotient central_quotient(const LieAlgebra& g, const Vector& xi) {
  const int n = g.dim();
  if (static_cast<int>(xi.size()) != n) throw std::invalid_argument("central_quotient: vector has wrong dimension");
  int pivot = 0;
  for (int i = 1; i <= n; ++i)
    if (!is_zero(xi[i - 1]) && (pivot == 0 || abs(xi[i - 1]) > abs(xi[pivot - 1]))) pivot = i;
  if (pivot == 0) throw std::invalid_argument("central_quotient: xi is zero");
  if (!is_central(g, xi)) throw std::invalid_argument("central_quotient: xi is not central");

  const Rational& xp = xi[pivot - 1];
  std::vector<Form> coframe;
  for (int i = 1; i <= n; ++i) {
    if (i == pivot) continue;
    Form f = basis_one_form(n, i);
    if (!is_zero(xi[i - 1])) f -= Rational(xi[i - 1] / xp) * basis_one_form(n, pivot);
    coframe.push_back(std::move(f));
  }
  Form eta = Rational(1 / xp) * basis_one_form(n, pivot);
  coframe.push_back(eta);

  LieAlgebra adapted = change_coframe(g, coframe);
  std::vector<Form> d_quot;
  for (int i = 1; i < n; ++i) {
    const Form& df = adapted.de(i);
    Form basic(n - 1, 2);
    for (const auto& [m, q] : df.terms()) {
      if (m.contains(n)) throw std::logic_error("central_quotient: annihilator of xi is not d-stable");
      basic.add_term(m, q);
    }
    d_quot.push_back(std::move(basic));
  }
  Form curvature(n - 1, 2);
  for (const auto& [m, q] : adapted.de(n).terms()) {
    if (m.contains(n)) throw std::logic_error("central_quotient: curvature is not basic");
    curvature.add_term(m, q);
  }
  CentralQuotient out{LieAlgebra(std::move(d_quot)), eta, curvature, coframe, pivot};
  if (!out.quotient.d(out.curvature).is_zero()) throw std::logic_error("central_quotient: curvature is not closed");
  return out;
}

LieAlgebra central_extension(const LieAlgebra& h, const Form& gamma) {
  const int n = h.dim();
  if (gamma.dim() != n || gamma.degree() != 2) throw std::invalid_argument("central_extension: gamma must be a 2-form on h");
  if (!h.d(gamma).is_zero()) throw std::invalid_argument("central_extension: gamma is not closed");
  std::vector<Form> d;
  for (const Form& f : h.d_one()) d.push_back(extend_dimension(f, n + 1));
  d.push_back(extend_dimension(gamma, n + 1));
  return LieAlgebra(std::move(d));
}

LieAlgebra direct_sum_with_line(const LieAlgebra& h) { return central_extension(h, Form(h.dim(), 2)); }

}  // namespace calg2

#include "calg2/g2.hpp"

#include <stdexcept>

namespace calg2 {

Form standard_phi() {
  return parse_form("127+347+567+135-236-146-245", 7, 3);
}

Matrix<Radical> coframe_matrix(const std::vector<RadicalForm>& coframe) {
  const std::size_t n = coframe.size();
  Matrix<Radical> a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coframe[i].degree() != 1 || coframe[i].dim() != static_cast<int>(n))
      throw std::invalid_argument("coframe entries must be 1-forms");
    for (const auto& [m, q] : coframe[i].terms()) a(i, static_cast<std::size_t>(m.indices()[0] - 1)) = q;
  }
  return a;
}

RadicalForm phi_from_coframe(const std::vector<RadicalForm>& coframe) {
  if (coframe.size() != 7) throw std::invalid_argument("phi_from_coframe: need seven 1-forms");
  if (determinant(coframe_matrix(coframe), Radical(1)).is_zero())
    throw std::invalid_argument("phi_from_coframe: coframe is singular");
  RadicalForm phi0 = map_coefficients<Radical>(standard_phi(), [](const Rational& q) { return Radical(q); });
  return substitute(phi0, coframe, 7);
}

namespace {

int definite_sign(const Matrix<Radical>& b) {
  auto sign_of = [](const Radical& r) { return r.sign(); };
  if (!is_definite_with(b, Radical(1), sign_of)) return 0;
  return b(0, 0).sign();
}

G2Report report_for(const LieAlgebra& g, const RadicalForm& phi) {
  if (g.dim() != 7) throw std::invalid_argument("is_calibrated_g2: algebra must be 7-dimensional");
  G2Report r;
  r.phi = phi;
  r.gram = gram_matrix(phi);
  r.orientation = definite_sign(r.gram);
  r.g2_type = r.orientation != 0;
  r.closed = g.differential(phi).is_zero();
  return r;
}

RadicalForm lift(const Form& f) {
  return map_coefficients<Radical>(f, [](const Rational& q) { return Radical(q); });
}

}  // namespace

bool is_g2_type(const RadicalForm& phi) { return definite_sign(gram_matrix(phi)) != 0; }
bool is_g2_type(const Form& phi) { return is_definite(gram_matrix(phi)); }

G2Report is_calibrated_g2(const LieAlgebra& g, const RadicalForm& phi) { return report_for(g, phi); }
G2Report is_calibrated_g2(const LieAlgebra& g, const Form& phi) { return report_for(g, lift(phi)); }

Form extension_phi(const Form& omega, const Form& psi_plus) {
  if (omega.dim() != 6 || omega.degree() != 2) throw std::invalid_argument("extension_phi: omega must be a 2-form in dimension 6");
  if (psi_plus.dim() != 6 || psi_plus.degree() != 3)
    throw std::invalid_argument("extension_phi: psi must be a 3-form in dimension 6");
  return wedge(extend_dimension(omega, 7), basis_one_form(7, 7)) + extend_dimension(psi_plus, 7);
}

bool symplectic_half_flat_check(const LieAlgebra& h, const Form& omega, const Form& psi_plus) {
  if (h.dim() != 6) throw std::invalid_argument("symplectic_half_flat_check: algebra must be 6-dimensional");
  return is_calibrated_g2(direct_sum_with_line(h), extension_phi(omega, psi_plus)).calibrated();
}

}  // namespace calg2

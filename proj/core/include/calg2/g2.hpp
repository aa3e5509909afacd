#pragma once

#include <string>
#include <vector>

#include "calg2/lie.hpp"
#include "calg2/notation.hpp"
#include "calg2/radical.hpp"

namespace calg2 {

// e^127 + e^347 + e^567 + e^135 - e^236 - e^146 - e^245
Form standard_phi();

// Pullback of the standard form along the coframe: e^i -> coframe[i-1].
RadicalForm phi_from_coframe(const std::vector<RadicalForm>& coframe);
Matrix<Radical> coframe_matrix(const std::vector<RadicalForm>& coframe);

// B_ij = coefficient of e^1234567 in (e_i -| phi) ^ (e_j -| phi) ^ phi.
template <class S>
Matrix<S> gram_matrix(const BasicForm<S>& phi) {
  if (phi.dim() != 7 || phi.degree() != 3) throw std::invalid_argument("gram_matrix: expects a 3-form in dimension 7");
  std::vector<BasicForm<S>> c;
  for (int i = 1; i <= 7; ++i) c.push_back(contract(basis_vector(7, i), phi));
  const MultiIndex top = MultiIndex::from_mask(0x7f);
  Matrix<S> b(7, 7, S(0));
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      BasicForm<S> v = wedge(wedge(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]), phi);
      const S* t = v.find(top);
      if (t) b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = b(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = *t;
    }
  return b;
}

bool is_g2_type(const Form& phi);
bool is_g2_type(const RadicalForm& phi);

struct G2Report {
  RadicalForm phi;
  Matrix<Radical> gram;
  bool g2_type = false;
  bool closed = false;
  int orientation = 0;  // +1 / -1 for positive / negative definite gram, 0 otherwise
  bool calibrated() const { return g2_type && closed; }
};

G2Report is_calibrated_g2(const LieAlgebra& g, const Form& phi);
G2Report is_calibrated_g2(const LieAlgebra& g, const RadicalForm& phi);

// phi = omega ^ e^7 + psi on h + R.
Form extension_phi(const Form& omega, const Form& psi_plus);
bool symplectic_half_flat_check(const LieAlgebra& h, const Form& omega, const Form& psi_plus);

}  // namespace calg2

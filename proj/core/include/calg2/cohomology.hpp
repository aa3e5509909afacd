#pragma once

#include <optional>
#include <vector>

#include "calg2/lie.hpp"
#include "calg2/polynomial.hpp"

namespace calg2 {

Subspace closed_forms(const LieAlgebra& g, int degree);  // Z^k
Subspace exact_forms(const LieAlgebra& g, int degree);   // B^k
int betti(const LieAlgebra& g, int degree);

// Z^k, B^k and a basis of H^k. Representatives are the rows of the RREF
// basis of Z^k that are independent modulo B^k and earlier choices.
class CochainSpaces {
 public:
  CochainSpaces(const LieAlgebra& g, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const Subspace& closed() const { return closed_; }
  const Subspace& exact() const { return exact_; }
  const std::vector<Form>& reps() const { return reps_; }
  int betti() const { return static_cast<int>(reps_.size()); }

  // Coordinates of [a] in the representative basis; a must be closed.
  QVector class_coords(const Form& a) const;
  // Same, for a coordinate vector of an arbitrary form known to be closed.
  // The map is linear, so it also applies to polynomial coordinate vectors.
  const QMatrix& coordinate_map() const { return coord_map_; }

 private:
  int dim_;
  int degree_;
  Subspace closed_;
  Subspace exact_;
  std::vector<Form> reps_;
  QMatrix coord_map_;  // betti x C(n,k)
};

// Some b with db = a, if a is exact.
std::optional<Form> is_exact(const LieAlgebra& g, const Form& a);

// Matrix of [alpha] -> [alpha ^ beta] from H^2 to H^4 in the canonical bases.
QMatrix lefschetz_matrix(const LieAlgebra& h, const Form& beta);
// Same, with caller-supplied H^2 representatives as the source basis.
QMatrix lefschetz_matrix(const LieAlgebra& h, const Form& beta, const std::vector<Form>& h2_reps);

// Matrix of [rep_j] -> [rep_j ^ sum_i l_i rep_i] with entries linear in l_i.
PolyMatrix lefschetz_matrix_parametric(const LieAlgebra& h, const std::vector<Form>& reps, const VariableList& vars);

// sum_i l_i rep_i as a polynomial-coefficient form.
BasicForm<Poly> generic_combination(const std::vector<Form>& reps, const VariableList& vars);

}  // namespace calg2

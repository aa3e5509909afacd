#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "calg2/cohomology.hpp"
#include "calg2/lie.hpp"
#include "calg2/polynomial.hpp"

namespace calg2 {

enum class ObstructionKind { None, Obstr2, PropEpi, PropEpiDecomposableForced, B3 };
std::string to_string(ObstructionKind k);

struct ObstructionVerdict {
  ObstructionKind kind = ObstructionKind::None;
  std::optional<Form> witness;  // nondegenerate 2-form when kind is None
  std::string detail;
};

// First (i <= j <= k) with w_i ^ w_j ^ w_k != 0. By polarization the cube map
// vanishes on span(w) iff there is none.
std::optional<std::array<std::size_t, 3>> nonvanishing_triple(const std::vector<Form>& basis);
bool triple_wedges_vanish(const std::vector<Form>& basis);

// Element of span(basis) with nonzero cube, found on the {0..3} grid over the
// coordinates of the first nonvanishing triple; re-verified before return.
std::optional<Form> nondegenerate_element(const std::vector<Form>& basis);

// Basis of x -| Z^3 (as 2-forms).
std::vector<Form> contracted_closed_three_forms(const LieAlgebra& g, const Vector& x);

// True iff (x -| phi)^3 = 0 for every closed 3-form phi.
bool obstr2_holds(const LieAlgebra& g, const Vector& x);
ObstructionVerdict obstr2(const LieAlgebra& g, const Vector& x);

std::optional<Form> symplectic_exists(const LieAlgebra& h);

// {omega in Z^2(h) : d eta ^ omega in B^4(h)} for the quotient by xi.
std::vector<Form> epi_admissible_forms(const CentralQuotient& q);
ObstructionVerdict prop_epi_obstructs(const LieAlgebra& g, const Vector& xi);

bool b3_positive(const LieAlgebra& g);

// omega symplectic, gamma closed and not exact, gamma ^ omega exact.
bool two_lefschetz_witness(const LieAlgebra& h, const Form& omega, const Form& gamma);

enum class LefschetzVerdict { Holds, FailsWithWitness, Inconclusive };
std::string to_string(LefschetzVerdict v);

struct LefschetzAnalysis {
  LefschetzVerdict verdict = LefschetzVerdict::Inconclusive;
  std::string rule;  // "pattern (a)", "pattern (b)", "constant", "abelian", "grid", ""
  std::optional<Poly> det;    // determinant of the parametric matrix
  std::optional<Poly> cubic;  // coefficient of the volume form in omega^3
  std::optional<PolyMatrix> matrix;
  std::optional<Form> omega;  // failure witness
  std::optional<Form> gamma;
  std::string detail;
};

LefschetzAnalysis two_lefschetz_parametric(const LieAlgebra& h, const std::vector<Form>& reps);

// For d = 0 every symplectic form is GL-equivalent to e12+e34+e56, so one
// concrete Lefschetz matrix decides the property.
LefschetzAnalysis two_lefschetz_abelian(const LieAlgebra& h);

}  // namespace calg2

#include <gtest/gtest.h>

#include <random>

#include "calg2/catalog.hpp"
#include "calg2/g2.hpp"
#include "calg2/notation.hpp"
#include "calg2/obstructions.hpp"
#include "support.hpp"

using namespace calg2;

namespace {

Form f(const char* text, int dim, int degree) { return parse_form(text, dim, degree); }

LieAlgebra alg(const char* s) { return LieAlgebra::from_salamon(s); }

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = expand_families(load_catalog(CALG2_TEST_CATALOG));
  return entries;
}

Subspace span_forms(const std::vector<Form>& forms, int dim, int degree) {
  std::vector<QVector> v;
  for (const Form& a : forms) v.push_back(form_coords(a));
  return Subspace::span(binomial(dim, degree), v);
}

bool is_symplectic_on(const LieAlgebra& h, const Form& w) { return h.d(w).is_zero() && !cube_is_zero(w); }

}  // namespace

TEST(Obstr2, FiresOnTwoStepDecomposableWithE7) {
  LieAlgebra g = alg("0,0,0,0,12,34,36");
  EXPECT_TRUE(obstr2_holds(g, basis_vector(7, 7)));
  Subspace w = span_forms(contracted_closed_three_forms(g, basis_vector(7, 7)), 7, 2);
  Subspace listed = span_forms({f("13", 7, 2), f("23", 7, 2), f("34", 7, 2), f("12", 7, 2), f("36", 7, 2), f("46", 7, 2)}, 7, 2);
  EXPECT_TRUE(subspace_equal(w, listed));
  EXPECT_EQ(obstr2(g, basis_vector(7, 7)).kind, ObstructionKind::Obstr2);
}

TEST(Obstr2, AbelianNeverObstructs) {
  LieAlgebra g = LieAlgebra::abelian(7);
  for (int i = 1; i <= 7; ++i) EXPECT_FALSE(obstr2_holds(g, basis_vector(7, i)));
  ObstructionVerdict v = obstr2(g, basis_vector(7, 7));
  EXPECT_EQ(v.kind, ObstructionKind::None);
  ASSERT_TRUE(v.witness);
  EXPECT_FALSE(cube_is_zero(*v.witness));
}

TEST(Obstr2, DecomposableEntryWithE6) { EXPECT_TRUE(obstr2_holds(alg("0,0,0,12,13,24,0"), basis_vector(7, 6))); }

TEST(Obstr2, RejectsZeroVector) { EXPECT_THROW(obstr2_holds(alg("0,0,0,12,13,24,0"), QVector(7)), std::invalid_argument); }

TEST(Obstr2, InvariantUnderRescalingAndBasisChange) {
  std::mt19937 rng(81);
  for (const char* s : {"0,0,0,0,12,34,36", "0,0,12,13,23,15+24,16+34", "0,0,0,12,13,24,0"}) {
    LieAlgebra g = alg(s);
    for (int i = 1; i <= 7; ++i) {
      QVector x = basis_vector(7, i);
      if (!is_central(g, x)) continue;
      QVector y = x;
      for (auto& c : y) c *= Rational(-5, 3);
      EXPECT_EQ(obstr2_holds(g, x), obstr2_holds(g, y)) << s;
      // another basis of x -| Z^3 gives the same verdict
      std::vector<Form> basis = contracted_closed_three_forms(g, x);
      std::vector<Form> mixed;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        Form m = basis[k];
        if (k + 1 < basis.size()) m += calg2::testing::random_rational(rng) * basis[k + 1];
        mixed.push_back(m);
      }
      EXPECT_EQ(triple_wedges_vanish(basis), triple_wedges_vanish(mixed)) << s;
    }
  }
}

TEST(Polarization, TripleCriterionMatchesRandomCubes) {
  std::mt19937 rng(82);
  int degenerate = 0;
  for (int t = 0; t < 50; ++t) {
    // half the subspaces live on at most 5 indices, so every element is degenerate
    int support = t % 2 ? 5 : 7;
    std::size_t k = 1 + rng() % 4;
    std::vector<Form> basis;
    for (std::size_t i = 0; i < k; ++i) {
      Form b = calg2::testing::random_form(rng, support, 2, 0.3, 2);
      basis.push_back(extend_dimension(b, 7));
    }
    bool vanish = triple_wedges_vanish(basis);
    bool all_cubes_zero = true;
    for (int s = 0; s < 200 && all_cubes_zero; ++s) {
      Form beta(7, 2);
      for (const Form& b : basis) beta += calg2::testing::random_rational(rng, 7) * b;
      all_cubes_zero = cube_is_zero(beta);
    }
    EXPECT_EQ(vanish, all_cubes_zero);
    degenerate += vanish;
  }
  EXPECT_GT(degenerate, 10);
  EXPECT_LT(degenerate, 45);
}

TEST(Symplectic, NoneOnTheEightListedAlgebras) {
  for (const char* s : {"0,0,0,12,23,14+35", "0,0,0,12,23,14-35", "0,0,0,12,13,14+35", "0,0,0,0,12,15+34",
                        "0,0,0,0,0,12+34", "0,0,12,13,14+23,34+52", "0,0,12,13,14,34+52", "0,0,0,12,14,24"})
    EXPECT_FALSE(symplectic_exists(alg(s))) << s;
}

TEST(Symplectic, VerifiedWitnesses) {
  for (const char* s : {"0,0,0,0,0,0", "0,0,12,13,23,14", "0,0,12,13,23,14+25", "0,0,12,13,23,14-25", "0,0,0,12,13,23",
                        "0,0,0,0,0,12", "0,0,0,0,12,13"}) {
    LieAlgebra h = alg(s);
    auto w = symplectic_exists(h);
    ASSERT_TRUE(w) << s;
    EXPECT_TRUE(is_symplectic_on(h, *w)) << s;
  }
  EXPECT_EQ(*symplectic_exists(LieAlgebra::abelian(6)), f("12+34+56", 6, 2));
  EXPECT_THROW(symplectic_exists(LieAlgebra::abelian(7)), std::invalid_argument);
}

TEST(NondegenerateElement, ReturnsVerifiedElementOrNothing) {
  std::mt19937 rng(83);
  for (int t = 0; t < 50; ++t) {
    std::vector<Form> basis;
    for (int i = 0; i < 3; ++i) basis.push_back(extend_dimension(calg2::testing::random_form(rng, t % 2 ? 5 : 6, 2, 0.3, 2), 6));
    auto w = nondegenerate_element(basis);
    EXPECT_EQ(w.has_value(), !triple_wedges_vanish(basis));
    if (w) {
      EXPECT_FALSE(cube_is_zero(*w));
      EXPECT_TRUE(span_forms(basis, 6, 2).contains(form_coords(*w)));
    }
  }
}

TEST(PropEpi, NonSymplecticQuotient) {
  ObstructionVerdict v = prop_epi_obstructs(alg("0,0,12,0,13,23,14"), basis_vector(7, 7));
  EXPECT_EQ(v.kind, ObstructionKind::PropEpi);
}

TEST(PropEpi, FamilyMemberWithoutAdmissibleForm) {
  const CatalogEntry* m = nullptr;
  for (const CatalogEntry& e : catalog())
    if (e.name == "1357M(lambda=2)") m = &e;
  ASSERT_NE(m, nullptr);
  LieAlgebra g = m->algebra();
  CentralQuotient q = central_quotient(g, basis_vector(7, 7));
  EXPECT_EQ(q.quotient, alg("0,0,12,0,24+13,14"));
  EXPECT_TRUE(triple_wedges_vanish(epi_admissible_forms(q)));
  EXPECT_EQ(prop_epi_obstructs(g, basis_vector(7, 7)).kind, ObstructionKind::PropEpi);
}

TEST(PropEpi, AbelianHasWitness) {
  ObstructionVerdict v = prop_epi_obstructs(LieAlgebra::abelian(7), basis_vector(7, 7));
  EXPECT_EQ(v.kind, ObstructionKind::None);
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(is_symplectic_on(LieAlgebra::abelian(6), *v.witness));
}

TEST(PropEpi, ExactCurvatureIsReportedAsDecomposableForced) {
  // e7 with de7 = 12 = d(e3): the algebra is (0,0,12,0,0,0) + R in disguise
  ObstructionVerdict v = prop_epi_obstructs(alg("0,0,12,0,0,0,12"), basis_vector(7, 7));
  EXPECT_EQ(v.kind, ObstructionKind::PropEpiDecomposableForced);
}

TEST(PropEpi, RejectsNonCentral) {
  EXPECT_THROW(prop_epi_obstructs(alg("0,0,12,13,23,15+24,16+34"), basis_vector(7, 1)), std::invalid_argument);
}

TEST(PropEpi, AdmissibleSpaceMatchesDefinition) {
  for (const char* s : {"0,0,0,0,12,34,36", "0,0,12,13,23,15+24,16+34", "0,0,0,12,13,14,35"}) {
    LieAlgebra g = alg(s);
    CentralQuotient q = central_quotient(g, basis_vector(7, 7));
    Subspace exact4 = exact_forms(q.quotient, 4);
    for (const Form& w : epi_admissible_forms(q)) {
      EXPECT_TRUE(q.quotient.d(w).is_zero());
      EXPECT_TRUE(exact4.contains(form_coords(wedge(q.curvature, w))));
    }
  }
}

TEST(B3, PositiveEverywhere) {
  EXPECT_TRUE(b3_positive(LieAlgebra::abelian(7)));
  EXPECT_TRUE(b3_positive(alg("0,0,0,0,12,13,0")));
  for (const CatalogEntry& e : catalog())
    if (e.dim == 7) EXPECT_TRUE(b3_positive(e.algebra())) << e.name;
}

TEST(Consistency, PositiveAlgebrasAreNeverObstructed) {
  int checked = 0;
  for (const CatalogEntry& e : catalog()) {
    if (e.expected != Verdict::Calibrated) continue;
    LieAlgebra g = e.algebra();
    for (int i = 1; i <= 7; ++i) {
      QVector x = basis_vector(7, i);
      if (!is_central(g, x)) continue;
      EXPECT_FALSE(obstr2_holds(g, x)) << e.name << " e" << i;
      ObstructionVerdict v = prop_epi_obstructs(g, x);
      EXPECT_NE(v.kind, ObstructionKind::PropEpi) << e.name << " e" << i;
      if (v.kind == ObstructionKind::None) {
        ASSERT_TRUE(v.witness);
        CentralQuotient q = central_quotient(g, x);
        EXPECT_TRUE(is_symplectic_on(q.quotient, *v.witness));
      }
    }
    ++checked;
  }
  EXPECT_EQ(checked, 12);
}

TEST(TwoLefschetzWitness, Counterexamples) {
  EXPECT_TRUE(two_lefschetz_witness(alg("0,0,12,13,23,14-25"), f("-16+15+35+34+24-26", 6, 2), f("14+25+15+24", 6, 2)));
  EXPECT_TRUE(two_lefschetz_witness(alg("0,0,0,12,13,23"), f("14+26+35", 6, 2), f("-15-24+36", 6, 2)));
  EXPECT_TRUE(two_lefschetz_witness(alg("0,0,0,0,0,12"), f("16+25+34", 6, 2), f("13", 6, 2)));
}

TEST(TwoLefschetzWitness, ImpliesKernelInLefschetzMatrix) {
  LieAlgebra h = alg("0,0,0,12,13,23");
  Form omega = f("14+26+35", 6, 2);
  EXPECT_LT(rank(lefschetz_matrix(h, omega)), static_cast<std::size_t>(betti(h, 2)));
}

TEST(TwoLefschetzWitness, AbelianHasNone) {
  std::mt19937 rng(84);
  LieAlgebra h = LieAlgebra::abelian(6);
  Form omega = f("12+34+56", 6, 2);
  for (int t = 0; t < 30; ++t) {
    Form gamma = calg2::testing::random_form(rng, 6, 2);
    if (gamma.is_zero()) continue;
    EXPECT_FALSE(two_lefschetz_witness(h, omega, gamma));
  }
  EXPECT_FALSE(two_lefschetz_witness(h, f("12+34", 6, 2), f("12", 6, 2)));
}

TEST(TwoLefschetzParametric, PatternA) {
  LieAlgebra h = alg("0,0,12,13,23,14");
  LefschetzAnalysis a = two_lefschetz_parametric(h, {f("16", 6, 2), f("15+24", 6, 2), f("25", 6, 2), f("34-26", 6, 2)});
  EXPECT_EQ(a.verdict, LefschetzVerdict::Holds);
  EXPECT_EQ(a.rule, "pattern (a)");
  ASSERT_TRUE(a.det);
  EXPECT_EQ(a.det->to_string(), "-4*l4^4");
}

TEST(TwoLefschetzParametric, PatternB) {
  LieAlgebra h = alg("0,0,12,13,23,14+25");
  LefschetzAnalysis a = two_lefschetz_parametric(h, {f("14", 6, 2), f("15+24", 6, 2), f("34-26", 6, 2), f("16+35", 6, 2)});
  EXPECT_EQ(a.verdict, LefschetzVerdict::Holds);
  EXPECT_EQ(a.rule, "pattern (b)");
  // default representatives reach the same verdict
  EXPECT_EQ(two_lefschetz_parametric(h, CochainSpaces(h, 2).reps()).verdict, LefschetzVerdict::Holds);
}

TEST(TwoLefschetzParametric, FailureCarriesVerifiedWitness) {
  for (const char* s : {"0,0,12,13,23,14-25", "0,0,0,12,13,23", "0,0,0,0,0,12"}) {
    LieAlgebra h = alg(s);
    if (betti(h, 2) > 8) {
      EXPECT_THROW(two_lefschetz_parametric(h, CochainSpaces(h, 2).reps()), std::invalid_argument) << s;
      continue;
    }
    LefschetzAnalysis a = two_lefschetz_parametric(h, CochainSpaces(h, 2).reps());
    EXPECT_EQ(a.verdict, LefschetzVerdict::FailsWithWitness) << s;
    ASSERT_TRUE(a.omega && a.gamma) << s;
    EXPECT_TRUE(two_lefschetz_witness(h, *a.omega, *a.gamma)) << s;
  }
}

TEST(TwoLefschetzAbelian, Holds) {
  LefschetzAnalysis a = two_lefschetz_abelian(LieAlgebra::abelian(6));
  EXPECT_EQ(a.verdict, LefschetzVerdict::Holds);
  EXPECT_THROW(two_lefschetz_abelian(alg("0,0,0,0,0,12")), std::invalid_argument);
}

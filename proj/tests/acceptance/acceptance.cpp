#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/support.hpp"
#include "calg2/catalog.hpp"
#include "calg2/classify.hpp"
#include "calg2/cohomology.hpp"
#include "calg2/g2.hpp"
#include "calg2/lie.hpp"
#include "calg2/notation.hpp"
#include "calg2/obstructions.hpp"

using namespace calg2;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

const std::vector<CatalogEntry>& records() {
  static const std::vector<CatalogEntry> r = load_catalog(CALG2_TEST_CATALOG);
  return r;
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> e = expand_families(records());
  return e;
}

const ClassificationReport& report() {
  static const ClassificationReport r = classify(entries(), 4);
  return r;
}

const CatalogEntry& entry(const std::string& name) {
  for (const CatalogEntry& e : entries())
    if (e.name == name) return e;
  throw std::out_of_range("no catalog entry " + name);
}

Form f(const std::string& text, int dim, int degree) { return parse_form(text, dim, degree); }
LieAlgebra alg(const std::string& s) { return LieAlgebra::from_salamon(s); }

Subspace span_of(const std::vector<Form>& forms, int dim, int degree) {
  std::vector<QVector> v;
  for (const Form& a : forms) v.push_back(form_coords(a));
  return Subspace::span(binomial(dim, degree), v);
}

bool symplectic_on(const LieAlgebra& h, const Form& w) { return h.d(w).is_zero() && !cube_is_zero(w); }

Outcome headline() {
  Outcome o;
  const ClassificationReport& r = report();
  int calibrated = r.count(Verdict::Calibrated);
  o.require(calibrated == 12, "calibrated count " + std::to_string(calibrated));
  for (const std::string& m : r.mismatches()) o.require(false, "mismatch " + m);
  for (const std::string& m : r.errors()) o.require(false, "error " + m);
  std::map<std::string, int> by_group;
  for (const EntryResult& e : r.entries)
    if (e.verdict == Verdict::Calibrated) ++by_group[e.group == "family" ? "family" : e.decomposable ? "decomposable" : "other"];
  o.require(by_group["decomposable"] == 3 && by_group["family"] == 3 && by_group["other"] == 6, "calibrated split is not 3+3+6");
  o.notes.insert(o.notes.begin(), std::to_string(calibrated) + " calibrated of " + std::to_string(r.entries.size()) +
                                      ", " + std::to_string(r.mismatches().size()) + " mismatches");
  return o;
}

Outcome decomposable_algebras() {
  Outcome o;
  std::set<std::string> calibrated;
  int at_e6 = 0, fibration = 0, nonsymplectic_base = 0;
  bool e7_case = false;
  for (const CatalogEntry& e : entries()) {
    if (e.group != "decomposable") continue;
    LieAlgebra g = e.algebra();
    for (const EntryResult& r : report().entries)
      if (r.name == e.name && r.verdict == Verdict::Calibrated) calibrated.insert(e.name);
    if (e.name == "0,0,0,0,12,34,36") {
      e7_case = obstr2_holds(g, basis_vector(7, 7));
      continue;
    }
    if (e.expected == Verdict::Obstr2) {
      o.require(e.xi == 6 && obstr2_holds(g, basis_vector(7, 6)), e.name + " not rejected by obstr2 at e6");
      ++at_e6;
    } else if (e.expected == Verdict::PropEpi) {
      QVector xi = basis_vector(7, *e.xi);
      bool fires = prop_epi_obstructs(g, xi).kind != ObstructionKind::None;
      LieAlgebra base = central_quotient(g, xi).quotient;
      if (*e.xi == 7 && !symplectic_exists(base)) {
        o.require(fires, e.name + " over a non-symplectic base not rejected");
        ++nonsymplectic_base;
      } else {
        o.require(fires, e.name + " not rejected by prop_epi");
        ++fibration;
      }
    }
  }
  std::set<std::string> want{"0,0,0,0,0,0,0", "0,0,0,0,12,13,0", "0,0,0,12,13,23,0"};
  o.require(calibrated == want, "calibrated decomposables differ");
  o.require(at_e6 == 18, "entries rejected at e6: " + std::to_string(at_e6));
  o.require(fibration == 5, "fibration entries: " + std::to_string(fibration));
  o.require(nonsymplectic_base == 8, "non-symplectic base entries: " + std::to_string(nonsymplectic_base));
  o.require(e7_case, "(0,0,0,0,12,34,36) not rejected by obstr2 at e7");
  return o;
}

Outcome closed_form_tables() {
  Outcome o;
  int checked = 0;
  for (const CatalogEntry& e : entries()) {
    if (e.z3.empty()) continue;
    LieAlgebra g = e.algebra();
    std::vector<Form> listed;
    for (const std::string& s : e.z3) listed.push_back(f(s, e.dim, 3));
    Subspace z3 = closed_forms(g, 3);
    o.require(subspace_equal(z3, span_of(listed, e.dim, 3)), e.name + ": listed 3-forms do not span Z^3");
    if (e.name == "0,0,0,0,12,34,36") o.require(listed.size() == 21 && z3.dim() == 21, "21-form list");
    ++checked;
  }
  o.require(checked > 100, "only " + std::to_string(checked) + " listed bases");
  o.notes.insert(o.notes.begin(), std::to_string(checked) + " listed bases");
  return o;
}

Outcome positive_witnesses() {
  Outcome o;
  int coframes = 0;
  for (const CatalogEntry& e : entries()) {
    if (e.coframe.empty()) continue;
    G2Report rep = is_calibrated_g2(e.algebra(), phi_from_coframe(parse_coframe(e.coframe, 7)));
    o.require(rep.closed, e.name + ": d phi != 0");
    o.require(rep.g2_type, e.name + ": gram matrix not definite");
    ++coframes;
  }
  o.require(coframes == 9, std::to_string(coframes) + " coframes");
  for (const char* name : {"1357N(lambda=1)", "1357S(lambda=-3)", "147E1(lambda=2)"})
    o.require(!entry(name).coframe.empty(), std::string(name) + " has no coframe");
  // the two listed pairs, unmodified
  struct Pair {
    const char* h;
    const char* omega;
    const char* psi;
  };
  for (const Pair& p : {Pair{"0,0,0,0,12,13", "14+26+35", "123+156+245-346"},
                        Pair{"0,0,0,12,13,23", "16+2*25+34", "123+145+246-356"}}) {
    LieAlgebra h = alg(p.h);
    Form omega = f(p.omega, 6, 2), psi = f(p.psi, 6, 3);
    LieAlgebra g = direct_sum_with_line(h);
    G2Report rep = is_calibrated_g2(g, extension_phi(omega, psi));
    bool ok = symplectic_half_flat_check(h, omega, psi) && rep.calibrated();
    std::string what = std::string("(") + p.omega + ", " + p.psi + ") on (" + p.h + "): closed=" +
                       (rep.closed ? "yes" : "no") + ", definite=" + (rep.g2_type ? "yes" : "no");
    o.require(ok, what);
  }
  return o;
}

Outcome lefschetz_reproduction() {
  Outcome o;
  LieAlgebra a = alg("0,0,12,13,23,14");
  LefschetzAnalysis la = two_lefschetz_parametric(a, {f("16", 6, 2), f("15+24", 6, 2), f("25", 6, 2), f("34-26", 6, 2)});
  o.require(la.det && la.det->to_string() == "-4*l4^4", "det is " + (la.det ? la.det->to_string() : std::string("missing")));
  o.require(la.verdict == LefschetzVerdict::Holds, "(0,0,12,13,23,14) verdict " + to_string(la.verdict));

  LieAlgebra b = alg("0,0,12,13,23,14+25");
  LefschetzAnalysis lb = two_lefschetz_parametric(b, CochainSpaces(b, 2).reps());
  o.require(lb.verdict == LefschetzVerdict::Holds && lb.rule == "pattern (b)",
            "(0,0,12,13,23,14+25): " + to_string(lb.verdict) + " via " + lb.rule);

  LieAlgebra c1 = alg("0,0,12,13,23,14-25");
  Form w1 = f("-16+15+35+34+24-26", 6, 2);
  Form g1 = f("14+25+15+24", 6, 2);
  o.require(wedge(g1, w1) == f("2*1245", 6, 4), "gamma ^ omega != 2 e1245");
  o.require(c1.d(f("146", 6, 3)) == f("1245", 6, 4), "d(e146) != e1245");
  o.require(two_lefschetz_witness(c1, w1, g1), "first counterexample witness");

  LieAlgebra c2 = alg("0,0,0,12,13,23");
  Form w2 = f("14+26+35", 6, 2);
  Form g2 = f("-15-24+36", 6, 2);
  o.require(wedge(g2, w2) == c2.d(f("456", 6, 3)), "gamma ^ omega != d(e456)");
  o.require(two_lefschetz_witness(c2, w2, g2), "second counterexample witness");

  LieAlgebra c3 = alg("0,0,0,0,0,12");
  Form w3 = f("16+25+34", 6, 2);
  Form g3 = f("13", 6, 2);
  o.require(wedge(w3, g3) == -c3.d(f("356", 6, 3)), "omega ^ gamma != -d(e356)");
  o.require(two_lefschetz_witness(c3, w3, g3), "third counterexample witness");

  o.require(two_lefschetz_abelian(LieAlgebra::abelian(6)).verdict == LefschetzVerdict::Holds, "abelian verdict");
  return o;
}

Outcome non_symplectic_list() {
  Outcome o;
  for (const char* s : {"0,0,0,12,23,14+35", "0,0,0,12,23,14-35", "0,0,0,12,13,14+35", "0,0,0,0,12,15+34",
                        "0,0,0,0,0,12+34", "0,0,12,13,14+23,34+52", "0,0,12,13,14,34+52", "0,0,0,12,14,24"})
    o.require(!symplectic_exists(alg(s)), std::string(s) + " has a symplectic form");
  for (const char* s : {"0,0,0,0,0,0", "0,0,12,13,23,14", "0,0,12,13,23,14+25", "0,0,12,13,23,14-25"}) {
    LieAlgebra h = alg(s);
    auto w = symplectic_exists(h);
    o.require(w && symplectic_on(h, *w), std::string(s) + " has no verified symplectic witness");
  }
  return o;
}

Outcome b3_remark() {
  Outcome o;
  int n = 0;
  for (const CatalogEntry& e : entries()) {
    if (e.dim != 7) continue;
    o.require(betti(e.algebra(), 3) >= 1, e.name + " has b3 = 0");
    ++n;
  }
  o.notes.insert(o.notes.begin(), std::to_string(n) + " seven-dimensional entries");
  return o;
}

Form pullback(const Form& phi, const QMatrix& a) {
  std::vector<Form> images;
  for (std::size_t i = 0; i < 7; ++i) images.push_back(coords_to_form(7, 1, a.row(i)));
  return substitute(phi, images, 7);
}

Outcome property_suites() {
  Outcome o;
  std::mt19937 rng(2024);
  using calg2::testing::random_form;
  using calg2::testing::random_rational;

  for (const CatalogEntry& e : entries()) {
    LieAlgebra g = e.algebra();
    for (int k = 0; k + 2 <= e.dim; ++k) {
      Form a = random_form(rng, e.dim, k);
      if (!g.d(g.d(a)).is_zero()) o.require(false, e.name + ": d^2 != 0 in degree " + std::to_string(k));
    }
  }

  Form phi0 = standard_phi();
  QMatrix b0 = gram_matrix(phi0);
  for (int t = 0; t < 50; ++t) {
    QMatrix a = calg2::testing::random_invertible(rng, 7, 1);
    QMatrix rhs = transpose(a) * b0 * a;
    Rational det = determinant(a, Rational(1));
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) rhs(i, j) *= det;
    if (gram_matrix(pullback(phi0, a)) != rhs) o.require(false, "gram equivariance fails on sample " + std::to_string(t));
  }

  for (int t = 0; t < 50; ++t) {
    int support = t % 2 ? 5 : 7;
    std::vector<Form> basis;
    for (std::size_t i = 0, k = 1 + rng() % 4; i < k; ++i)
      basis.push_back(extend_dimension(random_form(rng, support, 2, 0.3, 2), 7));
    bool zero = true;
    for (int s = 0; s < 200 && zero; ++s) {
      Form beta(7, 2);
      for (const Form& b : basis) beta += random_rational(rng, 7) * b;
      zero = cube_is_zero(beta);
    }
    if (zero != triple_wedges_vanish(basis)) o.require(false, "polarization disagrees on subspace " + std::to_string(t));
  }

  int round_trips = 0;
  for (const CatalogEntry& e : entries()) {
    if (e.dim != 7) continue;
    LieAlgebra g = e.algebra();
    if (!is_central(g, basis_vector(7, 7))) continue;
    CentralQuotient q = central_quotient(g, basis_vector(7, 7));
    if (change_coframe(g, q.adapted_coframe) != central_extension(q.quotient, q.curvature))
      o.require(false, e.name + ": quotient/extension round trip");
    ++round_trips;
  }
  o.require(round_trips > 150, "round trips: " + std::to_string(round_trips));

  int witnesses = 0;
  for (const CatalogEntry& e : entries()) {
    LieAlgebra g = e.algebra();
    if (e.dim == 6) {
      if (auto w = symplectic_exists(g)) {
        o.require(symplectic_on(g, *w), e.name + ": symplectic witness");
        ++witnesses;
      }
      continue;
    }
    for (int i = 1; i <= 7; ++i) {
      QVector x = basis_vector(7, i);
      if (!is_central(g, x)) continue;
      ObstructionVerdict v2 = obstr2(g, x);
      if (v2.kind == ObstructionKind::None) {
        bool ok = v2.witness && !cube_is_zero(*v2.witness) &&
                  span_of(contracted_closed_three_forms(g, x), 7, 2).contains(form_coords(*v2.witness));
        o.require(ok, e.name + ": obstr2 witness");
        ++witnesses;
      }
      ObstructionVerdict vp = prop_epi_obstructs(g, x);
      if (vp.kind == ObstructionKind::None) {
        o.require(vp.witness && symplectic_on(central_quotient(g, x).quotient, *vp.witness), e.name + ": prop_epi witness");
        ++witnesses;
      }
    }
  }
  o.notes.insert(o.notes.begin(), std::to_string(round_trips) + " round trips, " + std::to_string(witnesses) +
                                      " witnesses re-verified");
  return o;
}

Outcome family_samples() {
  Outcome o;
  int samples = 0;
  for (const EntryResult& r : report().entries) {
    if (!r.lambda) continue;
    const CatalogEntry& e = entry(r.name);
    const FamilySpec* fam = nullptr;
    for (const CatalogEntry& rec : records())
      if (rec.name == e.family_name) fam = &*rec.family;
    bool witness = fam && fam->witness && *fam->witness == *e.lambda;
    if (witness) continue;
    ++samples;
    bool fires = false;
    LieAlgebra g = e.algebra();
    for (int i = 1; i <= 7; ++i) {
      QVector x = basis_vector(7, i);
      if (!is_central(g, x)) continue;
      if (obstr2_holds(g, x) || prop_epi_obstructs(g, x).kind == ObstructionKind::PropEpi) fires = true;
    }
    o.require(fires, r.name + ": no obstruction fires");
    o.require(r.sample_wise, r.name + ": not labelled sample-wise");
  }
  o.notes.insert(o.notes.begin(), std::to_string(samples) + " non-witness samples");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"classification headline", headline},
      {"decomposable algebras", decomposable_algebras},
      {"closed 3-form tables", closed_form_tables},
      {"positive witnesses", positive_witnesses},
      {"2-Lefschetz reproduction", lefschetz_reproduction},
      {"non-symplectic list", non_symplectic_list},
      {"b3 remark", b3_remark},
      {"property suites", property_suites},
      {"family samples", family_samples},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + ex.what());
    }
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
    for (std::size_t k = 0; k < o.notes.size(); ++k) line << (k ? "; " : ": ") << o.notes[k];
    std::puts(line.str().c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}

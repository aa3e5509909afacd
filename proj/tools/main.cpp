#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "calg2/catalog.hpp"
#include "calg2/classify.hpp"
#include "calg2/cohomology.hpp"
#include "calg2/g2.hpp"
#include "calg2/notation.hpp"
#include "calg2/obstructions.hpp"

using namespace calg2;
using json = nlohmann::ordered_json;

namespace {

// 0 success, 1 negative outcome (invalid algebra, failed check, mismatches), 2 bad input.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LieAlgebra parse_algebra(const std::string& text) {
  LieAlgebra g = LieAlgebra::from_salamon(text);
  if (!is_jacobi(g)) throw InputError("Jacobi identity fails (d^2 != 0 on 1-forms): " + text);
  if (!is_nilpotent(g)) throw InputError("not nilpotent: " + text);
  return g;
}

std::string vector_text(const Vector& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    const Rational& c = v[i];
    if (!first) os << (sign(c) < 0 ? "-" : "+");
    else if (sign(c) < 0) os << "-";
    Rational a = abs(c);
    if (a != 1) os << to_string(a) << "*";
    os << "e" << i + 1;
    first = false;
  }
  return first ? "0" : os.str();
}

std::string cell_text(const Rational& x) { return to_string(x); }
std::string cell_text(const Radical& x) { return x.to_string(); }
std::string cell_text(const Poly& x) { return x.to_string(); }

template <class T>
json matrix_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cell_text(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
std::string matrix_text(const Matrix<T>& m, const std::string& indent) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i].push_back(cell_text(m(i, j)));
      width = std::max(width, cells[i].back().size());
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    os << indent << "[";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << std::string(width - row[j].size(), ' ') << row[j];
    os << "]\n";
  }
  return os.str();
}

void emit(const std::string& format, const json& j, const std::string& text) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_validate(const std::string& salamon, const std::string& format) {
  LieAlgebra g = LieAlgebra::from_salamon(salamon);
  bool jacobi = is_jacobi(g);
  bool nilpotent = jacobi && is_nilpotent(g);
  json j;
  j["salamon"] = g.salamon();
  j["dim"] = g.dim();
  j["jacobi"] = jacobi;
  j["nilpotent"] = nilpotent;
  std::ostringstream os;
  os << "algebra: " << g.salamon() << " (dim " << g.dim() << ")\n";
  os << "jacobi: " << (jacobi ? "yes" : "no") << "\n";
  os << "nilpotent: " << (jacobi ? (nilpotent ? "yes" : "no") : "not checked") << "\n";
  if (nilpotent) {
    json degrees = json::array();
    os << "k  dim Z  dim B  b_k\n";
    for (int k = 0; k <= g.dim(); ++k) {
      int z = static_cast<int>(closed_forms(g, k).dim()), b = static_cast<int>(exact_forms(g, k).dim());
      degrees.push_back({{"k", k}, {"closed", z}, {"exact", b}, {"betti", z - b}});
      os << k << "  " << std::string(5 - std::to_string(z).size(), ' ') << z << "  "
         << std::string(5 - std::to_string(b).size(), ' ') << b << "  " << z - b << "\n";
    }
    j["cohomology"] = degrees;
    j["valid"] = true;
    os << "valid\n";
  } else {
    j["valid"] = false;
    os << "invalid\n";
  }
  emit(format, j, os.str());
  if (!jacobi) std::cerr << "error: Jacobi identity fails (d^2 != 0 on 1-forms)\n";
  else if (!nilpotent) std::cerr << "error: algebra is not nilpotent\n";
  return nilpotent ? kOk : kNegative;
}

int cmd_cohomology(const std::string& salamon, std::optional<int> degree, const std::string& format) {
  LieAlgebra g = parse_algebra(salamon);
  json j;
  j["salamon"] = g.salamon();
  json degrees = json::array();
  std::ostringstream os;
  os << "algebra: " << g.salamon() << "\n";
  int lo = degree ? *degree : 0, hi = degree ? *degree : g.dim();
  if (lo < 0 || hi > g.dim()) throw InputError("degree out of range");
  for (int k = lo; k <= hi; ++k) {
    CochainSpaces c(g, k);
    json reps = json::array();
    for (const Form& r : c.reps()) reps.push_back(print_form(r));
    degrees.push_back({{"k", k},
                       {"closed", c.closed().dim()},
                       {"exact", c.exact().dim()},
                       {"betti", c.betti()},
                       {"reps", reps}});
    os << "H^" << k << ": dim Z = " << c.closed().dim() << ", dim B = " << c.exact().dim() << ", b = " << c.betti()
       << "\n";
    if (degree)
      for (const Form& r : c.reps()) os << "  [" << print_form(r) << "]\n";
  }
  j["degrees"] = degrees;
  emit(format, j, os.str());
  return kOk;
}

int cmd_obstruct(const std::string& salamon, std::optional<int> xi, bool all_center, bool indecomposable,
                 const std::string& format) {
  LieAlgebra g = parse_algebra(salamon);
  std::vector<int> targets;
  if (xi) {
    if (*xi < 1 || *xi > g.dim()) throw InputError("--xi out of range");
    if (!is_central(g, basis_vector(g.dim(), *xi))) throw InputError("e" + std::to_string(*xi) + " is not central");
    targets.push_back(*xi);
  } else {
    (void)all_center;
    for (int i = 1; i <= g.dim(); ++i)
      if (is_central(g, basis_vector(g.dim(), i))) targets.push_back(i);
  }
  json j;
  j["salamon"] = g.salamon();
  j["b3"] = betti(g, 3);
  json results = json::array();
  std::ostringstream os;
  os << "algebra: " << g.salamon() << "\n";
  os << "center: ";
  Subspace z = center(g);
  for (std::size_t i = 0; i < z.basis().size(); ++i) os << (i ? ", " : "") << vector_text(z.basis()[i]);
  os << "\nb3: " << betti(g, 3) << "\n";
  bool any = false;
  for (int i : targets) {
    Vector x = basis_vector(g.dim(), i);
    ObstructionVerdict o2 = obstr2(g, x), pe = prop_epi_obstructs(g, x);
    bool pe_fires = pe.kind == ObstructionKind::PropEpi ||
                    (pe.kind == ObstructionKind::PropEpiDecomposableForced && indecomposable);
    bool o2_fires = o2.kind == ObstructionKind::Obstr2;
    std::string verdict = pe_fires ? "PropEpi" : o2_fires ? "Obstr2" : "None";
    if (pe_fires && o2_fires) verdict = "PropEpi+Obstr2";
    any = any || pe_fires || o2_fires;
    json r;
    r["xi"] = "e" + std::to_string(i);
    r["verdict"] = verdict;
    r["obstr2"] = {{"kind", to_string(o2.kind)}, {"detail", o2.detail}};
    if (o2.witness) r["obstr2"]["witness"] = print_form(*o2.witness);
    r["prop_epi"] = {{"kind", to_string(pe.kind)}, {"detail", pe.detail}};
    if (pe.witness) r["prop_epi"]["witness"] = print_form(*pe.witness);
    results.push_back(std::move(r));
    os << "xi = e" << i << ": " << verdict << "\n";
    os << "  obstr2: " << to_string(o2.kind) << "  " << o2.detail << "\n";
    if (o2.witness) os << "    witness: " << print_form(*o2.witness) << "\n";
    os << "  prop_epi: " << to_string(pe.kind) << "  " << pe.detail << "\n";
    if (pe.witness) os << "    witness: " << print_form(*pe.witness) << "\n";
  }
  j["results"] = results;
  j["obstructed"] = any;
  emit(format, j, os.str());
  return kOk;
}

struct G2Source {
  std::string salamon;
  std::string coframe;
  std::string omega, psi;
};

int cmd_verify_g2(const G2Source& src, const std::string& format) {
  LieAlgebra g = parse_algebra(src.salamon);
  G2Report rep;
  std::string how;
  if (!src.coframe.empty()) {
    if (g.dim() != 7) throw InputError("a coframe needs a 7-dimensional algebra");
    std::string text = src.coframe;
    std::replace(text.begin(), text.end(), ',', ';');
    rep = is_calibrated_g2(g, phi_from_coframe(parse_coframe(text, 7)));
    how = "coframe";
  } else {
    if (src.omega.empty() || src.psi.empty()) throw InputError("give --coframe or both --omega and --psi");
    LieAlgebra h = g;
    if (g.dim() == 7) {
      if (!g.de(7).is_zero() || !is_central(g, basis_vector(7, 7)))
        throw InputError("--omega/--psi need h or h + R with e7 a central direct summand");
      std::vector<Form> d6;
      for (int i = 1; i <= 6; ++i) {
        Form f(6, 2);
        for (const auto& [m, c] : g.de(i).terms()) f.add_term(m, c);
        d6.push_back(f);
      }
      h = LieAlgebra(d6);
    } else if (g.dim() != 6) {
      throw InputError("--omega/--psi need a 6- or 7-dimensional algebra");
    }
    rep = is_calibrated_g2(direct_sum_with_line(h), extension_phi(parse_form(src.omega, 6, 2), parse_form(src.psi, 6, 3)));
    how = "omega ^ e7 + psi";
    g = direct_sum_with_line(h);
  }
  json j;
  j["salamon"] = g.salamon();
  j["source"] = how;
  j["phi"] = print_form(rep.phi);
  j["closed"] = rep.closed;
  j["g2_type"] = rep.g2_type;
  j["orientation"] = rep.orientation;
  j["calibrated"] = rep.calibrated();
  j["gram"] = matrix_json(rep.gram);
  std::ostringstream os;
  os << "algebra: " << g.salamon() << "\n";
  os << "phi (" << how << "): " << print_form(rep.phi) << "\n";
  os << "gram:\n" << matrix_text(rep.gram, "  ");
  os << "G2-type: " << (rep.g2_type ? (rep.orientation > 0 ? "yes (positive definite)" : "yes (negative definite)")
                                    : "no")
     << "\n";
  os << "closed: " << (rep.closed ? "yes" : "no") << "\n";
  os << (rep.calibrated() ? "calibrated" : "not calibrated") << "\n";
  emit(format, j, os.str());
  return rep.calibrated() ? kOk : kNegative;
}

std::vector<Form> parse_form_list(const std::string& text, int dim, int degree) {
  std::vector<Form> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, text.find(';') == std::string::npos ? ',' : ';'))
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_form(item, dim, degree));
  return out;
}

int cmd_lefschetz(const std::string& salamon, const std::string& omega_text, const std::string& gamma_text,
                  const std::string& reps_text, const std::string& format) {
  LieAlgebra h = parse_algebra(salamon);
  if (h.dim() != 6) throw InputError("lefschetz needs a 6-dimensional algebra");
  json j;
  j["salamon"] = h.salamon();
  std::ostringstream os;
  os << "algebra: " << h.salamon() << "\n";
  auto sympl = symplectic_exists(h);
  j["symplectic"] = sympl.has_value();
  if (sympl) j["symplectic_witness"] = print_form(*sympl);
  os << "symplectic: " << (sympl ? "yes, e.g. " + print_form(*sympl) : "no") << "\n";

  if (!omega_text.empty()) {
    Form omega = parse_form(omega_text, 6, 2);
    if (!h.d(omega).is_zero()) throw InputError("omega is not closed");
    QMatrix m = lefschetz_matrix(h, omega);
    std::size_t r = rank(m);
    j["omega"] = print_form(omega);
    j["nondegenerate"] = !cube_is_zero(omega);
    j["matrix"] = matrix_json(m);
    j["rank"] = r;
    j["isomorphism"] = r == m.rows() && m.rows() == m.cols();
    os << "omega: " << print_form(omega) << (cube_is_zero(omega) ? " (degenerate)" : " (symplectic)") << "\n";
    os << "H2 -> H4 matrix (" << m.rows() << "x" << m.cols() << ", rank " << r << "):\n" << matrix_text(m, "  ");
    bool ok = true;
    if (!gamma_text.empty()) {
      Form gamma = parse_form(gamma_text, 6, 2);
      bool w = two_lefschetz_witness(h, omega, gamma);
      j["gamma"] = print_form(gamma);
      j["witness"] = w;
      os << "gamma: " << print_form(gamma) << "\n";
      if (w) {
        Form prod = wedge(gamma, omega);
        Form prim = *is_exact(h, prod);
        j["product"] = print_form(prod);
        j["primitive"] = print_form(prim);
        os << "gamma ^ omega = " << print_form(prod) << " = d(" << print_form(prim) << ")\n";
        os << "2-Lefschetz fails: [gamma] != 0 is in the kernel\n";
      } else {
        os << "(omega, gamma) is not a failure witness\n";
      }
      ok = w;
    }
    emit(format, j, os.str());
    return ok ? kOk : kNegative;
  }

  if (!sympl) {
    j["verdict"] = "Vacuous";
    os << "verdict: Vacuous (no symplectic form)\n";
    emit(format, j, os.str());
    return kOk;
  }

  LefschetzAnalysis a;
  if (h.is_abelian()) {
    a = two_lefschetz_abelian(h);
  } else {
    std::vector<Form> reps = reps_text.empty() ? CochainSpaces(h, 2).reps() : parse_form_list(reps_text, 6, 2);
    a = two_lefschetz_parametric(h, reps);
    json rj = json::array();
    os << "H2 representatives:\n";
    for (std::size_t i = 0; i < reps.size(); ++i) {
      rj.push_back(print_form(reps[i]));
      os << "  l" << i + 1 << ": " << print_form(reps[i]) << "\n";
    }
    j["reps"] = rj;
  }
  j["verdict"] = to_string(a.verdict);
  j["rule"] = a.rule;
  if (a.det) j["det"] = a.det->to_string();
  if (a.cubic) j["cubic"] = a.cubic->to_string();
  if (a.omega) j["omega"] = print_form(*a.omega);
  if (a.gamma) j["gamma"] = print_form(*a.gamma);
  j["detail"] = a.detail;
  if (a.matrix) {
    json m = json::array();
    for (std::size_t r = 0; r < a.matrix->rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < a.matrix->cols(); ++c) row.push_back((*a.matrix)(r, c).to_string());
      m.push_back(row);
    }
    j["matrix"] = m;
    os << "parametric matrix:\n" << matrix_text(*a.matrix, "  ");
  }
  if (a.det) os << "det: " << a.det->to_string() << "\n";
  if (a.cubic) os << "omega^3 coefficient: " << a.cubic->to_string() << "\n";
  os << "verdict: " << to_string(a.verdict) << (a.rule.empty() ? "" : " (" + a.rule + ")") << "\n";
  if (a.omega) os << "  omega: " << print_form(*a.omega) << "\n";
  if (a.gamma) os << "  gamma: " << print_form(*a.gamma) << "\n";
  if (!a.detail.empty()) os << "  " << a.detail << "\n";
  emit(format, j, os.str());
  return a.verdict == LefschetzVerdict::Holds ? kOk : kNegative;
}

int cmd_classify(const std::string& catalog_path, const std::string& format, unsigned jobs,
                 const std::vector<std::string>& groups, bool timings) {
  std::vector<CatalogEntry> entries = expand_families(load_catalog(catalog_path));
  if (!groups.empty()) {
    std::vector<CatalogEntry> kept;
    for (CatalogEntry& e : entries)
      if (std::find(groups.begin(), groups.end(), e.group) != groups.end()) kept.push_back(std::move(e));
    entries = std::move(kept);
  }
  ClassificationReport report = classify(entries, jobs);
  if (format == "json")
    std::cout << report_json(report, timings);
  else
    std::cout << report_text(report);
  for (const std::string& e : report.errors()) std::cerr << "error: " << e << "\n";
  for (const std::string& m : report.mismatches()) std::cerr << "mismatch: " << m << "\n";
  return report.ok() ? kOk : kNegative;
}

int cmd_normalize(const std::string& catalog_path, bool expand) {
  std::vector<CatalogEntry> entries = load_catalog(catalog_path);
  if (expand) entries = expand_families(entries);
  std::cout << emit_catalog(entries);
  return kOk;
}

std::string resolve_catalog(const std::string& flag) { return flag.empty() ? default_catalog_path() : flag; }

// Fills salamon and witness data from a catalog entry (family instances by "NAME(lambda=v)").
G2Source g2_source_from_catalog(const std::string& catalog_path, const std::string& name) {
  for (const CatalogEntry& e : expand_families(load_catalog(catalog_path))) {
    if (e.name != name) continue;
    G2Source s;
    s.salamon = e.salamon;
    s.coframe = e.coframe;
    s.omega = e.omega;
    s.psi = e.psi;
    return s;
  }
  throw InputError("no catalog entry named " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Chevalley-Eilenberg calculus and calibrated G2 checks for nilpotent Lie algebras"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::string salamon;
  auto* validate = app.add_subcommand("validate", "Check Jacobi and nilpotency; print dims of Z^k, B^k, H^k");
  validate->add_option("algebra", salamon, "Salamon string, e.g. 0,0,0,0,12,13,0")->required();

  std::optional<int> degree;
  auto* cohom = app.add_subcommand("cohomology", "Closed/exact dimensions and H^k representatives");
  cohom->add_option("algebra", salamon, "Salamon string")->required();
  cohom->add_option("--degree,-k", degree, "Single degree (prints representatives)");

  std::optional<int> xi;
  bool all_center = false, indecomposable = false;
  auto* obstruct = app.add_subcommand("obstruct", "Run both obstructions on central basis vectors");
  obstruct->add_option("algebra", salamon, "Salamon string")->required();
  auto* xi_opt = obstruct->add_option("--xi", xi, "Index i of the central basis vector e_i");
  obstruct->add_flag("--all-center", all_center, "Every central standard basis vector (default)")->excludes(xi_opt);
  obstruct->add_flag("--indecomposable", indecomposable,
                     "Treat an exact curvature as obstructing (algebra known to be indecomposable)");

  G2Source g2src;
  std::string coframe_file, entry_name, catalog_flag;
  auto* verify = app.add_subcommand("verify-g2", "Build phi and check closedness and G2-type");
  verify->add_option("algebra", g2src.salamon, "Salamon string (6-dim with --omega/--psi, or 7-dim)");
  auto* cf = verify->add_option("--coframe", coframe_file, "File with seven 1-forms, one per line");
  auto* cft = verify->add_option("--coframe-text", g2src.coframe, "Seven 1-forms separated by ';' or ','")->excludes(cf);
  auto* om = verify->add_option("--omega", g2src.omega, "Symplectic 2-form on h")->excludes(cf)->excludes(cft);
  verify->add_option("--psi", g2src.psi, "3-form psi+ on h")->needs(om);
  verify->add_option("--entry", entry_name, "Take algebra and witness from a catalog entry");
  verify->add_option("--catalog", catalog_flag, "Catalog file for --entry");

  std::string omega_text, gamma_text, reps_text;
  auto* lef = app.add_subcommand("lefschetz", "2-Lefschetz analysis on a 6-dimensional algebra");
  lef->add_option("algebra", salamon, "Salamon string")->required();
  auto* lom = lef->add_option("--omega", omega_text, "Concrete closed 2-form");
  lef->add_option("--gamma", gamma_text, "Closed 2-form to test as a kernel witness")->needs(lom);
  lef->add_option("--reps", reps_text, "H^2 representatives separated by ';' or ','")->excludes(lom);

  unsigned jobs = 1;
  std::vector<std::string> groups;
  bool no_timings = false;
  auto* cls = app.add_subcommand("classify", "Full classification sweep over a catalog");
  cls->add_option("--catalog", catalog_flag, "Catalog file (default: shipped catalog)");
  cls->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  cls->add_option("--group", groups, "Restrict to catalog groups (dim6, decomposable, step2..step5, family)");
  cls->add_flag("--no-timings", no_timings, "Omit timings from the JSON report");

  bool expand = false;
  auto* norm = app.add_subcommand("normalize", "Re-emit a catalog in normalized form");
  norm->add_option("--catalog", catalog_flag, "Catalog file (default: shipped catalog)");
  norm->add_flag("--expand", expand, "Expand families into per-lambda instances");

  for (auto* sub : {validate, cohom, obstruct, verify, lef, cls, norm})
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*validate) return cmd_validate(salamon, format);
    if (*cohom) return cmd_cohomology(salamon, degree, format);
    if (*obstruct) return cmd_obstruct(salamon, xi, all_center, indecomposable, format);
    if (*verify) {
      if (!entry_name.empty()) {
        G2Source s = g2_source_from_catalog(resolve_catalog(catalog_flag), entry_name);
        if (!g2src.omega.empty() || !coframe_file.empty() || !g2src.coframe.empty()) {
          s.coframe = g2src.coframe;
          s.omega = g2src.omega;
          s.psi = g2src.psi;
        }
        g2src = s;
      } else if (g2src.salamon.empty()) {
        throw InputError("give an algebra or --entry");
      }
      if (!coframe_file.empty()) g2src.coframe = read_text(coframe_file);
      if (!g2src.coframe.empty()) {
        g2src.omega.clear();
        g2src.psi.clear();
      }
      return cmd_verify_g2(g2src, format);
    }
    if (*lef) return cmd_lefschetz(salamon, omega_text, gamma_text, reps_text, format);
    if (*cls) return cmd_classify(resolve_catalog(catalog_flag), format, jobs, groups, !no_timings);
    if (*norm) return cmd_normalize(resolve_catalog(catalog_flag), expand);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const CatalogError& e) {
    std::cerr << "catalog error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

#include "calg2/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "calg2/cohomology.hpp"
#include "calg2/notation.hpp"

#ifndef CALG2_DEFAULT_CATALOG
#define CALG2_DEFAULT_CATALOG "catalog.txt"
#endif

namespace calg2 {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Calibrated: return "Calibrated";
    case Verdict::Obstr2: return "Obstr2";
    case Verdict::PropEpi: return "PropEpi";
    case Verdict::B3: return "B3";
    case Verdict::NonSymplectic6: return "NonSymplectic6";
    case Verdict::TwoLefschetz6: return "TwoLefschetz6";
    case Verdict::Counterexample6: return "Counterexample6";
    case Verdict::Unresolved: return "Unresolved";
  }
  return "?";
}

Verdict parse_verdict(const std::string& text) {
  for (Verdict v : {Verdict::Calibrated, Verdict::Obstr2, Verdict::PropEpi, Verdict::B3, Verdict::NonSymplectic6,
                    Verdict::TwoLefschetz6, Verdict::Counterexample6, Verdict::Unresolved})
    if (to_string(v) == text) return v;
  throw std::invalid_argument("unknown verdict '" + text + "'");
}

bool LambdaConstraint::admits(const Rational& q) const {
  switch (op) {
    case Op::NotEqual: return q != value;
    case Op::Greater: return q > value;
    case Op::GreaterEqual: return q >= value;
    case Op::Less: return q < value;
    case Op::LessEqual: return q <= value;
  }
  return false;
}

std::string LambdaConstraint::to_string() const {
  static const char* names[] = {"!=", ">", ">=", "<", "<="};
  return names[static_cast<int>(op)] + calg2::to_string(value);
}

bool FamilySpec::admits(const Rational& q) const {
  return std::all_of(constraints.begin(), constraints.end(), [&](const LambdaConstraint& c) { return c.admits(q); });
}

std::vector<Rational> FamilySpec::sample_set() const {
  std::vector<Rational> out;
  if (witness) out.push_back(*witness);
  for (const Rational& q : samples)
    if (admits(q) && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  return out;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

LambdaConstraint parse_constraint(const std::string& text) {
  std::string t = normalize_text(text);
  static const std::vector<std::pair<std::string, LambdaConstraint::Op>> ops{
      {"!=", LambdaConstraint::Op::NotEqual}, {">=", LambdaConstraint::Op::GreaterEqual},
      {"<=", LambdaConstraint::Op::LessEqual}, {">", LambdaConstraint::Op::Greater},
      {"<", LambdaConstraint::Op::Less}};
  for (const auto& [sym, op] : ops)
    if (t.rfind(sym, 0) == 0) return {op, parse_rational(t.substr(sym.size()))};
  throw std::invalid_argument("malformed lambda constraint '" + text + "'");
}

std::size_t line_of(const CatalogEntry& e, const std::string& key) {
  auto it = e.key_lines.find(key);
  return it == e.key_lines.end() ? e.line : it->second;
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{"name",  "salamon",       "salamon_lambda", "dim",  "group",
                                          "decomposable", "expected", "xi",   "quotient", "lambda_constraint",
                                          "lambda_samples", "lambda_witness", "coframe", "omega", "psi",
                                          "psi_corrected", "gamma", "reps", "z3"};
  return keys;
}

void finish_record(CatalogEntry& e, const std::map<std::string, std::string>& kv, const std::string& source) {
  auto get = [&](const std::string& k) -> const std::string* {
    auto it = kv.find(k);
    return it == kv.end() ? nullptr : &it->second;
  };
  auto fail = [&](const std::string& key, const std::string& msg) {
    throw CatalogError(source, line_of(e, key), "entry '" + e.name + "': " + msg);
  };
  if (!get("name")) throw CatalogError(source, e.line, "record without a name");
  e.name = *get("name");
  if (!get("salamon")) fail("name", "missing salamon");
  e.salamon = *get("salamon");
  if (const auto* v = get("group")) e.group = *v;
  try {
    if (const auto* v = get("dim")) e.dim = std::stoi(*v);
  } catch (const std::exception&) {
    fail("dim", "malformed dim");
  }
  if (e.dim != 6 && e.dim != 7) fail("dim", "dim must be 6 or 7");
  if (const auto* v = get("decomposable")) {
    if (*v != "true" && *v != "false") fail("decomposable", "decomposable must be true or false");
    e.decomposable = *v == "true";
  }
  if (!get("expected")) fail("name", "missing expected verdict");
  try {
    e.expected = parse_verdict(*get("expected"));
  } catch (const std::exception& ex) {
    fail("expected", ex.what());
  }
  if (const auto* v = get("xi")) {
    try {
      e.xi = std::stoi(*v);
    } catch (const std::exception&) {
      fail("xi", "malformed xi");
    }
    if (*e.xi < 1 || *e.xi > e.dim) fail("xi", "xi index out of range");
  }
  if (const auto* v = get("quotient")) e.quotient = *v;
  if (const auto* v = get("coframe")) e.coframe = *v;
  if (const auto* v = get("omega")) e.omega = *v;
  if (const auto* v = get("psi")) e.psi = *v;
  if (const auto* v = get("psi_corrected")) e.psi_corrected = *v;
  if (const auto* v = get("gamma")) e.gamma = *v;
  if (const auto* v = get("reps")) e.reps = split(*v, ';');
  if (const auto* v = get("z3")) e.z3 = split(*v, ',');
  if (const auto* v = get("salamon_lambda")) {
    FamilySpec f;
    f.lambda_part = *v;
    try {
      if (const auto* c = get("lambda_constraint"))
        for (const std::string& part : split(*c, ','))
          if (!part.empty()) f.constraints.push_back(parse_constraint(part));
      if (const auto* s = get("lambda_samples"))
        for (const std::string& part : split(*s, ',')) f.samples.push_back(parse_rational(normalize_text(part)));
      if (const auto* w = get("lambda_witness")) f.witness = parse_rational(normalize_text(*w));
    } catch (const std::exception& ex) {
      fail("salamon_lambda", ex.what());
    }
    if (f.witness && !f.admits(*f.witness)) fail("lambda_witness", "witness lambda violates the family constraint");
    e.family = std::move(f);
  }
}

}  // namespace

LieAlgebra CatalogEntry::algebra() const {
  if (family) throw std::logic_error("CatalogEntry::algebra: family record needs a lambda value");
  return LieAlgebra::from_salamon(salamon, dim);
}

LieAlgebra family_instance(const CatalogEntry& family, const Rational& lambda) {
  if (!family.family) throw std::invalid_argument("'" + family.name + "' is not a family");
  if (!family.family->admits(lambda))
    throw std::invalid_argument("lambda = " + to_string(lambda) + " is excluded for family " + family.name);
  std::vector<Form> base = parse_salamon(family.salamon, family.dim);
  std::vector<Form> part = parse_salamon(family.family->lambda_part, family.dim);
  for (std::size_t i = 0; i < base.size(); ++i) base[i] += lambda * part[i];
  return LieAlgebra(std::move(base));
}

LieAlgebra family_instance(const std::vector<CatalogEntry>& catalog, const std::string& name, const Rational& lambda) {
  for (const CatalogEntry& e : catalog)
    if (e.name == name && e.family) return family_instance(e, lambda);
  throw std::invalid_argument("no family named '" + name + "'");
}

CatalogEntry instantiate(const CatalogEntry& family, const Rational& lambda) {
  CatalogEntry e = family;
  LieAlgebra g = family_instance(family, lambda);
  e.family.reset();
  e.family_name = family.name;
  e.lambda = lambda;
  e.name = family.name + "(lambda=" + to_string(lambda) + ")";
  e.salamon = g.salamon();
  bool witness = family.family->witness && *family.family->witness == lambda;
  if (witness) {
    e.expected = Verdict::Calibrated;
  } else {
    e.coframe.clear();
  }
  return e;
}

std::vector<CatalogEntry> expand_families(const std::vector<CatalogEntry>& entries) {
  std::vector<CatalogEntry> out;
  for (const CatalogEntry& e : entries) {
    if (!e.family) {
      out.push_back(e);
      continue;
    }
    for (const Rational& q : e.family->sample_set()) out.push_back(instantiate(e, q));
  }
  return out;
}

namespace {

void validate_algebra(const CatalogEntry& e, const LieAlgebra& g, const std::string& source, const std::string& what) {
  if (g.dim() != e.dim)
    throw CatalogError(source, line_of(e, "salamon"), "entry '" + e.name + "': " + what + " has the wrong dimension");
  if (!is_jacobi(g))
    throw CatalogError(source, line_of(e, "salamon"),
                       "entry '" + e.name + "': " + what + " violates the Jacobi identity (d^2 != 0)");
  if (!is_nilpotent(g))
    throw CatalogError(source, line_of(e, "salamon"), "entry '" + e.name + "': " + what + " is not nilpotent");
  if (e.xi && !is_central(g, basis_vector(g.dim(), *e.xi)))
    throw CatalogError(source, line_of(e, "xi"), "entry '" + e.name + "': e" + std::to_string(*e.xi) +
                                                     " is not central in " + what);
}

}  // namespace

void validate_entry(const CatalogEntry& e, const std::string& source) {
  auto wrap = [&](const std::string& key, auto&& fn) {
    try {
      fn();
    } catch (const CatalogError&) {
      throw;
    } catch (const std::exception& ex) {
      throw CatalogError(source, line_of(e, key), "entry '" + e.name + "': " + key + ": " + ex.what());
    }
  };
  const int n = e.dim;
  if (e.expected == Verdict::Calibrated && e.coframe.empty() && (e.omega.empty() || e.psi.empty()) &&
      !(e.family && e.family->witness))
    throw CatalogError(source, line_of(e, "expected"), "entry '" + e.name + "': Calibrated needs a coframe or omega/psi");
  if ((e.expected == Verdict::Obstr2 || e.expected == Verdict::PropEpi) && !e.xi)
    throw CatalogError(source, line_of(e, "expected"), "entry '" + e.name + "': obstruction verdict needs xi");

  std::vector<LieAlgebra> algebras;
  if (e.family) {
    wrap("salamon_lambda", [&] { parse_salamon(e.family->lambda_part, n); });
    for (const Rational& q : e.family->sample_set()) {
      LieAlgebra g;
      wrap("salamon", [&] { g = family_instance(e, q); });
      validate_algebra(e, g, source, "instance lambda=" + to_string(q));
      algebras.push_back(g);
    }
    if (e.family->witness && e.coframe.empty())
      throw CatalogError(source, line_of(e, "lambda_witness"), "entry '" + e.name + "': witness lambda needs a coframe");
  } else {
    LieAlgebra g;
    wrap("salamon", [&] { g = LieAlgebra::from_salamon(e.salamon, n); });
    validate_algebra(e, g, source, "algebra");
    algebras.push_back(g);
  }

  if (!e.z3.empty()) {
    const LieAlgebra& g = algebras.front();
    for (const std::string& s : e.z3) {
      Form f;
      wrap("z3", [&] { f = parse_form(s, n, 3); });
      if (!g.d(f).is_zero())
        throw CatalogError(source, line_of(e, "z3"), "entry '" + e.name + "': listed 3-form " + s + " is not closed");
    }
  }
  if (!e.coframe.empty()) wrap("coframe", [&] { parse_coframe(e.coframe, 7); });
  const int h = e.dim == 7 ? 6 : e.dim;
  if (!e.omega.empty()) wrap("omega", [&] { parse_form(e.omega, h, 2); });
  if (!e.psi.empty()) wrap("psi", [&] { parse_form(e.psi, h, 3); });
  if (!e.psi_corrected.empty()) wrap("psi_corrected", [&] { parse_form(e.psi_corrected, h, 3); });
  if (!e.gamma.empty()) wrap("gamma", [&] { parse_form(e.gamma, h, 2); });
  for (const std::string& r : e.reps) wrap("reps", [&] { parse_form(r, n, 2); });
}

std::vector<CatalogEntry> parse_catalog(std::istream& in, const std::string& source) {
  std::vector<CatalogEntry> out;
  std::string line;
  std::size_t lineno = 0;
  CatalogEntry cur;
  std::map<std::string, std::string> kv;
  bool open = false;
  auto close = [&] {
    if (!open) return;
    finish_record(cur, kv, source);
    validate_entry(cur, source);
    out.push_back(std::move(cur));
    cur = CatalogEntry();
    kv.clear();
    open = false;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) {
      close();
      continue;
    }
    if (t[0] == '#') continue;
    std::size_t colon = t.find(':');
    if (colon == std::string::npos) throw CatalogError(source, lineno, "expected 'key: value'");
    std::string key = trim(t.substr(0, colon)), value = trim(t.substr(colon + 1));
    if (!known_keys().count(key)) throw CatalogError(source, lineno, "unknown key '" + key + "'");
    if (!open) {
      open = true;
      cur.line = lineno;
    }
    if (kv.count(key)) throw CatalogError(source, lineno, "duplicate key '" + key + "'");
    kv[key] = value;
    cur.key_lines[key] = lineno;
  }
  close();
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog '" + path + "'");
  return parse_catalog(in, path);
}

std::string emit_catalog(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  for (const CatalogEntry& e : entries) {
    const int n = e.dim, h = e.dim == 7 ? 6 : e.dim;
    os << "name: " << e.name << "\n";
    os << "salamon: " << print_salamon(parse_salamon(e.salamon, n)) << "\n";
    if (e.family) os << "salamon_lambda: " << print_salamon(parse_salamon(e.family->lambda_part, n)) << "\n";
    os << "dim: " << e.dim << "\n";
    if (!e.group.empty()) os << "group: " << e.group << "\n";
    os << "decomposable: " << (e.decomposable ? "true" : "false") << "\n";
    os << "expected: " << to_string(e.expected) << "\n";
    if (e.xi) os << "xi: " << *e.xi << "\n";
    if (!e.quotient.empty()) os << "quotient: " << e.quotient << "\n";
    if (e.family) {
      std::vector<std::string> cs, ss;
      for (const auto& c : e.family->constraints) cs.push_back(c.to_string());
      for (const auto& q : e.family->samples) ss.push_back(to_string(q));
      if (!cs.empty()) os << "lambda_constraint: " << join(cs, ", ") << "\n";
      if (!ss.empty()) os << "lambda_samples: " << join(ss, ", ") << "\n";
      if (e.family->witness) os << "lambda_witness: " << to_string(*e.family->witness) << "\n";
    }
    if (!e.coframe.empty()) {
      std::vector<std::string> parts;
      for (const RadicalForm& f : parse_coframe(e.coframe, 7)) parts.push_back(print_form(f));
      os << "coframe: " << join(parts, "; ") << "\n";
    }
    if (!e.omega.empty()) os << "omega: " << print_form(parse_form(e.omega, h, 2)) << "\n";
    if (!e.psi.empty()) os << "psi: " << print_form(parse_form(e.psi, h, 3)) << "\n";
    if (!e.psi_corrected.empty()) os << "psi_corrected: " << print_form(parse_form(e.psi_corrected, h, 3)) << "\n";
    if (!e.gamma.empty()) os << "gamma: " << print_form(parse_form(e.gamma, h, 2)) << "\n";
    if (!e.reps.empty()) {
      std::vector<std::string> parts;
      for (const std::string& r : e.reps) parts.push_back(print_form(parse_form(r, n, 2)));
      os << "reps: " << join(parts, "; ") << "\n";
    }
    if (!e.z3.empty()) {
      std::vector<std::string> parts;
      for (const std::string& z : e.z3) parts.push_back(print_form(parse_form(z, n, 3)));
      os << "z3: " << join(parts, ", ") << "\n";
    }
    os << "\n";
  }
  return os.str();
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("CALG2_CATALOG")) return env;
  return CALG2_DEFAULT_CATALOG;
}

}  // namespace calg2

#pragma once

#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "calg2/lie.hpp"
#include "calg2/rational.hpp"

namespace calg2 {

enum class Verdict { Calibrated, Obstr2, PropEpi, B3, NonSymplectic6, TwoLefschetz6, Counterexample6, Unresolved };
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& text);

class CatalogError : public std::runtime_error {
 public:
  CatalogError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LambdaConstraint {
  enum class Op { NotEqual, Greater, GreaterEqual, Less, LessEqual };
  Op op;
  Rational value;
  bool admits(const Rational& q) const;
  std::string to_string() const;
};

struct FamilySpec {
  std::string lambda_part;  // structure constants multiplied by lambda
  std::vector<LambdaConstraint> constraints;
  std::vector<Rational> samples;
  std::optional<Rational> witness;
  bool admits(const Rational& q) const;
  // Witness first, then the listed samples inside the admissible range.
  std::vector<Rational> sample_set() const;
};

struct CatalogEntry {
  std::string name;
  std::string salamon;
  std::string group;
  int dim = 7;
  bool decomposable = false;
  Verdict expected = Verdict::Unresolved;
  std::optional<int> xi;
  std::string quotient;  // informational label
  std::string coframe;   // seven 1-forms separated by ';'
  std::string omega, psi, psi_corrected, gamma;
  std::vector<std::string> reps;
  std::vector<std::string> z3;
  std::optional<FamilySpec> family;  // set on family records, cleared on instances
  std::string family_name;           // set on instances
  std::optional<Rational> lambda;    // set on instances
  std::size_t line = 0;
  std::map<std::string, std::size_t> key_lines;

  bool is_family() const { return family.has_value(); }
  // Structure constants; family records need an explicit lambda.
  LieAlgebra algebra() const;
};

std::vector<CatalogEntry> parse_catalog(std::istream& in, const std::string& source = "<catalog>");
std::vector<CatalogEntry> load_catalog(const std::string& path);

// Parses every field and checks Jacobi, nilpotency, centrality of xi,
// closedness of listed 3-forms and shape of witnesses.
void validate_entry(const CatalogEntry& e, const std::string& source = "<catalog>");

LieAlgebra family_instance(const CatalogEntry& family, const Rational& lambda);
LieAlgebra family_instance(const std::vector<CatalogEntry>& catalog, const std::string& name, const Rational& lambda);

CatalogEntry instantiate(const CatalogEntry& family, const Rational& lambda);
// Replaces each family record by one entry per sampled lambda.
std::vector<CatalogEntry> expand_families(const std::vector<CatalogEntry>& entries);

// Re-emits the catalog with every algebra and form in canonical notation.
std::string emit_catalog(const std::vector<CatalogEntry>& entries);

std::string default_catalog_path();

}  // namespace calg2

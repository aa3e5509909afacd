#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "calg2/catalog.hpp"

namespace calg2 {

struct EntryResult {
  std::string name;
  std::string salamon;
  std::string group;
  int dim = 7;
  bool decomposable = false;
  Verdict expected = Verdict::Unresolved;
  Verdict verdict = Verdict::Unresolved;
  bool match = false;
  std::string rule;    // e.g. "PropEpi@e7", "coframe", "omega/psi"
  std::string detail;
  std::vector<std::string> fired;  // every obstruction that fires on the designated xi
  bool sample_wise = false;        // family member checked at one lambda only
  std::optional<std::string> lambda;
  std::string error;
  double elapsed_ms = 0;
};

struct ClassificationReport {
  std::vector<EntryResult> entries;

  int count(Verdict v) const;
  std::vector<std::string> mismatches() const;
  std::vector<std::string> errors() const;
  std::map<std::string, int> group_counts() const;
  bool ok() const { return mismatches().empty() && errors().empty(); }
};

// Entries must already be expanded (no family records).
EntryResult classify_entry(const CatalogEntry& e);
ClassificationReport classify(const std::vector<CatalogEntry>& entries, unsigned jobs = 1);

// {entries: [...], summary: {...}}; forms in canonical notation.
std::string report_json(const ClassificationReport& r, bool include_timings = true);
std::string report_text(const ClassificationReport& r);

}  // namespace calg2

#include "calg2/classify.hpp"

#include <atomic>
#include <chrono>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "calg2/g2.hpp"
#include "calg2/notation.hpp"
#include "calg2/obstructions.hpp"

namespace calg2 {

namespace {

struct RuleOutcome {
  bool fires = false;
  std::string detail;
};

RuleOutcome run_rule(const LieAlgebra& g, const CatalogEntry& e, Verdict rule, int xi) {
  Vector x = basis_vector(g.dim(), xi);
  RuleOutcome out;
  if (rule == Verdict::Obstr2) {
    ObstructionVerdict v = obstr2(g, x);
    out.fires = v.kind == ObstructionKind::Obstr2;
    out.detail = v.detail;
  } else {
    ObstructionVerdict v = prop_epi_obstructs(g, x);
    out.detail = v.detail;
    if (v.kind == ObstructionKind::PropEpi) out.fires = true;
    // Exact curvature forces a product structure, impossible for an indecomposable algebra.
    if (v.kind == ObstructionKind::PropEpiDecomposableForced && !e.decomposable) {
      out.fires = true;
      out.detail += "; the algebra is indecomposable";
    }
  }
  return out;
}

std::string orientation_text(int o) { return o > 0 ? "positive definite" : "negative definite"; }

void classify_seven(const CatalogEntry& e, EntryResult& r) {
  LieAlgebra g = e.algebra();
  if (!b3_positive(g)) {
    r.verdict = Verdict::B3;
    r.rule = "B3";
    r.detail = "b3 = 0";
    return;
  }
  std::optional<std::pair<Verdict, int>> hit;
  std::string hit_detail;
  if (e.xi) {
    std::vector<Verdict> order = e.expected == Verdict::Obstr2 ? std::vector<Verdict>{Verdict::Obstr2, Verdict::PropEpi}
                                                                : std::vector<Verdict>{Verdict::PropEpi, Verdict::Obstr2};
    for (Verdict rule : order) {
      RuleOutcome o = run_rule(g, e, rule, *e.xi);
      if (!o.fires) continue;
      r.fired.push_back(to_string(rule) + "@e" + std::to_string(*e.xi));
      if (!hit) {
        hit = std::make_pair(rule, *e.xi);
        hit_detail = o.detail;
      }
    }
  }
  if (!hit) {
    for (int i = 1; i <= g.dim() && !hit; ++i) {
      if (!is_central(g, basis_vector(g.dim(), i)) || (e.xi && *e.xi == i)) continue;
      for (Verdict rule : {Verdict::PropEpi, Verdict::Obstr2}) {
        RuleOutcome o = run_rule(g, e, rule, i);
        if (o.fires) {
          hit = std::make_pair(rule, i);
          hit_detail = o.detail;
          break;
        }
      }
    }
  }
  if (hit) {
    r.verdict = hit->first;
    r.rule = to_string(hit->first) + "@e" + std::to_string(hit->second);
    r.detail = hit_detail;
    return;
  }
  std::string none_fire = "no obstruction fires on any central basis vector";

  if (!e.coframe.empty()) {
    G2Report rep = is_calibrated_g2(g, phi_from_coframe(parse_coframe(e.coframe, 7)));
    if (rep.calibrated()) {
      r.verdict = Verdict::Calibrated;
      r.rule = "coframe";
      r.detail = none_fire + "; the listed coframe gives a closed phi with " + orientation_text(rep.orientation) +
                 " gram matrix";
      return;
    }
    r.detail = none_fire + "; listed coframe fails (closed=" + std::string(rep.closed ? "yes" : "no") +
               ", G2-type=" + (rep.g2_type ? "yes" : "no") + ")";
  }
  if (!e.omega.empty() && !e.psi.empty()) {
    Form omega = parse_form(e.omega, 6, 2);
    G2Report rep = is_calibrated_g2(g, extension_phi(omega, parse_form(e.psi, 6, 3)));
    if (rep.calibrated()) {
      r.verdict = Verdict::Calibrated;
      r.rule = "omega/psi";
      r.detail = none_fire + "; omega ^ e7 + psi is closed with " + orientation_text(rep.orientation) + " gram matrix";
      return;
    }
    std::string printed = "listed (omega, psi) gives closed=" + std::string(rep.closed ? "yes" : "no") +
                          ", G2-type=" + (rep.g2_type ? "yes" : "no");
    if (!e.psi_corrected.empty()) {
      G2Report fix = is_calibrated_g2(g, extension_phi(omega, parse_form(e.psi_corrected, 6, 3)));
      if (fix.calibrated()) {
        r.verdict = Verdict::Calibrated;
        r.rule = "omega/psi_corrected";
        r.detail = none_fire + "; " + printed + "; with psi = " + print_form(parse_form(e.psi_corrected, 6, 3)) +
                   " phi is closed with " + orientation_text(fix.orientation) + " gram matrix";
        return;
      }
    }
    r.detail = none_fire + "; " + printed;
  }
  r.verdict = Verdict::Unresolved;
  if (r.detail.empty()) r.detail = none_fire + " and no positive witness is listed";
}

void classify_six(const CatalogEntry& e, EntryResult& r) {
  LieAlgebra h = e.algebra();
  auto omega = symplectic_exists(h);
  if (!omega) {
    r.verdict = Verdict::NonSymplectic6;
    r.rule = "symplectic_exists";
    r.detail = "no closed 2-form has nonzero cube";
    return;
  }
  if (!e.omega.empty() && !e.gamma.empty()) {
    Form w = parse_form(e.omega, 6, 2), gamma = parse_form(e.gamma, 6, 2);
    if (two_lefschetz_witness(h, w, gamma)) {
      auto prim = is_exact(h, wedge(gamma, w));
      r.verdict = Verdict::Counterexample6;
      r.rule = "two_lefschetz_witness";
      r.detail = "omega = " + print_form(w) + " is symplectic, [" + print_form(gamma) +
                 "] != 0 and gamma ^ omega = d(" + print_form(*prim) + ")";
      return;
    }
    r.detail = "listed (omega, gamma) is not a 2-Lefschetz failure witness";
  }
  if (h.is_abelian() || !e.reps.empty()) {
    std::vector<Form> reps;
    for (const std::string& s : e.reps) reps.push_back(parse_form(s, 6, 2));
    LefschetzAnalysis a = h.is_abelian() ? two_lefschetz_abelian(h) : two_lefschetz_parametric(h, reps);
    r.rule = "two_lefschetz_parametric:" + a.rule;
    r.detail = a.detail;
    if (a.verdict == LefschetzVerdict::Holds) {
      r.verdict = Verdict::TwoLefschetz6;
    } else if (a.verdict == LefschetzVerdict::FailsWithWitness) {
      r.verdict = Verdict::Counterexample6;
    } else {
      r.verdict = Verdict::Unresolved;
    }
    return;
  }
  r.verdict = Verdict::Unresolved;
  if (r.detail.empty()) r.detail = "symplectic, but neither a witness nor representatives are listed";
}

}  // namespace

EntryResult classify_entry(const CatalogEntry& e) {
  auto start = std::chrono::steady_clock::now();
  EntryResult r;
  r.name = e.name;
  r.group = e.group;
  r.dim = e.dim;
  r.decomposable = e.decomposable;
  r.expected = e.expected;
  if (e.lambda) r.lambda = to_string(*e.lambda);
  try {
    if (e.family) throw std::invalid_argument("family records must be expanded before classification");
    r.salamon = e.algebra().salamon();
    if (e.dim == 7)
      classify_seven(e, r);
    else
      classify_six(e, r);
  } catch (const std::exception& ex) {
    r.verdict = Verdict::Unresolved;
    r.error = ex.what();
  }
  if (e.lambda && r.verdict != Verdict::Calibrated) {
    r.sample_wise = true;
    r.detail += "; nonexistence verified at this lambda sample only";
  }
  r.match = r.error.empty() && r.verdict == r.expected;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ClassificationReport classify(const std::vector<CatalogEntry>& entries, unsigned jobs) {
  ClassificationReport report;
  report.entries.resize(entries.size());
  if (jobs <= 1 || entries.size() <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) report.entries[i] = classify_entry(entries[i]);
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(entries.size()));
  for (unsigned t = 0; t < n; ++t)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < entries.size(); i = next++) report.entries[i] = classify_entry(entries[i]);
    });
  for (auto& w : workers) w.join();
  return report;
}

int ClassificationReport::count(Verdict v) const {
  int c = 0;
  for (const EntryResult& e : entries)
    if (e.verdict == v) ++c;
  return c;
}

std::vector<std::string> ClassificationReport::mismatches() const {
  std::vector<std::string> out;
  for (const EntryResult& e : entries)
    if (e.error.empty() && !e.match) out.push_back(e.name);
  return out;
}

std::vector<std::string> ClassificationReport::errors() const {
  std::vector<std::string> out;
  for (const EntryResult& e : entries)
    if (!e.error.empty()) out.push_back(e.name + ": " + e.error);
  return out;
}

std::map<std::string, int> ClassificationReport::group_counts() const {
  std::map<std::string, int> out;
  for (const EntryResult& e : entries) ++out[e.group];
  return out;
}

std::string report_json(const ClassificationReport& r, bool include_timings) {
  using nlohmann::ordered_json;
  ordered_json entries = ordered_json::array();
  for (const EntryResult& e : r.entries) {
    ordered_json j;
    j["name"] = e.name;
    j["salamon"] = e.salamon;
    j["group"] = e.group;
    j["dim"] = e.dim;
    j["decomposable"] = e.decomposable;
    if (e.lambda) j["lambda"] = *e.lambda;
    j["expected"] = to_string(e.expected);
    j["verdict"] = to_string(e.verdict);
    j["match"] = e.match;
    j["rule"] = e.rule;
    j["fired"] = e.fired;
    j["detail"] = e.detail;
    j["sample_wise"] = e.sample_wise;
    if (!e.error.empty()) j["error"] = e.error;
    if (include_timings) j["timings"] = {{"elapsed_ms", e.elapsed_ms}};
    entries.push_back(std::move(j));
  }
  ordered_json verdicts = ordered_json::object();
  for (Verdict v : {Verdict::Calibrated, Verdict::Obstr2, Verdict::PropEpi, Verdict::B3, Verdict::NonSymplectic6,
                    Verdict::TwoLefschetz6, Verdict::Counterexample6, Verdict::Unresolved})
    verdicts[to_string(v)] = r.count(v);
  ordered_json summary;
  summary["entries"] = r.entries.size();
  summary["calibrated"] = r.count(Verdict::Calibrated);
  summary["verdicts"] = verdicts;
  int sample_wise = 0;
  for (const EntryResult& e : r.entries) sample_wise += e.sample_wise;
  summary["sample_wise"] = sample_wise;
  summary["groups"] = r.group_counts();
  summary["mismatches"] = r.mismatches();
  summary["errors"] = r.errors();
  ordered_json root;
  root["entries"] = std::move(entries);
  root["summary"] = std::move(summary);
  return root.dump(2) + "\n";
}

std::string report_text(const ClassificationReport& r) {
  std::ostringstream os;
  for (const EntryResult& e : r.entries) {
    os << (e.match ? "ok   " : "FAIL ") << e.name << "  [" << e.group << "]  " << to_string(e.verdict);
    if (!e.match) os << " (expected " << to_string(e.expected) << ")";
    if (!e.rule.empty()) os << "  via " << e.rule;
    if (e.sample_wise) os << "  (sample-wise)";
    os << "\n";
    if (!e.error.empty())
      os << "       error: " << e.error << "\n";
    else if (!e.match || e.verdict == Verdict::Calibrated)
      os << "       " << e.detail << "\n";
  }
  os << "\nentries: " << r.entries.size() << "\n";
  os << "groups:";
  for (const auto& [g, c] : r.group_counts()) os << " " << g << "=" << c;
  os << "\nverdicts:";
  for (Verdict v : {Verdict::Calibrated, Verdict::Obstr2, Verdict::PropEpi, Verdict::B3, Verdict::NonSymplectic6,
                    Verdict::TwoLefschetz6, Verdict::Counterexample6, Verdict::Unresolved})
    if (int c = r.count(v)) os << " " << to_string(v) << "=" << c;
  os << "\ncalibrated: " << r.count(Verdict::Calibrated) << "\n";
  int sample_wise = 0;
  for (const EntryResult& e : r.entries) sample_wise += e.sample_wise;
  if (sample_wise) os << "sample-wise: " << sample_wise << " family members obstructed at their lambda sample only\n";
  os << "mismatches: " << r.mismatches().size() << "\n";
  for (const std::string& m : r.mismatches()) os << "  " << m << "\n";
  os << "errors: " << r.errors().size() << "\n";
  for (const std::string& m : r.errors()) os << "  " << m << "\n";
  return os.str();
}

}  // namespace calg2

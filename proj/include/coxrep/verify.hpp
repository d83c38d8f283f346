#pragma once

// Confronts the predictor with computed character tables and Weyl-group
// counts, one case (p, k, r, mode, flavor) at a time.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coxrep/cache.hpp"
#include "coxrep/chartab.hpp"
#include "coxrep/matgroup.hpp"

namespace coxrep {

enum class Verdict { Pass, Fail, Inapplicable };
std::string to_string(Verdict v);

struct CheckResult {
  std::string check_id;
  std::string clause;     // prediction clause(s) or property under test
  std::string computed;
  std::string predicted;
  Verdict verdict = Verdict::Inapplicable;
  std::string note;
  double runtime_s = 0;
};

struct CaseReport {
  GroupSpec spec;
  std::string key;
  bool inapplicable = false;
  std::string reason;
  std::vector<CheckResult> checks;
  /// Sorted digests of every prediction for cross-mode comparison: the full
  /// record (clause, dimension, constituents) and the signed dimension alone.
  std::vector<std::string> prediction_digest;
  std::vector<std::int64_t> dimension_digest;

  std::size_t count(Verdict v) const;
  bool ok() const { return count(Verdict::Fail) == 0; }
};

struct SuiteReport {
  std::vector<CaseReport> cases;
  std::vector<CheckResult> suite_checks;

  std::size_t count(Verdict v) const;
  bool ok() const { return count(Verdict::Fail) == 0; }
};

struct VerifyOptions {
  std::uint64_t table_bound = kDefaultTableBound;
  Cache cache;
  bool adjunction = true;
  bool classical_sweep = true;  // suite level
};

CaseReport run_case(const GroupSpec& spec, const VerifyOptions& options = {});
SuiteReport run_suite(const std::vector<GroupSpec>& cases, const VerifyOptions& options = {});

/// Key = value manifest with [case] blocks; values may be comma lists, which
/// expand to every combination.  A [defaults] block sets values for later cases.
std::vector<GroupSpec> parse_manifest(std::istream& is);
std::vector<GroupSpec> load_manifest(const std::string& path);

/// JSON report; `timing` adds runtime fields (everything else is deterministic).
std::string report_json(const SuiteReport& report, bool timing = true);
/// One line per check: verdict, case, check id, computed vs predicted.
std::string report_text(const SuiteReport& report);

}  // namespace coxrep

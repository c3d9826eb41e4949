// Registry of executable invariant checks, grouped into named suites.
//
// Each check is a pure function of a VerifyConfig; the CLI runs whole suites
// and renders SuiteReports, the acceptance binary reuses individual checks by
// id.  Check ids are stable and descriptive; every library invariant that the
// suites are contractually required to cover appears in
// required_invariant_tags(), and a meta-test asserts the registry covers all
// of them.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "overgroup/markedspace.hpp"

namespace ogt {

struct VerifyConfig {
  std::size_t len_cap = 8;  // exhaustive word length for the equivalence sweeps
  unsigned seed = 12345;    // RNG seed for the sampled checks
  int rmax = 5;             // growth table radius
  ovg::EnumerationCaps caps;
};

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;  // counts, witnesses, or the reason for failure
};

struct CheckDef {
  std::string id;
  std::string suite;
  std::vector<std::string> invariants;  // covered invariant tags
  std::function<CheckResult(const VerifyConfig&)> run;
};

// All registered checks, grouped by suite in a fixed registration order (the
// report order).
const std::vector<CheckDef>& check_registry();

// Sorted unique suite names (without "all").
std::vector<std::string> suite_names();

// Runs one suite, or every suite for "all"; throws std::invalid_argument for
// an unknown name.  Exceptions inside a check are caught and reported as a
// failed CheckResult, except resource-cap overruns, which propagate.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config);

// Runs the single check with this id; throws std::invalid_argument if absent.
CheckResult run_check(const std::string& id, const VerifyConfig& config);

// Invariant tags the registry must cover (one per documented library
// invariant of the words/sections/wordproblem/markedspace/constructions
// modules).
std::vector<std::string> required_invariant_tags();

nlohmann::json report_json(const std::string& suite, const std::vector<CheckResult>& results);
std::string report_table(const std::string& suite, const std::vector<CheckResult>& results);

}  // namespace ogt

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "actkit/corpus.hpp"

namespace actkit {

// One property verdict inside a suite.  checks counts the instances
// examined; witness carries the first counterexample found (or an
// informational payload for report-only properties).
struct PropertyResult {
  std::string name;
  bool pass = true;
  long long checks = 0;
  std::string detail;
  nlohmann::json witness;
};

struct SuiteReport {
  std::string id;
  std::string corpus;
  bool pass = true;
  double elapsed_ms = 0.0;
  std::vector<PropertyResult> properties;
};

// Runnable suite ids, in the order the acceptance gate runs them.
std::vector<std::string> suite_ids();

SuiteReport run_suite(const std::string& id, const CorpusSpec& spec = {});

// Timing is omitted unless requested so that serialized reports are
// byte-identical across runs for fixed inputs.
nlohmann::json report_to_json(const SuiteReport& r,
                              bool include_timing = false);

}  // namespace actkit

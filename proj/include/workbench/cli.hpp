#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "workbench/covariants.hpp"
#include "workbench/pertinency.hpp"

namespace wb {

using Json = nlohmann::ordered_json;

// A single analysis request: one algebra, one group grading, a truncation
// degree, and a task list. Parsed from JSON; parse_config validates shape and
// cross-references and throws ConfigError with a dotted location path.
struct AnalysisConfig {
  std::string name;  // optional label, copied into the report
  Json algebra;      // {"family": "downup"|"downup_xy"|"five_rule"|
                     //  "hyperbolic"|"skew"|"custom", params per family}
  Json group;        // {"kind": "cyclic"|"dihedral"|"quaternion"|
                     //  "product"|"table", params per kind}
  Json grading;      // generator name -> group element name
  std::size_t maxdeg = 16;
  std::vector<std::string> tasks;  // canonical execution order
  std::vector<std::pair<std::string, std::string>> identities;
  std::vector<std::string> memberships;
  std::optional<RationalSeries> series;  // reference for the hilbert task
  Json expected;  // regression block; empty object when absent
};

AnalysisConfig parse_config(const Json& j);
// Parses the JSON text first; malformed JSON becomes ConfigError("<json>").
AnalysisConfig parse_config_text(const std::string& text);

// data is byte-identical across runs for a fixed config; human carries the
// same findings plus timings and is for terminals only.
struct Report {
  Json data;
  std::string human;
};

// Executes the config's tasks in the canonical order
//   validate, hdet, hilbert, covariants, pertinency, verify-identities,
//   memberships
// on a presentation completed through max(maxdeg, identity degrees).
Report run(const AnalysisConfig& config);

struct CatalogEntry {
  std::string name;
  std::string summary;
};

// Built-in example configs, reproducible with `workbench run <name>`.
const std::vector<CatalogEntry>& list_examples();
bool has_example(const std::string& name);
const Json& example_config(const std::string& name);  // ConfigError if unknown

struct RegressionResult {
  bool pass = false;
  std::vector<std::string> diffs;  // one line per mismatch; empty iff pass
};

// Runs the config and structurally compares the report against the expected
// block: generator lists as sets, dimension sequences elementwise over the
// expected prefix, certificates by kind. An empty block passes vacuously.
RegressionResult regression(const AnalysisConfig& config);

// WORKBENCH_THREADS clamped to >= 1; 1 when unset or unparseable. The
// library runs sequentially, so any cap is honored; the value is echoed in
// human output only.
int thread_cap();

}  // namespace wb

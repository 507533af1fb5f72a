#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfpartial/report.hpp"

namespace hp {

// Single-entry corruption target:op:index applied while a scenario is built.
// ops: negate, scale (by 2), zero, unit (column becomes 1_A, entry becomes 1).
struct Mutation {
  std::string target;
  std::string op;
  int index = 0;

  // Throws Config on malformed text.
  static Mutation parse(const std::string& text);
  std::string to_string() const;
};

struct ScenarioConfig {
  std::string name;
  std::string group;
  int m = 2;
  int n = 0;
  std::vector<std::string> subset;
  std::string cocycle;  // "klein_four", "trivial" or "explicit"
  Json cocycle_table;   // [[g, s, scalar], ...] when cocycle is "explicit"
  std::vector<int> character;  // λ(g) = ζ_m^character[g] for the gauge stage
  std::string associativity = "sampled";  // "sampled" or "exhaustive"
  int sample_count = 10000;
  std::uint64_t seed = 0;
  int field_order = 2;
  std::optional<Mutation> mutation;

  // Throws Config for an unknown scenario name.
  static ScenarioConfig defaults(const std::string& name);
  // Fields present in j override the defaults of j["name"] (or of name_hint).
  static ScenarioConfig from_json(const Json& j, const std::string& name_hint = {});
  Json to_json() const;
  // Throws Config.
  void validate() const;
};

const std::vector<std::string>& scenario_names();
// Mutation targets accepted by a scenario.
const std::vector<std::string>& mutation_targets(const std::string& scenario);

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

struct ScenarioResult {
  ScenarioConfig config;
  Report report;
  std::vector<std::string> stages;
  std::vector<StageTiming> timings;  // kept out of the report
};

struct RunOptions {
  // Skip the remaining stages once a stage has a failing check.
  bool fail_fast = false;
};

// Runs the staged pipeline. A stage that throws records "<stage>.build" as a
// failure; later stages that depend on it are reported as "<stage>.stage" skips.
ScenarioResult run_scenario(const ScenarioConfig& cfg, const RunOptions& opt = {});

struct CatalogueEntry {
  std::string scenario;
  std::string mutation;
  std::string expected;  // id of the first failing check
};
const std::vector<CatalogueEntry>& mutation_catalogue();

// Structure-constant tables: "crossed-product", "hopf", "action", "omega".
// Throws Config for an unknown object.
Json scenario_table(const ScenarioConfig& cfg, const std::string& object);

}  // namespace hp

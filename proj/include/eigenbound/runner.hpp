#pragma once

#include <iosfwd>
#include <optional>

#include "eigenbound/bounds.hpp"
#include "eigenbound/scenario.hpp"

namespace eigenbound {

struct RunOptions {
  int jobs = 1;  // scenario-level parallelism
  // Test hook: "<scenario_id>:<check>" forces that row VIOLATED so the
  // exit-code path can be exercised end to end.
  std::optional<std::string> negate_margin;
};

struct CheckRow {
  std::string scenario_id;
  std::string ambient;
  std::optional<std::uint64_t> seed;
  int mesh_level = 0;  // 0 when no FEM was involved
  int grid_size = 0;
  BoundReport report;
  double wall_ms = 0.0;
};

struct ScenarioOutcome {
  std::string id;
  std::vector<CheckRow> rows;
  bool failed = false;
  std::string error;
  std::vector<std::string> warnings;
  double wall_ms = 0.0;
};

struct RunReport {
  std::vector<ScenarioOutcome> scenarios;
  bool pass = false;
  std::string version;
  std::string config_hash;
};

RunReport run(const std::vector<ScenarioConfig>& configs,
              const RunOptions& opts = {});

// Expands one generator scenario over an inclusive seed interval.
std::vector<ScenarioConfig> expand_sweep(const ScenarioConfig& base,
                                         std::uint64_t seed_lo,
                                         std::uint64_t seed_hi);

// CSV schema (fixed column order):
// scenario_id,check,ambient,seed,mesh_level,grid_size,lhs,rhs,margin,
// error_budget,equality_gap,verdict,lambda1,lambda1_sphere_R,R,vol_M,
// vol_S_R,correction,wall_ms
void emit_csv(const RunReport& report, std::ostream& os);
void emit_jsonl(const RunReport& report, std::ostream& os);
std::string jsonl_to_csv(const std::string& jsonl_text);

// 0 = pass, 2 = at least one VIOLATED, 3 = execution failure.
int exit_code(const RunReport& report);

std::string hash_hex(const std::string& text);  // FNV-1a 64

}  // namespace eigenbound

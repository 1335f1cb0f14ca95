#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "mwvc/central.hpp"
#include "mwvc/generate.hpp"
#include "mwvc/graph_io.hpp"
#include "mwvc/mpc.hpp"
#include "mwvc/oracle.hpp"

namespace mwvc::cli {

using json = nlohmann::json;

inline constexpr const char* kReportSchema = "mwvc-report/1";

/// Everything needed to assemble a report for one solver run.
struct RunRecord {
  json input;   // {"path": ...} or {"gen": {...}}
  json config;  // echo of the effective solver configuration
  std::string algorithm;  // central | mpc | exact
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  bool emit_matching = false;
  double wall_time_s = 0.0;

  const LoadedGraph* graph = nullptr;
  const CentralResult* central = nullptr;
  const MpcResult* mpc = nullptr;
  const ExactResult* exact_run = nullptr;  // --algo exact
  const ExactResult* oracle = nullptr;     // --oracle
};

/// Builds the report, including the "checks" block and "repro_hash".
json build_report(const RunRecord& record);

/// True iff every non-null entry of report["checks"] is true.
bool all_checks_passed(const json& report);

/// FNV-1a 64 over the canonical dump, excluding wall time and the hash
/// itself; 16 lowercase hex digits.
std::string repro_hash(const json& report);

json phase_record_json(const PhaseRecord& record);

}  // namespace mwvc::cli

#include "report.hpp"

#include <cstdio>

namespace mwvc::cli {
namespace {

json nullable(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json edge_list(const LoadedGraph& lg, std::span<const double> x) {
  json out = json::array();
  const auto edges = lg.graph.edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    out.push_back({lg.original_ids[edges[e].u], lg.original_ids[edges[e].v], x[e]});
  }
  return out;
}

}  // namespace

json phase_record_json(const PhaseRecord& r) {
  return {
      {"phase", r.phase},
      {"d", r.d},
      {"machines", r.machines},
      {"iterations", r.iterations},
      {"high_count", r.high_count},
      {"inactive_count", r.inactive_count},
      {"per_machine_edges", r.per_machine_edges},
      {"per_machine_words", r.per_machine_words},
      {"locally_frozen", r.locally_frozen},
      {"saturated_frozen", r.saturated_frozen},
      {"nonfrozen_edges_after", r.nonfrozen_edges_after},
      {"sparsification_bound", r.sparsification_bound},
      {"checks",
       {{"out_degree", r.out_degree_ok},
        {"edge_count", r.edges_ok},
        {"memory", r.memory_ok}}},
  };
}

json build_report(const RunRecord& rec) {
  const LoadedGraph& lg = *rec.graph;
  const WeightedGraph& g = lg.graph;
  json report;
  report["schema"] = kReportSchema;
  report["input"] = rec.input;
  report["config"] = rec.config;
  report["algorithm"] = rec.algorithm;
  report["epsilon"] = rec.epsilon;
  report["seed"] = rec.seed;
  report["n"] = g.num_vertices();
  report["m"] = g.num_edges();
  report["wall_time_s"] = rec.wall_time_s;

  std::span<const VertexId> cover;
  std::span<const double> x;
  std::optional<double> matching;
  double cover_weight = 0.0;
  if (rec.central) {
    cover = rec.central->cover;
    x = rec.central->x;
    matching = rec.central->matching_value;
    cover_weight = rec.central->cover_weight;
  } else if (rec.mpc) {
    cover = rec.mpc->cover;
    x = rec.mpc->x;
    matching = rec.mpc->matching_value;
    cover_weight = rec.mpc->cover_weight;
  } else if (rec.exact_run) {
    cover = rec.exact_run->opt_cover;
    cover_weight = rec.exact_run->opt_weight;
  }

  json cover_ids = json::array();
  for (VertexId v : cover) cover_ids.push_back(lg.original_ids[v]);
  report["cover"] = std::move(cover_ids);
  report["cover_size"] = cover.size();
  report["cover_weight"] = cover_weight;
  report["matching_value"] = nullable(matching);

  std::optional<double> opt;
  if (rec.exact_run) opt = rec.exact_run->opt_weight;
  if (rec.oracle) opt = rec.oracle->opt_weight;
  report["opt_weight"] = nullable(opt);
  report["oracle_nodes"] =
      rec.oracle ? json(rec.oracle->nodes_explored)
                 : (rec.exact_run ? json(rec.exact_run->nodes_explored) : json(nullptr));

  json checks;
  const auto cover_check = validate_cover(g, cover);
  checks["valid_cover"] = cover_check.valid;
  if (cover_check.witness) {
    report["uncovered_witness"] = {lg.original_ids[cover_check.witness->u],
                                   lg.original_ids[cover_check.witness->v]};
  }

  json ratios = {{"vs_matching", nullptr}, {"vs_opt", nullptr}, {"bound", nullptr}};
  if (matching) {
    const Algorithm algo = rec.mpc ? Algorithm::mpc : Algorithm::central;
    const auto rr = ratio_report(algo, cover_weight, *matching, opt, rec.epsilon);
    ratios = {{"vs_matching", nullable(rr.ratio_vs_matching)},
              {"vs_opt", nullable(rr.ratio_vs_opt)},
              {"bound", rr.bound},
              {"anomaly", rr.anomaly}};
    checks["ratio_certificate"] = rr.certificate_ok;
    checks["opt_bound"] = opt ? json(rr.bound_ok) : json(nullptr);
    const double slack = rec.mpc ? 1.0 + 6.0 * rec.epsilon : 1.0;
    const auto feas = validate_fractional_matching(g, g.weights(), x, slack);
    checks["feasible"] = feas.feasible;
    report["feasibility"] = {
        {"slack_factor", slack},
        {"worst_vertex", feas.worst_vertex ? json(lg.original_ids[*feas.worst_vertex])
                                           : json(nullptr)},
        {"worst_slack", feas.worst_slack},
        {"tolerance", feas.slack_tolerance_used}};
  } else {
    checks["ratio_certificate"] = nullptr;
    checks["opt_bound"] = nullptr;
    checks["feasible"] = nullptr;
    report["feasibility"] = nullptr;
  }
  report["ratios"] = std::move(ratios);

  if (rec.mpc) {
    const auto& r = *rec.mpc;
    checks["sparsification"] = r.sparsification_ok();
    report["phases"] = r.phases;
    report["rounds"] = r.mpc_rounds;
    report["iterations"] = r.final_central_iterations;
    report["stop_threshold"] = r.stop_threshold;
    report["max_machine_edges"] = r.max_machine_edges;
    report["max_machine_words"] = r.max_machine_words;
    report["max_words_per_n"] =
        g.num_vertices() ? static_cast<double>(r.max_machine_words) /
                               static_cast<double>(g.num_vertices())
                         : 0.0;
    json phases = json::array();
    for (const auto& pr : r.phase_records) phases.push_back(phase_record_json(pr));
    report["phase_records"] = std::move(phases);
    const auto& c = r.certificate;
    report["certificate"] = {{"min_saturation", c.min_saturation},
                             {"max_load", c.max_load},
                             {"saturation_violations", c.saturation_violations},
                             {"feasibility_violations", c.feasibility_violations},
                             {"ratio_ok", c.ratio_ok}};
  } else {
    checks["sparsification"] = nullptr;
    report["phases"] = nullptr;
    report["rounds"] = nullptr;
    report["iterations"] = rec.central ? json(rec.central->iterations) : json(nullptr);
    report["stop_threshold"] = nullptr;
    report["max_machine_edges"] = nullptr;
    report["max_machine_words"] = nullptr;
    report["max_words_per_n"] = nullptr;
    report["phase_records"] = nullptr;
    report["certificate"] = nullptr;
  }
  report["checks"] = std::move(checks);
  report["edge_weights"] =
      rec.emit_matching && matching ? edge_list(lg, x) : json(nullptr);
  report["repro_hash"] = repro_hash(report);
  return report;
}

bool all_checks_passed(const json& report) {
  const auto& checks = report.at("checks");
  for (const auto& [name, value] : checks.items()) {
    if (!value.is_null() && !value.get<bool>()) return false;
  }
  return true;
}

std::string repro_hash(const json& report) {
  json copy = report;
  copy.erase("wall_time_s");
  copy.erase("repro_hash");
  const std::string text = copy.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace mwvc::cli

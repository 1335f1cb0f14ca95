#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <CLI11.hpp>

#include "mwvc/central.hpp"
#include "mwvc/generate.hpp"
#include "mwvc/graph_io.hpp"
#include "mwvc/mpc.hpp"
#include "mwvc/oracle.hpp"
#include "report.hpp"

namespace mwvc::cli {
namespace {

/// Error carrying the process exit code.
struct ExitError {
  int code;
  std::string message;
};

struct GenOptions {
  std::string model = "gnp";
  std::size_t n = 0;
  double avg_deg = 0.0;
  std::string weights = "uniform:1:1";
  std::uint64_t seed = 0;

  void add_to(CLI::App& cmd, bool with_seed) {
    cmd.add_option("--model", model, "gnp|star|path|triangle|power-law")
        ->capture_default_str();
    cmd.add_option("--n", n, "number of vertices");
    cmd.add_option("--avg-deg", avg_deg, "target average degree (gnp, power-law)");
    cmd.add_option("--weights", weights,
                   "uniform:LO:HI | exponential:MEAN | degree")
        ->capture_default_str();
    if (with_seed) cmd.add_option("--seed", seed, "generator seed");
  }

  GenSpec spec() const {
    GenSpec s;
    s.model = parse_model(model);
    s.num_vertices = n;
    s.target_avg_degree = avg_deg;
    s.weights = parse_weight_dist(weights);
    s.seed = seed;
    return s;
  }

  json describe() const {
    return {{"model", model}, {"n", n}, {"avg_deg", avg_deg},
            {"weights", weights}, {"seed", seed}};
  }
};

struct SolverOptions {
  std::string algo = "mpc";
  double epsilon = 0.1;
  std::string preset = "practical";
  std::uint64_t seed = 0;
  std::string oracle = "off";
  std::string policy = "midpoint";
  bool emit_matching = false;
  std::size_t node_cap = kDefaultNodeCap;

  double alpha = 0.0;
  double iter_coeff = 0.0;
  double bias_base = 0.0;
  double bias_growth = 0.0;
  double bias_exponent = 0.0;
  double stop_degree = 0.0;
  std::size_t mem_cap = 0;
  bool enforce_mem = false;
  unsigned workers = 1;
  std::size_t phase_cap = 200;

  CLI::Option* alpha_opt = nullptr;
  CLI::Option* iter_opt = nullptr;
  CLI::Option* bias_base_opt = nullptr;
  CLI::Option* bias_growth_opt = nullptr;
  CLI::Option* bias_exp_opt = nullptr;
  CLI::Option* stop_opt = nullptr;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--algo", algo, "central|mpc|exact")
        ->check(CLI::IsMember({"central", "mpc", "exact"}))
        ->capture_default_str();
    cmd.add_option("--epsilon", epsilon, "epsilon in (0, 0.5)")
        ->capture_default_str();
    cmd.add_option("--preset", preset, "paper|practical")
        ->check(CLI::IsMember({"paper", "practical"}))
        ->capture_default_str();
    cmd.add_option("--seed", seed, "seed for generation and solver randomness");
    cmd.add_option("--oracle", oracle, "off|try|require: attach exact OPT")
        ->check(CLI::IsMember({"off", "try", "require"}))
        ->capture_default_str();
    cmd.add_option("--policy", policy, "central thresholds: midpoint|uniform")
        ->check(CLI::IsMember({"midpoint", "uniform"}))
        ->capture_default_str();
    cmd.add_flag("--emit-matching", emit_matching, "store x_e per edge in the report");
    cmd.add_option("--node-cap", node_cap, "oracle node cap")->capture_default_str();
    alpha_opt = cmd.add_option("--alpha", alpha, "high-degree exponent");
    iter_opt = cmd.add_option("--iter-coeff", iter_coeff, "iterations I = coeff * ln m");
    bias_base_opt = cmd.add_option("--bias-base", bias_base, "bias base");
    bias_growth_opt = cmd.add_option("--bias-growth", bias_growth, "bias growth per iteration");
    bias_exp_opt = cmd.add_option("--bias-exponent", bias_exponent, "bias exponent of m");
    stop_opt = cmd.add_option("--stop-degree", stop_degree, "phase loop stop threshold");
    cmd.add_option("--mem-cap", mem_cap, "machine memory cap in words (0: 16 n)");
    cmd.add_flag("--enforce-mem", enforce_mem, "fail when a machine exceeds the cap");
    cmd.add_option("--workers", workers, "threads for local simulation")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--phase-cap", phase_cap, "maximum number of phases")
        ->capture_default_str();
  }

  MpcConfig mpc_config() const {
    MpcConfig c = preset == "paper" ? MpcConfig::paper(epsilon, seed)
                                    : MpcConfig::practical(epsilon, seed);
    if (alpha_opt && alpha_opt->count()) c.high_exponent = alpha;
    if (iter_opt && iter_opt->count()) c.iter_coeff = iter_coeff;
    if (bias_base_opt && bias_base_opt->count()) c.bias_base = bias_base;
    if (bias_growth_opt && bias_growth_opt->count()) c.bias_growth = bias_growth;
    if (bias_exp_opt && bias_exp_opt->count()) c.bias_exponent = bias_exponent;
    if (stop_opt && stop_opt->count()) {
      c.stop_degree = stop_degree;
      c.stop_log_power = 0.0;
    }
    c.mem_cap_words = mem_cap;
    c.enforce_mem = enforce_mem;
    c.workers = workers;
    c.phase_cap = phase_cap;
    return c;
  }
};

json config_json(const SolverOptions& o, const MpcConfig& c, std::size_t n) {
  json j = {{"algo", o.algo}, {"epsilon", o.epsilon}, {"seed", o.seed},
            {"oracle", o.oracle}};
  if (o.algo == "central") {
    j["policy"] = o.policy;
  } else if (o.algo == "mpc") {
    j["preset"] = o.preset;
    j["high_exponent"] = c.high_exponent;
    j["iter_coeff"] = c.effective_iter_coeff();
    j["bias_base"] = c.bias_base;
    j["bias_growth"] = c.bias_growth;
    j["bias_exponent"] = c.bias_exponent;
    j["stop_threshold"] = c.stop_threshold(n);
    j["mem_cap_words"] = c.memory_cap(n);
    j["enforce_mem"] = c.enforce_mem;
    j["phase_cap"] = c.phase_cap;
  }
  return j;
}

/// Runs one solve and builds its report. Throws ExitError for usage,
/// oracle-cap and algorithm failures.
json solve(const LoadedGraph& lg, const SolverOptions& o, json input) {
  const WeightedGraph& g = lg.graph;
  MpcConfig cfg;
  try {
    cfg = o.mpc_config();
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ExitError{exit_code::kUsage, e.what()};
  }

  std::optional<ExactResult> oracle;
  if (o.oracle != "off" && o.algo != "exact") {
    try {
      oracle = exact_mwvc(g, o.node_cap);
    } catch (const OracleCapExceeded& e) {
      if (o.oracle == "require") throw ExitError{exit_code::kOracleCap, e.what()};
    }
  }

  RunRecord rec;
  rec.input = std::move(input);
  rec.config = config_json(o, cfg, g.num_vertices());
  rec.algorithm = o.algo;
  rec.epsilon = o.epsilon;
  rec.seed = o.seed;
  rec.emit_matching = o.emit_matching;
  rec.graph = &lg;
  rec.oracle = oracle ? &*oracle : nullptr;

  std::optional<CentralResult> central;
  std::optional<MpcResult> mpc;
  std::optional<ExactResult> exact;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (o.algo == "central") {
      const auto policy = o.policy == "uniform"
                              ? ThresholdPolicy::uniform(o.epsilon, o.seed)
                              : ThresholdPolicy::midpoint(o.epsilon);
      central = run_centralized(g, g.weights(), o.epsilon, policy);
      rec.central = &*central;
    } else if (o.algo == "mpc") {
      mpc = run_mpc(g, cfg);
      rec.mpc = &*mpc;
    } else {
      exact = exact_mwvc(g, o.node_cap);
      rec.exact_run = &*exact;
    }
  } catch (const OracleCapExceeded& e) {
    throw ExitError{exit_code::kOracleCap, e.what()};
  } catch (const std::invalid_argument& e) {
    throw ExitError{exit_code::kUsage, e.what()};
  } catch (const AlgorithmError& e) {
    throw ExitError{exit_code::kInvariant, e.what()};
  } catch (const MemoryCapExceeded& e) {
    throw ExitError{exit_code::kInvariant, e.what()};
  }
  rec.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return build_report(rec);
}

LoadedGraph resolve_graph(const std::string& input, const GenOptions& gen,
                          json& descriptor) {
  if (!input.empty()) {
    descriptor = {{"path", input}};
    try {
      return load_graph_file(input);
    } catch (const GraphError& e) {
      throw ExitError{exit_code::kIo, e.what()};
    }
  }
  descriptor = {{"gen", gen.describe()}};
  try {
    LoadedGraph lg;
    lg.graph = generate(gen.spec());
    lg.original_ids.resize(lg.graph.num_vertices());
    for (std::size_t i = 0; i < lg.original_ids.size(); ++i) lg.original_ids[i] = i;
    return lg;
  } catch (const SpecError& e) {
    throw ExitError{exit_code::kUsage, e.what()};
  }
}

std::string fmt(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string fmt(const json& j) {
  if (j.is_null()) return "";
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_number_unsigned()) return std::to_string(j.get<std::uint64_t>());
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  if (j.is_number()) return fmt(j.get<double>());
  return j.dump();
}

void write_text(const std::string& path, const std::string& text,
                std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ExitError{exit_code::kIo, "cannot write " + path};
  f << text;
  if (!f) throw ExitError{exit_code::kIo, "write failed for " + path};
}

std::string summary_line(const json& r) {
  std::ostringstream s;
  s << "algo=" << r["algorithm"].get<std::string>() << " n=" << r["n"]
    << " m=" << r["m"] << " cover_size=" << r["cover_size"]
    << " cover_weight=" << fmt(r["cover_weight"])
    << " matching=" << fmt(r["matching_value"])
    << " opt=" << fmt(r["opt_weight"]) << " phases=" << fmt(r["phases"])
    << " rounds=" << fmt(r["rounds"])
    << " checks=" << (all_checks_passed(r) ? "pass" : "FAIL")
    << " hash=" << r["repro_hash"].get<std::string>();
  return s.str();
}

// ------------------------------------------------------------------ gen

int cmd_gen(const GenOptions& gen, const std::string& output, std::ostream& out,
            std::ostream& err) {
  WeightedGraph g;
  try {
    g = generate(gen.spec());
  } catch (const SpecError& e) {
    throw ExitError{exit_code::kUsage, e.what()};
  }
  std::ostringstream text;
  save_graph(g, text);
  write_text(output, text.str(), out);
  auto& info = (output.empty() || output == "-") ? err : out;
  info << "n=" << g.num_vertices() << " m=" << g.num_edges()
       << " avg_deg=" << fmt(g.average_degree()) << '\n';
  return exit_code::kOk;
}

// ------------------------------------------------------------------ run

int cmd_run(const std::string& input, const GenOptions& gen_in,
            const SolverOptions& opts, const std::string& output,
            std::ostream& out, std::ostream& err) {
  GenOptions gen = gen_in;
  gen.seed = opts.seed;
  if (input.empty() && gen.n == 0) {
    throw ExitError{exit_code::kUsage, "run: need --input or generator flags (--n)"};
  }
  json descriptor;
  const LoadedGraph lg = resolve_graph(input, gen, descriptor);
  const json report = solve(lg, opts, descriptor);
  write_text(output, report.dump(2) + "\n", out);
  auto& info = (output.empty() || output == "-") ? err : out;
  info << summary_line(report) << '\n';
  return all_checks_passed(report) ? exit_code::kOk : exit_code::kInvariant;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& graph_path, const std::string& report_path,
               std::optional<double> slack_override, std::ostream& out) {
  json report;
  {
    std::ifstream f(report_path);
    if (!f) throw ExitError{exit_code::kIo, "cannot open " + report_path};
    try {
      report = json::parse(f);
    } catch (const json::exception& e) {
      throw ExitError{exit_code::kUsage, std::string("report is not JSON: ") + e.what()};
    }
  }
  if (!report.is_object() || report.value("schema", "") != kReportSchema) {
    throw ExitError{exit_code::kUsage, "schema mismatch: expected " +
                                           std::string(kReportSchema)};
  }
  LoadedGraph lg;
  try {
    lg = load_graph_file(graph_path);
  } catch (const GraphError& e) {
    throw ExitError{exit_code::kIo, e.what()};
  }
  const WeightedGraph& g = lg.graph;

  std::vector<VertexId> cover;
  std::string algorithm;
  double epsilon = 0.0;
  double stored_weight = 0.0;
  try {
    std::unordered_map<std::uint64_t, VertexId> dense;
    for (VertexId i = 0; i < lg.original_ids.size(); ++i) dense[lg.original_ids[i]] = i;
    for (const auto& id : report.at("cover")) {
      auto it = dense.find(id.get<std::uint64_t>());
      if (it == dense.end()) {
        throw ExitError{exit_code::kUsage, "cover vertex " + id.dump() + " not in graph"};
      }
      cover.push_back(it->second);
    }
    algorithm = report.at("algorithm").get<std::string>();
    epsilon = report.at("epsilon").get<double>();
    stored_weight = report.at("cover_weight").get<double>();
    if (report.at("n").get<std::size_t>() != g.num_vertices() ||
        report.at("m").get<std::size_t>() != g.num_edges()) {
      throw ExitError{exit_code::kUsage, "report does not describe this graph"};
    }
  } catch (const json::exception& e) {
    throw ExitError{exit_code::kUsage, std::string("schema mismatch: ") + e.what()};
  }

  bool ok = true;
  const auto cc = validate_cover(g, cover);
  if (!cc.valid) {
    out << "valid_cover=false witness=(" << lg.original_ids[cc.witness->u] << ","
        << lg.original_ids[cc.witness->v] << ")\n";
    ok = false;
  } else {
    out << "valid_cover=true\n";
  }
  double weight = 0.0;
  for (VertexId v : cover) weight += g.weight(v);
  const bool weight_ok =
      std::abs(weight - stored_weight) <= 1e-9 * std::max(1.0, std::abs(weight));
  out << "cover_weight=" << fmt(weight) << (weight_ok ? "" : " (stored value differs)")
      << '\n';
  ok = ok && weight_ok;

  std::optional<double> matching;
  if (report.contains("matching_value") && !report["matching_value"].is_null()) {
    matching = report["matching_value"].get<double>();
  }
  const auto& ew = report.contains("edge_weights") ? report["edge_weights"] : json();
  if (!ew.is_null()) {
    std::vector<double> x(g.num_edges(), 0.0);
    std::vector<std::uint8_t> seen(g.num_edges(), 0);
    std::unordered_map<std::uint64_t, VertexId> dense;
    for (VertexId i = 0; i < lg.original_ids.size(); ++i) dense[lg.original_ids[i]] = i;
    try {
      for (const auto& row : ew) {
        auto u = dense.at(row.at(0).get<std::uint64_t>());
        auto v = dense.at(row.at(1).get<std::uint64_t>());
        if (u > v) std::swap(u, v);
        const auto edges = g.edges();
        auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
        if (it == edges.end() || !(*it == Edge{u, v})) {
          throw ExitError{exit_code::kUsage, "edge_weights lists a non-edge"};
        }
        const auto id = static_cast<std::size_t>(it - edges.begin());
        x[id] = row.at(2).get<double>();
        seen[id] = 1;
      }
    } catch (const std::out_of_range&) {
      throw ExitError{exit_code::kUsage, "edge_weights references unknown vertex"};
    } catch (const json::exception& e) {
      throw ExitError{exit_code::kUsage, std::string("schema mismatch: ") + e.what()};
    }
    if (std::count(seen.begin(), seen.end(), 0) != 0) {
      throw ExitError{exit_code::kUsage, "edge_weights does not cover every edge"};
    }
    const double slack =
        slack_override.value_or(algorithm == "mpc" ? 1.0 + 6.0 * epsilon : 1.0);
    FeasibilityReport feas;
    try {
      feas = validate_fractional_matching(g, g.weights(), x, slack);
    } catch (const std::invalid_argument& e) {
      throw ExitError{exit_code::kUsage, e.what()};
    }
    out << "feasible=" << (feas.feasible ? "true" : "false") << " slack_factor="
        << fmt(slack) << " worst_slack=" << fmt(feas.worst_slack) << '\n';
    ok = ok && feas.feasible;
    double total = 0.0;
    for (double xe : x) total += xe;
    matching = total;
  }
  if (matching && algorithm != "exact") {
    std::optional<double> opt;
    if (!report["opt_weight"].is_null()) opt = report["opt_weight"].get<double>();
    const auto rr = ratio_report(algorithm == "mpc" ? Algorithm::mpc : Algorithm::central,
                                 weight, *matching, opt, epsilon);
    out << "ratio_certificate=" << (rr.certificate_ok ? "true" : "false") << '\n';
    if (opt) out << "opt_bound=" << (rr.bound_ok ? "true" : "false") << '\n';
    ok = ok && rr.certificate_ok && rr.bound_ok;
  }
  if (algorithm == "exact" && !report["opt_weight"].is_null()) {
    const bool match = std::abs(report["opt_weight"].get<double>() - weight) <=
                       1e-9 * std::max(1.0, weight);
    ok = ok && match;
  }
  out << (ok ? "verify: PASS" : "verify: FAIL") << '\n';
  return ok ? exit_code::kOk : exit_code::kInvariant;
}

// ------------------------------------------------------------------ sweep

int cmd_sweep(const GenOptions& gen_base, const std::vector<double>& degrees,
              std::size_t seeds, std::uint64_t seed_base, SolverOptions opts,
              unsigned jobs, const std::string& output, std::ostream& out,
              std::ostream& err) {
  struct Row {
    double avg_deg;
    std::uint64_t seed;
  };
  std::vector<Row> grid;
  for (double d : degrees)
    for (std::size_t s = 0; s < seeds; ++s) grid.push_back({d, seed_base + s});

  std::vector<std::string> lines(grid.size());
  std::vector<int> failed(grid.size(), 0);
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::optional<ExitError> fatal;

  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      GenOptions gen = gen_base;
      gen.avg_deg = grid[i].avg_deg;
      gen.seed = grid[i].seed;
      SolverOptions o = opts;
      o.seed = grid[i].seed;
      std::ostringstream line;
      line << gen.n << ',' << fmt(gen.avg_deg) << ',' << gen.seed << ',' << o.algo
           << ',' << fmt(o.epsilon) << ',' << o.preset << ',';
      try {
        json descriptor;
        const LoadedGraph lg = resolve_graph("", gen, descriptor);
        const json r = solve(lg, o, descriptor);
        const bool pass = all_checks_passed(r);
        failed[i] = !pass;
        line << fmt(r["phases"]) << ',' << fmt(r["rounds"]) << ','
             << fmt(r["max_words_per_n"]) << ',' << fmt(r["cover_weight"]) << ','
             << fmt(r["matching_value"]) << ',' << fmt(r["ratios"]["vs_matching"])
             << ',' << fmt(r["ratios"]["vs_opt"]) << ',' << (pass ? "true" : "false");
      } catch (const ExitError& e) {
        if (e.code == exit_code::kUsage || e.code == exit_code::kIo) {
          std::lock_guard lock(err_mutex);
          if (!fatal) fatal = e;
          return;
        }
        failed[i] = 1;
        line << ",,,,,,,false";
        std::lock_guard lock(err_mutex);
        err << "row avg_deg=" << fmt(gen.avg_deg) << " seed=" << gen.seed << ": "
            << e.message << '\n';
      }
      lines[i] = line.str();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
    worker();
  }
  if (fatal) throw *fatal;

  std::ostringstream csv;
  csv << kSweepHeader << '\n';
  for (const auto& l : lines) csv << l << '\n';
  write_text(output, csv.str(), out);
  const auto n_failed = std::count(failed.begin(), failed.end(), 1);
  auto& info = (output.empty() || output == "-") ? err : out;
  info << "rows=" << grid.size() << " failed=" << n_failed << '\n';
  return n_failed == 0 ? exit_code::kOk : exit_code::kInvariant;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Weighted vertex cover: MPC simulator, centralized solver, exact oracle"};
  app.require_subcommand(1);

  auto* gen_cmd = app.add_subcommand("gen", "generate a graph file");
  GenOptions gen_opts;
  std::string gen_out;
  gen_opts.add_to(*gen_cmd, true);
  gen_cmd->add_option("-o,--output", gen_out, "output path (default stdout)");

  auto* run_cmd = app.add_subcommand("run", "solve a graph and write a report");
  GenOptions run_gen;
  SolverOptions run_opts;
  std::string run_input, run_out;
  run_cmd->add_option("--input,-i", run_input, "graph file");
  run_gen.add_to(*run_cmd, false);
  run_opts.add_to(*run_cmd);
  run_cmd->add_option("-o,--output,--report", run_out, "report path (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "re-check a stored report");
  std::string verify_graph, verify_report;
  double verify_slack = 1.0;
  verify_cmd->add_option("--graph,-g", verify_graph, "graph file")->required();
  verify_cmd->add_option("--report,-r", verify_report, "report file")->required();
  auto* slack_opt =
      verify_cmd->add_option("--slack-factor", verify_slack, "override feasibility slack");

  auto* sweep_cmd = app.add_subcommand("sweep", "grid of runs to CSV");
  GenOptions sweep_gen;
  sweep_gen.n = 10000;
  sweep_gen.weights = "uniform:1:2";
  SolverOptions sweep_opts;
  std::vector<double> sweep_degrees{16, 64, 256, 1024};
  std::size_t sweep_seeds = 10;
  std::uint64_t sweep_seed_base = 1;
  unsigned sweep_jobs = 1;
  std::string sweep_out;
  sweep_gen.add_to(*sweep_cmd, false);
  sweep_cmd->remove_option(sweep_cmd->get_option("--avg-deg"));
  sweep_cmd->add_option("--avg-deg", sweep_degrees, "average degrees")->delimiter(',');
  sweep_opts.add_to(*sweep_cmd);
  sweep_cmd->remove_option(sweep_cmd->get_option("--seed"));
  sweep_cmd->add_option("--seeds", sweep_seeds, "seeds per degree")->capture_default_str();
  sweep_cmd->add_option("--seed-base", sweep_seed_base, "first seed")->capture_default_str();
  sweep_cmd->add_option("--jobs", sweep_jobs, "concurrent rows")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("-o,--output", sweep_out, "CSV path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    for (auto* sub : app.get_subcommands()) out << sub->help();
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return exit_code::kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen_opts, gen_out, out, err);
    if (*run_cmd) return cmd_run(run_input, run_gen, run_opts, run_out, out, err);
    if (*verify_cmd) {
      std::optional<double> slack;
      if (slack_opt->count()) slack = verify_slack;
      return cmd_verify(verify_graph, verify_report, slack, out);
    }
    if (*sweep_cmd) {
      return cmd_sweep(sweep_gen, sweep_degrees, sweep_seeds, sweep_seed_base,
                       sweep_opts, sweep_jobs, sweep_out, out, err);
    }
  } catch (const ExitError& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}

}  // namespace mwvc::cli

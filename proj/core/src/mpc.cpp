#include "mwvc/mpc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "mwvc/random.hpp"

namespace mwvc {
namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw std::invalid_argument(std::string(field) + ": " + what);
}

// x0 divided t times by (1-eps), the same operation order as the local loop.
double grown(double x0, std::size_t t, double epsilon) {
  const double shrink = 1.0 - epsilon;
  for (std::size_t i = 0; i < t; ++i) x0 /= shrink;
  return x0;
}

}  // namespace

// ---------------------------------------------------------------- config

MpcConfig MpcConfig::practical(double epsilon, std::uint64_t seed) {
  MpcConfig c;
  c.epsilon = epsilon;
  c.preset = Preset::practical;
  c.high_exponent = 0.75;
  c.iter_coeff = 1.0 / (2.0 * std::log(1.0 / (1.0 - epsilon)));
  c.stop_degree = 32.0;
  c.seed = seed;
  return c;
}

MpcConfig MpcConfig::paper(double epsilon, std::uint64_t seed) {
  MpcConfig c;
  c.epsilon = epsilon;
  c.preset = Preset::paper;
  c.high_exponent = 0.95;
  c.iter_coeff = 1.0 / (10.0 * std::log(15.0));
  c.stop_degree = 1.0;
  c.stop_log_power = 30.0;
  c.seed = seed;
  return c;
}

void MpcConfig::validate() const {
  require(epsilon > 0.0 && epsilon < 0.5, "epsilon", "must lie in (0, 1/2)");
  require(high_exponent > 0.0 && high_exponent <= 1.0, "high_exponent",
          "must lie in (0, 1]");
  require(iter_coeff >= 0.0 && std::isfinite(iter_coeff), "iter_coeff",
          "must be positive (0 selects the default)");
  require(bias_base >= 0.0, "bias_base", "must be nonnegative");
  require(bias_growth >= 1.0, "bias_growth", "must be at least 1");
  require(bias_exponent >= 0.0, "bias_exponent", "must be nonnegative");
  require(stop_log_power >= 0.0, "stop_log_power", "must be nonnegative");
  require(stop_log_power > 0.0 || stop_degree >= 1.0, "stop_degree",
          "must be at least 1");
  require(phase_cap >= 1, "phase_cap", "must be at least 1");
  require(workers >= 1, "workers", "must be at least 1");
}

double MpcConfig::effective_iter_coeff() const {
  if (iter_coeff > 0.0) return iter_coeff;
  return 1.0 / (2.0 * std::log(1.0 / (1.0 - epsilon)));
}

double MpcConfig::stop_threshold(std::size_t n) const {
  if (stop_log_power > 0.0) {
    return std::pow(std::log(static_cast<double>(std::max<std::size_t>(n, 2))),
                    stop_log_power);
  }
  return stop_degree;
}

std::size_t MpcConfig::machines(double d) const {
  if (!(d >= 1.0)) return 1;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(d)));
}

std::size_t MpcConfig::iterations(std::size_t m) const {
  const double raw =
      effective_iter_coeff() * std::log(static_cast<double>(std::max<std::size_t>(m, 1)));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(raw)));
}

double MpcConfig::bias(std::size_t m, std::size_t t) const {
  return bias_base * std::pow(static_cast<double>(m), -bias_exponent) *
         std::pow(bias_growth, static_cast<double>(t));
}

std::size_t MpcConfig::memory_cap(std::size_t n) const {
  return mem_cap_words != 0 ? mem_cap_words : 16 * n;
}

// ---------------------------------------------------------------- state

MpcState MpcState::initial(const WeightedGraph& graph) {
  MpcState s;
  const std::size_t n = graph.num_vertices();
  s.vertex_frozen.assign(n, 0);
  s.residual_weight.assign(graph.weights().begin(), graph.weights().end());
  s.residual_degree = graph.degrees();
  s.vertex_class.assign(n, VertexClass::inactive);
  s.edge_frozen.assign(graph.num_edges(), 0);
  s.edge_weight.assign(graph.num_edges(), 0.0);
  return s;
}

double MpcState::residual_average_degree() const {
  const std::size_t n = vertex_frozen.size();
  if (n == 0) return 0.0;
  std::size_t total = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!vertex_frozen[v]) total += residual_degree[v];
  return static_cast<double>(total) / static_cast<double>(n);
}

std::size_t MpcState::nonfrozen_edges() const {
  return static_cast<std::size_t>(
      std::count(edge_frozen.begin(), edge_frozen.end(), std::uint8_t{0}));
}

// ---------------------------------------------------------------- phase steps

HighSplit select_high(MpcState& state, double d, double alpha) {
  HighSplit split;
  const double cut = std::pow(d, alpha);
  for (VertexId v = 0; v < state.vertex_frozen.size(); ++v) {
    if (state.vertex_frozen[v]) {
      state.vertex_class[v] = VertexClass::frozen;
    } else if (static_cast<double>(state.residual_degree[v]) >= cut) {
      state.vertex_class[v] = VertexClass::high;
      split.high.push_back(v);
    } else {
      state.vertex_class[v] = VertexClass::inactive;
      split.inactive.push_back(v);
    }
  }
  return split;
}

std::vector<double> compute_residual_weights(const MpcState& state,
                                             const WeightedGraph& graph,
                                             std::span<const VertexId> high) {
  std::vector<double> residual(graph.weights().begin(), graph.weights().end());
  const auto edges = graph.edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    if (state.edge_frozen[e]) {
      residual[edges[e].u] -= state.edge_weight[e];
      residual[edges[e].v] -= state.edge_weight[e];
    }
  }
  for (VertexId v : high) {
    if (!(residual[v] > 0.0)) {
      throw AlgorithmError("nonpositive residual weight at active vertex " +
                           std::to_string(v));
    }
  }
  return residual;
}

std::vector<std::uint32_t> partition_vertices(std::span<const VertexId> high,
                                              std::size_t m,
                                              std::uint64_t seed,
                                              std::size_t phase) {
  std::vector<std::uint32_t> machine(high.size(), 0);
  if (m <= 1) return machine;
  for (std::size_t i = 0; i < high.size(); ++i) {
    const auto bits = rng::keyed(seed, {rng::kPartitionStream, phase, high[i]});
    machine[i] = static_cast<std::uint32_t>(rng::to_range(bits, m));
  }
  return machine;
}

double LocalParams::bias(std::size_t t) const {
  return bias_base * std::pow(static_cast<double>(machines), -bias_exponent) *
         std::pow(bias_growth, static_cast<double>(t));
}

double phase_threshold(std::uint64_t seed, std::size_t phase, VertexId vertex,
                       std::size_t t, double epsilon) {
  const double u =
      rng::to_unit(rng::keyed(seed, {rng::kThresholdStream, phase, vertex, t}));
  return 1.0 - 4.0 * epsilon + 2.0 * epsilon * u;
}

std::vector<std::optional<std::uint32_t>> local_simulate(
    const WeightedGraph& high_graph, const MachineView& machine,
    std::span<const double> initial_x, std::span<const VertexId> global_ids,
    const LocalParams& params) {
  const std::size_t k = machine.vertices.size();
  const std::size_t le = machine.edges.size();
  std::vector<std::optional<std::uint32_t>> freeze(k);
  if (k == 0) return freeze;

  auto local_of = [&](VertexId hv) {
    auto it = std::lower_bound(machine.vertices.begin(), machine.vertices.end(), hv);
    return static_cast<std::uint32_t>(it - machine.vertices.begin());
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ends(le);
  std::vector<double> x(le);
  for (std::size_t i = 0; i < le; ++i) {
    const auto& e = high_graph.edge(machine.edges[i]);
    ends[i] = {local_of(e.u), local_of(e.v)};
    x[i] = initial_x[machine.edges[i]];
  }
  std::vector<std::uint8_t> vertex_frozen(k, 0);
  std::vector<std::uint8_t> edge_frozen(le, 0);
  std::vector<double> local_sum(k);
  std::vector<std::uint32_t> frozen_now;
  const double scale = static_cast<double>(params.machines);
  const double shrink = 1.0 - params.epsilon;

  for (std::size_t t = 0; t < params.iterations; ++t) {
    std::fill(local_sum.begin(), local_sum.end(), 0.0);
    for (std::size_t i = 0; i < le; ++i) {
      local_sum[ends[i].first] += x[i];
      local_sum[ends[i].second] += x[i];
    }
    const double bias = params.bias(t);
    frozen_now.clear();
    for (std::uint32_t i = 0; i < k; ++i) {
      if (vertex_frozen[i]) continue;
      const double w = high_graph.weight(machine.vertices[i]);
      const double estimate = bias * w + scale * local_sum[i];
      const double threshold =
          phase_threshold(params.seed, params.phase,
                          global_ids[machine.vertices[i]], t, params.epsilon);
      if (estimate >= threshold * w) frozen_now.push_back(i);
    }
    for (auto i : frozen_now) {
      vertex_frozen[i] = 1;
      freeze[i] = static_cast<std::uint32_t>(t);
    }
    for (std::size_t i = 0; i < le; ++i) {
      if (!edge_frozen[i] &&
          (vertex_frozen[ends[i].first] || vertex_frozen[ends[i].second])) {
        edge_frozen[i] = 1;
      }
      if (!edge_frozen[i]) x[i] /= shrink;
    }
  }
  return freeze;
}

std::vector<double> finalize_edge_weights(
    const WeightedGraph& high_graph,
    std::span<const std::optional<std::uint32_t>> freeze_iter,
    std::span<const double> initial_x, std::size_t iterations, double epsilon) {
  std::vector<double> x(high_graph.num_edges());
  const auto edges = high_graph.edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    const auto tu = freeze_iter[edges[e].u].value_or(iterations);
    const auto tv = freeze_iter[edges[e].v].value_or(iterations);
    x[e] = grown(initial_x[e], std::min<std::size_t>(tu, tv), epsilon);
  }
  return x;
}

PostPhaseSummary post_phase_freeze(
    MpcState& state, const WeightedGraph& graph, const InducedSubgraph& high,
    std::span<const std::optional<std::uint32_t>> freeze_iter,
    std::span<const double> final_x) {
  const WeightedGraph& hg = high.graph;
  const std::size_t hn = hg.num_vertices();
  PostPhaseSummary summary;
  std::vector<std::uint8_t> frozen(hn, 0);
  for (std::size_t i = 0; i < hn; ++i) {
    if (freeze_iter[i].has_value()) {
      frozen[i] = 1;
      ++summary.locally_frozen;
    }
  }
  const auto y = incident_sums(hg, final_x);
  for (VertexId i = 0; i < hn; ++i) {
    if (!frozen[i] && y[i] >= hg.weight(i)) {
      frozen[i] = 1;
      ++summary.saturated_frozen;
    }
  }
  summary.active_after.resize(hn);
  for (std::size_t i = 0; i < hn; ++i) summary.active_after[i] = !frozen[i];

  const auto hedges = hg.edges();
  for (EdgeId e = 0; e < hedges.size(); ++e) {
    if (frozen[hedges[e].u] || frozen[hedges[e].v]) {
      const EdgeId ge = high.to_parent_edge[e];
      state.edge_frozen[ge] = 1;
      state.edge_weight[ge] = final_x[e];
    }
  }
  for (VertexId i = 0; i < hn; ++i) {
    if (!frozen[i]) continue;
    const VertexId v = high.to_parent_vertex[i];
    state.vertex_frozen[v] = 1;
    state.vertex_class[v] = VertexClass::frozen;
    for (const auto& inc : graph.neighbors(v)) {
      if (state.edge_frozen[inc.edge]) continue;
      if (state.vertex_class[inc.neighbor] != VertexClass::inactive) {
        throw AlgorithmError("unfinalized edge between frozen vertex " +
                             std::to_string(v) + " and non-inactive vertex " +
                             std::to_string(inc.neighbor));
      }
      state.edge_frozen[inc.edge] = 1;
      state.edge_weight[inc.edge] = 0.0;
      ++summary.zeroed_edges;
    }
  }

  const std::size_t n = graph.num_vertices();
  std::vector<double> residual(graph.weights().begin(), graph.weights().end());
  const auto edges = graph.edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    if (state.edge_frozen[e]) {
      residual[edges[e].u] -= state.edge_weight[e];
      residual[edges[e].v] -= state.edge_weight[e];
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (state.vertex_frozen[v]) {
      state.residual_degree[v] = 0;
      continue;
    }
    if (!(residual[v] > 0.0)) {
      throw AlgorithmError("nonfrozen vertex " + std::to_string(v) +
                           " has exhausted its weight");
    }
    std::size_t deg = 0;
    for (const auto& inc : graph.neighbors(v))
      if (!state.vertex_frozen[inc.neighbor]) ++deg;
    state.residual_degree[v] = deg;
  }
  state.residual_weight = std::move(residual);
  return summary;
}

SparsificationCheck check_sparsification(
    const MpcState& state, const WeightedGraph& graph,
    const InducedSubgraph& high, std::span<const double> start_ratio,
    std::span<const std::size_t> start_degree,
    std::span<const std::uint8_t> active_after, double d, double epsilon,
    std::size_t iterations, double alpha) {
  SparsificationCheck check;
  const WeightedGraph& hg = high.graph;
  const double decay = std::pow(1.0 - epsilon, static_cast<double>(iterations));
  std::vector<std::size_t> out(hg.num_vertices(), 0);
  for (const auto& e : hg.edges()) {
    if (!active_after[e.u] || !active_after[e.v]) continue;
    // e.u < e.v, so a tie points at e.v.
    if (start_ratio[e.u] <= start_ratio[e.v]) {
      ++out[e.u];
    } else {
      ++out[e.v];
    }
  }
  check.worst_out_degree_margin = -std::numeric_limits<double>::infinity();
  for (VertexId i = 0; i < hg.num_vertices(); ++i) {
    if (!active_after[i]) continue;
    const double rhs = static_cast<double>(start_degree[i]) * decay;
    const double margin = static_cast<double>(out[i]) - rhs;
    check.worst_out_degree_margin = std::max(check.worst_out_degree_margin, margin);
    if (static_cast<double>(out[i]) > rhs * (1.0 + kFeasibilityTolerance)) {
      ++check.out_degree_violations;
    }
  }
  if (check.worst_out_degree_margin == -std::numeric_limits<double>::infinity()) {
    check.worst_out_degree_margin = 0.0;
  }
  check.out_degree_ok = check.out_degree_violations == 0;

  const double n = static_cast<double>(graph.num_vertices());
  check.nonfrozen_edges = state.nonfrozen_edges();
  check.edge_bound = n * d * decay + n * std::pow(d, alpha);
  check.edges_ok = static_cast<double>(check.nonfrozen_edges) <=
                   check.edge_bound * (1.0 + kFeasibilityTolerance);
  return check;
}

// ---------------------------------------------------------------- driver

bool MpcResult::sparsification_ok() const {
  return std::all_of(phase_records.begin(), phase_records.end(),
                     [](const PhaseRecord& r) {
                       return r.out_degree_ok && r.edges_ok;
                     });
}

Certificate certify(const WeightedGraph& graph, std::span<const double> x,
                    std::span<const VertexId> cover, double cover_weight,
                    double epsilon) {
  Certificate cert;
  const auto load = incident_sums(graph, x);
  const double lower = 1.0 - 16.0 * epsilon;
  const double upper = 1.0 + 6.0 * epsilon;
  cert.min_saturation = cover.empty() ? 1.0 : std::numeric_limits<double>::infinity();
  for (VertexId v : cover) {
    const double s = load[v] / graph.weight(v);
    cert.min_saturation = std::min(cert.min_saturation, s);
    if (s < lower * (1.0 - kFeasibilityTolerance) - kFeasibilityTolerance) {
      ++cert.saturation_violations;
      cert.saturation_violators.push_back(v);
    }
  }
  double total = 0.0;
  for (double xe : x) total += xe;
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    const double s = load[v] / graph.weight(v);
    cert.max_load = std::max(cert.max_load, s);
    if (s > upper * (1.0 + kFeasibilityTolerance)) {
      ++cert.feasibility_violations;
      cert.feasibility_violators.push_back(v);
    }
  }
  cert.ratio_ok = lower * cover_weight <=
                  2.0 * total * (1.0 + kFeasibilityTolerance) + kFeasibilityTolerance;
  return cert;
}

MpcResult run_mpc(const WeightedGraph& graph, const MpcConfig& config) {
  config.validate();
  const std::size_t n = graph.num_vertices();
  const double eps = config.epsilon;
  MpcState state = MpcState::initial(graph);
  MpcResult result;
  result.stop_threshold = config.stop_threshold(n);
  const std::size_t cap_words = config.memory_cap(n);

  for (double d = state.residual_average_degree(); d > result.stop_threshold;
       d = state.residual_average_degree()) {
    if (state.phase >= config.phase_cap) {
      throw AlgorithmError("phase cap of " + std::to_string(config.phase_cap) +
                           " exceeded with d = " + std::to_string(d));
    }
    PhaseRecord rec;
    rec.phase = state.phase;
    rec.d = d;

    const auto split = select_high(state, d, config.high_exponent);
    rec.high_count = split.high.size();
    rec.inactive_count = split.inactive.size();
    state.residual_weight = compute_residual_weights(state, graph, split.high);

    std::vector<std::uint8_t> keep(n, 0);
    for (VertexId v : split.high) keep[v] = 1;
    const InducedSubgraph high =
        induced_subgraph(graph, keep, state.residual_weight);
    const WeightedGraph& hg = high.graph;
    const std::size_t hn = hg.num_vertices();

    std::vector<std::size_t> start_degree(hn);
    std::vector<double> start_ratio(hn);
    for (VertexId i = 0; i < hn; ++i) {
      start_degree[i] = state.residual_degree[high.to_parent_vertex[i]];
      start_ratio[i] = hg.weight(i) / static_cast<double>(start_degree[i]);
    }
    const auto x0 = init_edge_weights(hg, hg.weights(), start_degree);

    rec.machines = config.machines(d);
    rec.iterations = config.iterations(rec.machines);
    // split.high is ascending, matching local ids of the high subgraph.
    const auto machine_of =
        partition_vertices(split.high, rec.machines, config.seed, state.phase);
    std::vector<MachineView> machines(rec.machines);
    for (VertexId i = 0; i < hn; ++i) machines[machine_of[i]].vertices.push_back(i);
    const auto hedges = hg.edges();
    for (EdgeId e = 0; e < hedges.size(); ++e) {
      if (machine_of[hedges[e].u] == machine_of[hedges[e].v]) {
        machines[machine_of[hedges[e].u]].edges.push_back(e);
      }
    }
    for (const auto& mv : machines) {
      rec.per_machine_edges.push_back(mv.edges.size());
      rec.per_machine_words.push_back(mv.words());
      result.max_machine_edges = std::max(result.max_machine_edges, mv.edges.size());
      result.max_machine_words = std::max(result.max_machine_words, mv.words());
      if (mv.words() > cap_words) rec.memory_ok = false;
    }
    if (config.enforce_mem && !rec.memory_ok) {
      throw MemoryCapExceeded("phase " + std::to_string(state.phase) +
                              ": machine load exceeds " + std::to_string(cap_words) +
                              " words");
    }

    LocalParams params;
    params.iterations = rec.iterations;
    params.epsilon = eps;
    params.machines = rec.machines;
    params.bias_base = config.bias_base;
    params.bias_growth = config.bias_growth;
    params.bias_exponent = config.bias_exponent;
    params.seed = config.seed;
    params.phase = state.phase;

    std::vector<std::vector<std::optional<std::uint32_t>>> local(rec.machines);
    auto simulate_range = [&](std::size_t first, std::size_t stride) {
      for (std::size_t i = first; i < machines.size(); i += stride) {
        local[i] = local_simulate(hg, machines[i], x0, high.to_parent_vertex, params);
      }
    };
    const std::size_t workers =
        std::min<std::size_t>(config.workers, machines.size());
    if (workers <= 1) {
      simulate_range(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(simulate_range, w, workers);
    }

    std::vector<std::optional<std::uint32_t>> freeze_iter(hn);
    for (std::size_t mi = 0; mi < machines.size(); ++mi) {
      for (std::size_t j = 0; j < machines[mi].vertices.size(); ++j) {
        freeze_iter[machines[mi].vertices[j]] = local[mi][j];
      }
    }
    const auto final_x =
        finalize_edge_weights(hg, freeze_iter, x0, rec.iterations, eps);
    const auto summary = post_phase_freeze(state, graph, high, freeze_iter, final_x);
    rec.locally_frozen = summary.locally_frozen;
    rec.saturated_frozen = summary.saturated_frozen;

    const auto check = check_sparsification(
        state, graph, high, start_ratio, start_degree, summary.active_after, d,
        eps, rec.iterations, config.high_exponent);
    rec.nonfrozen_edges_after = check.nonfrozen_edges;
    rec.sparsification_bound = check.edge_bound;
    rec.out_degree_ok = check.out_degree_ok;
    rec.edges_ok = check.edges_ok;

    result.phase_records.push_back(std::move(rec));
    ++state.phase;
  }

  // Final phase: centralized solver on the nonfrozen remainder.
  std::vector<std::uint8_t> rest(n, 0);
  for (VertexId v = 0; v < n; ++v) rest[v] = !state.vertex_frozen[v];
  const InducedSubgraph sub = induced_subgraph(graph, rest, state.residual_weight);
  const auto central = run_centralized(sub.graph, sub.graph.weights(), eps,
                                       ThresholdPolicy::midpoint(eps));
  result.final_central_iterations = central.iterations;
  for (EdgeId e = 0; e < sub.graph.num_edges(); ++e) {
    const EdgeId ge = sub.to_parent_edge[e];
    state.edge_frozen[ge] = 1;
    state.edge_weight[ge] = central.x[e];
  }
  for (VertexId v : central.cover) state.vertex_frozen[sub.to_parent_vertex[v]] = 1;

  for (VertexId v = 0; v < n; ++v) {
    if (state.vertex_frozen[v]) {
      result.cover.push_back(v);
      result.cover_weight += graph.weight(v);
    }
  }
  result.x = std::move(state.edge_weight);
  for (double xe : result.x) result.matching_value += xe;
  result.phases = state.phase;
  result.mpc_rounds = kRoundsPerPhase * result.phases + 1;
  result.certificate =
      certify(graph, result.x, result.cover, result.cover_weight, eps);
  return result;
}

}  // namespace mwvc

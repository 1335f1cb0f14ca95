#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mwvc/central.hpp"
#include "mwvc/graph.hpp"

namespace mwvc {

enum class Preset { paper, practical };

/// Knobs of the phase-based simulation. Defaults are the practical preset.
///
/// Per phase with residual average degree d:
///   machines    m = max(1, floor(sqrt(d)))
///   iterations  I = max(1, floor(iter_coeff * ln m))
///   high set    residual degree >= d^high_exponent
///   bias(t)     bias_base * m^(-bias_exponent) * bias_growth^t, in units of
///               the vertex's residual weight
/// Phases run while d > stop threshold; the stop threshold is
/// (ln n)^stop_log_power when that power is positive, else stop_degree.
struct MpcConfig {
  double epsilon = 0.1;
  Preset preset = Preset::practical;
  double high_exponent = 0.75;
  double iter_coeff = 0.0;  // 0 means 1 / (2 ln(1/(1-eps)))
  double bias_base = 2.0;
  double bias_growth = 15.0;
  double bias_exponent = 0.2;
  double stop_degree = 32.0;
  double stop_log_power = 0.0;
  std::size_t mem_cap_words = 0;  // 0 means 16 n
  bool enforce_mem = false;
  std::size_t phase_cap = 200;
  unsigned workers = 1;
  std::uint64_t seed = 0;

  static MpcConfig practical(double epsilon, std::uint64_t seed);
  static MpcConfig paper(double epsilon, std::uint64_t seed);

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  double effective_iter_coeff() const;
  double stop_threshold(std::size_t n) const;
  std::size_t machines(double d) const;
  std::size_t iterations(std::size_t machines) const;
  /// Bias per unit residual weight at local iteration t.
  double bias(std::size_t machines, std::size_t t) const;
  std::size_t memory_cap(std::size_t n) const;
};

enum class VertexClass : std::uint8_t { high, inactive, frozen };

/// Global state between phases. Edge weights are meaningful only for frozen
/// edges; they are written once, when the edge freezes.
struct MpcState {
  std::vector<std::uint8_t> vertex_frozen;
  std::vector<double> residual_weight;
  std::vector<std::size_t> residual_degree;
  std::vector<VertexClass> vertex_class;
  std::vector<std::uint8_t> edge_frozen;
  std::vector<double> edge_weight;
  std::size_t phase = 0;

  static MpcState initial(const WeightedGraph& graph);

  /// (1/n) * sum of residual degrees over nonfrozen vertices.
  double residual_average_degree() const;
  std::size_t nonfrozen_edges() const;
};

struct HighSplit {
  std::vector<VertexId> high;
  std::vector<VertexId> inactive;
};

/// Splits nonfrozen vertices by residual degree >= d^alpha. Also updates
/// state.vertex_class.
HighSplit select_high(MpcState& state, double d, double alpha);

/// w(v) minus the finalized weight of v's frozen incident edges, for every
/// vertex. Throws AlgorithmError if some vertex in `high` is not positive.
std::vector<double> compute_residual_weights(const MpcState& state,
                                             const WeightedGraph& graph,
                                             std::span<const VertexId> high);

/// Machine id in [0, m) for each entry of `high` (aligned with it), drawn
/// from the stream keyed by (seed, phase, vertex id).
std::vector<std::uint32_t> partition_vertices(std::span<const VertexId> high,
                                              std::size_t m,
                                              std::uint64_t seed,
                                              std::size_t phase);

/// Induced subgraph on one machine's vertices, expressed in the ids of the
/// phase's high subgraph.
struct MachineView {
  std::vector<VertexId> vertices;  // high-subgraph vertex ids
  std::vector<EdgeId> edges;       // high-subgraph edge ids inside the machine
  std::size_t words() const { return 2 * edges.size() + 2 * vertices.size(); }
};

/// Parameters shared by every machine in a phase.
struct LocalParams {
  std::size_t iterations = 1;
  double epsilon = 0.1;
  std::size_t machines = 1;
  double bias_base = 2.0;
  double bias_growth = 15.0;
  double bias_exponent = 0.2;
  std::uint64_t seed = 0;
  std::size_t phase = 0;

  double bias(std::size_t t) const;
};

/// Uniform threshold in [1-4eps, 1-2eps] keyed by (seed, phase, vertex, t).
double phase_threshold(std::uint64_t seed, std::size_t phase, VertexId vertex,
                       std::size_t t, double epsilon);

/// Runs I local iterations on one machine. The estimator for a vertex is
/// bias(t) * w'(v) + m * (sum of its local incident weights); vertices
/// freeze when it reaches T_{v,t} * w'(v). Returns the freeze iteration of
/// each machine vertex (aligned with machine.vertices), nullopt if never.
///
/// `high_graph` carries residual weights; `initial_x` is indexed by its
/// edges; `global_ids[i]` is the input-graph id of high vertex i (threshold
/// key).
std::vector<std::optional<std::uint32_t>> local_simulate(
    const WeightedGraph& high_graph, const MachineView& machine,
    std::span<const double> initial_x, std::span<const VertexId> global_ids,
    const LocalParams& params);

/// x_e = x_e0 / (1-eps)^t' where t' is the earliest freeze iteration of the
/// endpoints, or I if neither froze. Covers cross-machine edges too.
std::vector<double> finalize_edge_weights(
    const WeightedGraph& high_graph,
    std::span<const std::optional<std::uint32_t>> freeze_iter,
    std::span<const double> initial_x, std::size_t iterations, double epsilon);

struct PostPhaseSummary {
  std::size_t locally_frozen = 0;
  std::size_t saturated_frozen = 0;  // frozen by the y >= w' test
  std::size_t zeroed_edges = 0;      // high-inactive edges finalized at 0
  std::vector<std::uint8_t> active_after;  // per high vertex
};

/// Applies the end-of-phase freezing: local freezes, saturated vertices
/// (y >= w', ties freeze), finalization of E[V_high] edges at their computed
/// weights and of newly frozen high-inactive edges at 0, then recomputes
/// residual weights and degrees. Throws AlgorithmError if a nonfrozen vertex
/// would be left with nonpositive residual weight.
PostPhaseSummary post_phase_freeze(
    MpcState& state, const WeightedGraph& graph, const InducedSubgraph& high,
    std::span<const std::optional<std::uint32_t>> freeze_iter,
    std::span<const double> final_x);

struct SparsificationCheck {
  bool out_degree_ok = true;
  std::size_t out_degree_violations = 0;
  double worst_out_degree_margin = 0.0;  // max of lhs - rhs; <= 0 when ok
  bool edges_ok = true;
  std::size_t nonfrozen_edges = 0;  // lhs
  double edge_bound = 0.0;          // rhs: n d (1-eps)^I + n d^alpha
};

/// Orientation: u -> v iff w'(u)/d(u) < w'(v)/d(v), ties toward the larger
/// vertex id; ratios are those of the phase start. Checks that every still
/// active high vertex has at most d(v)(1-eps)^I active out-neighbors and that
/// the nonfrozen edge count obeys the phase bound. Failures are reported,
/// not thrown.
SparsificationCheck check_sparsification(
    const MpcState& state, const WeightedGraph& graph,
    const InducedSubgraph& high, std::span<const double> start_ratio,
    std::span<const std::size_t> start_degree,
    std::span<const std::uint8_t> active_after, double d, double epsilon,
    std::size_t iterations, double alpha);

struct PhaseRecord {
  std::size_t phase = 0;
  double d = 0.0;
  std::size_t machines = 0;
  std::size_t iterations = 0;
  std::size_t high_count = 0;
  std::size_t inactive_count = 0;
  std::vector<std::size_t> per_machine_edges;
  std::vector<std::size_t> per_machine_words;
  std::size_t locally_frozen = 0;
  std::size_t saturated_frozen = 0;
  std::size_t nonfrozen_edges_after = 0;
  double sparsification_bound = 0.0;
  bool out_degree_ok = true;
  bool edges_ok = true;
  bool memory_ok = true;
};

struct Certificate {
  double min_saturation = 0.0;  // min over cover of (sum x)/w
  double max_load = 0.0;        // max over vertices of (sum x)/w
  std::size_t saturation_violations = 0;  // below 1 - 16 eps
  std::size_t feasibility_violations = 0; // above 1 + 6 eps
  std::vector<VertexId> saturation_violators;
  std::vector<VertexId> feasibility_violators;
  bool ratio_ok = false;  // (1 - 16 eps) w(C) <= 2 sum x
};

struct MpcResult {
  std::vector<VertexId> cover;  // sorted
  double cover_weight = 0.0;
  double matching_value = 0.0;
  std::vector<double> x;  // finalized per-edge weights
  std::size_t phases = 0;
  std::size_t mpc_rounds = 0;
  std::size_t final_central_iterations = 0;
  std::size_t max_machine_edges = 0;
  std::size_t max_machine_words = 0;
  double stop_threshold = 0.0;
  std::vector<PhaseRecord> phase_records;
  Certificate certificate;

  bool sparsification_ok() const;
};

/// Rounds charged per phase (scatter, gather, broadcast freezes, degree
/// update); the final centralized phase adds one.
inline constexpr std::size_t kRoundsPerPhase = 4;

class MemoryCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full simulation: phases while d exceeds the stop threshold, then the
/// centralized solver on the remaining nonfrozen subgraph with residual
/// weights. Deterministic in (graph, config) regardless of config.workers.
MpcResult run_mpc(const WeightedGraph& graph, const MpcConfig& config);

/// Per-vertex saturation report for a finished run.
Certificate certify(const WeightedGraph& graph, std::span<const double> x,
                    std::span<const VertexId> cover, double cover_weight,
                    double epsilon);

}  // namespace mwvc

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mwvc/graph.hpp"

namespace mwvc {

/// Raised when an algorithm's internal contract breaks (feasibility lost,
/// iteration guard hit, residual weight exhausted). Never a user error.
class AlgorithmError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Relative tolerance for floating-point dual-feasibility assertions.
inline constexpr double kFeasibilityTolerance = 1e-9;

enum class ThresholdMode { fixed_midpoint, uniform_random };

/// Per-vertex, per-iteration freeze thresholds in [1-4eps, 1-2eps].
struct ThresholdPolicy {
  ThresholdMode mode = ThresholdMode::fixed_midpoint;
  double epsilon = 0.1;
  std::uint64_t seed = 0;

  static ThresholdPolicy midpoint(double epsilon) {
    return {ThresholdMode::fixed_midpoint, epsilon, 0};
  }
  static ThresholdPolicy uniform(double epsilon, std::uint64_t seed) {
    return {ThresholdMode::uniform_random, epsilon, seed};
  }

  double threshold(VertexId v, std::size_t t) const;
};

/// x_(u,v) = min(w(u)/d(u), w(v)/d(v)) for every edge. `degrees` may be
/// residual degrees larger than the degree in `graph`.
std::vector<double> init_edge_weights(const WeightedGraph& graph,
                                      std::span<const double> weights,
                                      std::span<const std::size_t> degrees);

/// ceil(log(max_degree) / log(1/(1-eps))) + 1, or 0 for an edgeless graph.
std::size_t central_iteration_bound(std::size_t max_degree, double epsilon);

struct CentralSnapshot {
  std::size_t t = 0;
  std::vector<double> y;           // incident sums at the start of t
  std::vector<VertexId> frozen_now;
};

struct CentralResult {
  std::vector<VertexId> cover;  // sorted
  double cover_weight = 0.0;
  double matching_value = 0.0;  // sum of x_e
  std::size_t iterations = 0;
  std::vector<double> x;               // final dual value per edge
  std::vector<std::int32_t> freeze_t;  // per vertex, -1 if never frozen
  /// max over iterations and vertices of y_v / w(v); at most 1 + tolerance.
  double max_load_ratio = 0.0;
  std::size_t feasibility_checks = 0;
  std::vector<CentralSnapshot> trace;  // filled when requested
};

struct CentralOptions {
  /// 0 selects central_iteration_bound(max degree, eps).
  std::size_t max_iters = 0;
  bool record_trace = false;
};

/// Primal-dual loop: each iteration freezes every active vertex whose
/// incident sum reaches its threshold (tests read the start-of-iteration
/// values, ties freeze), freezes the edges at those vertices, then divides
/// the remaining active edges by (1-eps). Initialization is the min-ratio
/// rule of init_edge_weights with static degrees.
///
/// Throws std::invalid_argument for eps outside (0, 1/2) or a weight vector
/// of the wrong size, and AlgorithmError if dual feasibility is violated or
/// the loop outlives max_iters.
CentralResult run_centralized(const WeightedGraph& graph,
                              std::span<const double> weights, double epsilon,
                              const ThresholdPolicy& policy,
                              const CentralOptions& options = {});

/// Convenience overload using the graph's own weights and the midpoint
/// policy.
CentralResult run_centralized(const WeightedGraph& graph, double epsilon);

}  // namespace mwvc

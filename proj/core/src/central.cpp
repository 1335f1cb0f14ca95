#include "mwvc/central.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mwvc/random.hpp"

namespace mwvc {

double ThresholdPolicy::threshold(VertexId v, std::size_t t) const {
  const double lo = 1.0 - 4.0 * epsilon;
  if (mode == ThresholdMode::fixed_midpoint) return 1.0 - 3.0 * epsilon;
  const double u =
      rng::to_unit(rng::keyed(seed, {rng::kCentralThresholdStream, v, t}));
  return lo + 2.0 * epsilon * u;
}

std::vector<double> init_edge_weights(const WeightedGraph& graph,
                                      std::span<const double> weights,
                                      std::span<const std::size_t> degrees) {
  if (weights.size() != graph.num_vertices() ||
      degrees.size() != graph.num_vertices()) {
    throw std::invalid_argument("init_edge_weights: size mismatch");
  }
  std::vector<double> x(graph.num_edges());
  const auto edges = graph.edges();
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const auto [u, v] = edges[id];
    for (VertexId end : {u, v}) {
      if (degrees[end] == 0) {
        throw std::invalid_argument("init_edge_weights: zero degree for "
                                    "non-isolated vertex " +
                                    std::to_string(end));
      }
      if (!(weights[end] > 0.0)) {
        throw std::invalid_argument("init_edge_weights: nonpositive weight "
                                    "at vertex " + std::to_string(end));
      }
    }
    x[id] = std::min(weights[u] / static_cast<double>(degrees[u]),
                     weights[v] / static_cast<double>(degrees[v]));
  }
  return x;
}

std::size_t central_iteration_bound(std::size_t max_degree, double epsilon) {
  if (max_degree == 0) return 0;
  const double iters = std::log(static_cast<double>(max_degree)) /
                       std::log(1.0 / (1.0 - epsilon));
  return static_cast<std::size_t>(std::ceil(iters)) + 1;
}

CentralResult run_centralized(const WeightedGraph& graph,
                              std::span<const double> weights, double epsilon,
                              const ThresholdPolicy& policy,
                              const CentralOptions& options) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  }
  const std::size_t n = graph.num_vertices();
  const std::size_t m = graph.num_edges();
  if (weights.size() != n) {
    throw std::invalid_argument("run_centralized: weight vector size mismatch");
  }
  const std::size_t max_iters =
      options.max_iters != 0
          ? options.max_iters
          : central_iteration_bound(graph.max_degree(), epsilon);

  const auto degrees = graph.degrees();
  std::vector<double> x = init_edge_weights(graph, weights, degrees);
  std::vector<std::uint8_t> vertex_frozen(n, 0);
  std::vector<std::uint8_t> edge_frozen(m, 0);
  std::size_t active_edges = m;
  const double shrink = 1.0 - epsilon;

  CentralResult result;
  result.freeze_t.assign(n, -1);

  auto check_feasible = [&](const std::vector<double>& y, std::size_t t) {
    ++result.feasibility_checks;
    for (VertexId v = 0; v < n; ++v) {
      const double ratio = y[v] / weights[v];
      result.max_load_ratio = std::max(result.max_load_ratio, ratio);
      if (ratio > 1.0 + kFeasibilityTolerance) {
        throw AlgorithmError("dual feasibility violated at vertex " +
                             std::to_string(v) + " in iteration " +
                             std::to_string(t));
      }
    }
  };

  std::size_t t = 0;
  std::vector<VertexId> frozen_now;
  while (active_edges > 0) {
    if (t >= max_iters) {
      throw AlgorithmError("run_centralized: exceeded " +
                           std::to_string(max_iters) + " iterations");
    }
    const auto y = incident_sums(graph, x);
    check_feasible(y, t);

    frozen_now.clear();
    for (VertexId v = 0; v < n; ++v) {
      if (!vertex_frozen[v] && y[v] >= policy.threshold(v, t) * weights[v]) {
        frozen_now.push_back(v);
      }
    }
    for (VertexId v : frozen_now) {
      vertex_frozen[v] = 1;
      result.freeze_t[v] = static_cast<std::int32_t>(t);
      for (const auto& inc : graph.neighbors(v)) {
        if (!edge_frozen[inc.edge]) {
          edge_frozen[inc.edge] = 1;
          --active_edges;
        }
      }
    }
    for (EdgeId e = 0; e < m; ++e) {
      if (!edge_frozen[e]) x[e] /= shrink;
    }
    if (options.record_trace) {
      result.trace.push_back({t, y, frozen_now});
    }
    ++t;
  }
  check_feasible(incident_sums(graph, x), t);

  result.iterations = t;
  for (VertexId v = 0; v < n; ++v) {
    if (vertex_frozen[v]) {
      result.cover.push_back(v);
      result.cover_weight += weights[v];
    }
  }
  for (double xe : x) result.matching_value += xe;
  result.x = std::move(x);
  return result;
}

CentralResult run_centralized(const WeightedGraph& graph, double epsilon) {
  return run_centralized(graph, graph.weights(), epsilon,
                         ThresholdPolicy::midpoint(epsilon));
}

}  // namespace mwvc

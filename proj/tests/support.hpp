#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "mwvc/generate.hpp"
#include "mwvc/graph.hpp"

namespace mwvc::testing {

inline WeightedGraph make_graph(std::size_t n, std::vector<Edge> edges,
                                std::vector<double> weights) {
  return WeightedGraph(n, std::move(edges), std::move(weights));
}

inline WeightedGraph make_graph(std::size_t n, std::vector<Edge> edges) {
  return WeightedGraph(n, std::move(edges), std::vector<double>(n, 1.0));
}

struct BruteForce {
  double weight = 0.0;
  std::uint64_t mask = 0;
};

// Exhaustive minimum-weight vertex cover over all 2^n subsets.
inline BruteForce brute_force_mwvc(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  BruteForce best{std::numeric_limits<double>::infinity(), 0};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (!((mask >> e.u) & 1) && !((mask >> e.v) & 1)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    double w = 0.0;
    for (std::size_t v = 0; v < n; ++v)
      if ((mask >> v) & 1) w += g.weight(static_cast<VertexId>(v));
    if (w < best.weight) best = {w, mask};
  }
  return best;
}

struct ReferenceRun {
  std::vector<bool> in_cover;
  std::vector<double> x;
  std::size_t iterations = 0;
};

// Straight transcription of the primal-dual loop with a fixed threshold,
// written edge-by-edge without the library's data structures.
inline ReferenceRun reference_primal_dual(std::size_t n, const std::vector<Edge>& edges,
                                          const std::vector<double>& w, double eps) {
  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  ReferenceRun r;
  r.in_cover.assign(n, false);
  r.x.resize(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    r.x[i] = std::min(w[e.u] / deg[e.u], w[e.v] / deg[e.v]);
  }
  const double threshold = 1.0 - 3.0 * eps;
  std::vector<bool> edge_active(edges.size(), true);
  for (;;) {
    bool any_active = false;
    for (std::size_t i = 0; i < edges.size(); ++i) any_active = any_active || edge_active[i];
    if (!any_active) break;
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      y[edges[i].u] += r.x[i];
      y[edges[i].v] += r.x[i];
    }
    std::vector<bool> freeze(n, false);
    for (std::size_t v = 0; v < n; ++v) {
      if (r.in_cover[v]) continue;
      bool has_active = false;
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (edge_active[i] && (edges[i].u == v || edges[i].v == v)) has_active = true;
      if (has_active && y[v] >= threshold * w[v]) freeze[v] = true;
    }
    for (std::size_t v = 0; v < n; ++v)
      if (freeze[v]) r.in_cover[v] = true;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (r.in_cover[edges[i].u] || r.in_cover[edges[i].v]) edge_active[i] = false;
      if (edge_active[i]) r.x[i] = r.x[i] / (1.0 - eps);
    }
    ++r.iterations;
  }
  return r;
}

// Mixed small-graph suite: models and weight distributions rotate with i.
inline GenSpec small_spec(std::size_t i, std::uint64_t seed, std::size_t max_n = 18) {
  std::mt19937_64 rng(seed * 7919 + i);
  GenSpec s;
  const GraphModel models[] = {GraphModel::gnp, GraphModel::star, GraphModel::path,
                               GraphModel::triangle};
  s.model = models[i % 4];
  const std::size_t lo = s.model == GraphModel::triangle ? 3 : 2;
  s.num_vertices = std::uniform_int_distribution<std::size_t>(lo, max_n)(rng);
  if (s.model == GraphModel::gnp) {
    const double cap = static_cast<double>(s.num_vertices - 1);
    s.target_avg_degree = std::uniform_real_distribution<double>(0.5, std::min(6.0, cap))(rng);
  }
  switch ((i / 4) % 3) {
    case 0: s.weights = WeightDist::uniform(1.0, 10.0); break;
    case 1: s.weights = WeightDist::exponential(2.0); break;
    default: s.weights = WeightDist::degree_proportional(); break;
  }
  s.seed = seed + i;
  return s;
}

}  // namespace mwvc::testing

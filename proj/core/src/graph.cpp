#include "mwvc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace mwvc {

WeightedGraph::WeightedGraph(std::size_t num_vertices, std::vector<Edge> edges,
                             std::vector<double> weights)
    : edges_(std::move(edges)), weights_(std::move(weights)) {
  if (weights_.size() != num_vertices) {
    throw GraphError("weight vector has " + std::to_string(weights_.size()) +
                     " entries, expected " + std::to_string(num_vertices));
  }
  if (num_vertices > std::numeric_limits<VertexId>::max() ||
      edges_.size() > std::numeric_limits<EdgeId>::max()) {
    throw GraphError("graph exceeds 32-bit id range");
  }
  for (std::size_t v = 0; v < num_vertices; ++v) {
    if (!(weights_[v] > 0.0) || !std::isfinite(weights_[v])) {
      throw GraphError("vertex " + std::to_string(v) +
                       " has nonpositive or non-finite weight");
    }
  }
  for (auto& e : edges_) {
    if (e.u >= num_vertices || e.v >= num_vertices) {
      throw GraphError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") references a missing vertex");
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  if (!std::is_sorted(edges_.begin(), edges_.end())) {
    std::sort(edges_.begin(), edges_.end());
  }
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," +
                     std::to_string(dup->v) + ")");
  }

  offsets_.assign(num_vertices + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < num_vertices; ++v) offsets_[v + 1] += offsets_[v];
  incidences_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Two passes keep each list sorted: first the smaller neighbors (edges
  // (a, x), a < x), then the larger ones (edges (x, b)).
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    incidences_[cursor[e.v]++] = {e.u, id};
  }
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    incidences_[cursor[e.u]++] = {e.v, id};
  }
}

std::vector<std::size_t> WeightedGraph::degrees() const {
  std::vector<std::size_t> d(num_vertices());
  for (VertexId v = 0; v < num_vertices(); ++v) d[v] = degree(v);
  return d;
}

std::size_t WeightedGraph::max_degree() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

double WeightedGraph::average_degree() const {
  if (num_vertices() == 0) return 0.0;
  return 2.0 * static_cast<double>(num_edges()) /
         static_cast<double>(num_vertices());
}

InducedSubgraph induced_subgraph(const WeightedGraph& graph,
                                 std::span<const std::uint8_t> keep,
                                 std::span<const double> weights) {
  const std::size_t n = graph.num_vertices();
  if (keep.size() != n || weights.size() != n) {
    throw GraphError("induced_subgraph: mask/weight size mismatch");
  }
  InducedSubgraph sub;
  constexpr VertexId kAbsent = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> local(n, kAbsent);
  std::vector<double> local_weights;
  for (VertexId v = 0; v < n; ++v) {
    if (keep[v]) {
      local[v] = static_cast<VertexId>(sub.to_parent_vertex.size());
      sub.to_parent_vertex.push_back(v);
      local_weights.push_back(weights[v]);
    }
  }
  std::vector<Edge> local_edges;
  const auto edges = graph.edges();
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const auto& e = edges[id];
    if (local[e.u] != kAbsent && local[e.v] != kAbsent) {
      // Parent order is (u, v)-sorted and the local map is monotone, so the
      // local list is already canonical.
      local_edges.push_back({local[e.u], local[e.v]});
      sub.to_parent_edge.push_back(id);
    }
  }
  sub.graph = WeightedGraph(sub.to_parent_vertex.size(), std::move(local_edges),
                            std::move(local_weights));
  return sub;
}

std::vector<double> incident_sums(const WeightedGraph& graph,
                                  std::span<const double> per_edge) {
  std::vector<double> sums(graph.num_vertices(), 0.0);
  const auto edges = graph.edges();
  for (EdgeId id = 0; id < edges.size(); ++id) {
    sums[edges[id].u] += per_edge[id];
    sums[edges[id].v] += per_edge[id];
  }
  return sums;
}

}  // namespace mwvc

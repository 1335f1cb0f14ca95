#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwvc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable vertex-weighted undirected simple graph.
///
/// Edges are stored canonically: every pair is normalized to u < v and the
/// list is sorted lexicographically, so two graphs with the same vertex
/// weights and edge set compare equal regardless of construction order.
/// Adjacency is a CSR array; each vertex's incidences are sorted by
/// neighbor id.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Throws GraphError on self-loops, duplicate edges, out-of-range ids or
  /// nonpositive / non-finite weights.
  WeightedGraph(std::size_t num_vertices, std::vector<Edge> edges,
                std::vector<double> weights);

  std::size_t num_vertices() const { return weights_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const double> weights() const { return weights_; }
  double weight(VertexId v) const { return weights_[v]; }

  std::span<const Incidence> neighbors(VertexId v) const {
    return {incidences_.data() + offsets_[v],
            incidences_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }
  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const;

  /// 2|E|/n; zero for the empty graph.
  double average_degree() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.weights_ == b.weights_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<double> weights_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidences_;
};

/// Subgraph induced by a vertex subset, with local dense ids and the maps
/// back to the parent graph.
struct InducedSubgraph {
  WeightedGraph graph;
  std::vector<VertexId> to_parent_vertex;
  std::vector<EdgeId> to_parent_edge;
};

/// Keeps the vertices with keep[v] set; local vertex i carries weight
/// weights[to_parent_vertex[i]] (the caller may pass residual weights).
InducedSubgraph induced_subgraph(const WeightedGraph& graph,
                                 std::span<const std::uint8_t> keep,
                                 std::span<const double> weights);

/// Sum of a per-edge quantity over the edges incident to each vertex.
std::vector<double> incident_sums(const WeightedGraph& graph,
                                  std::span<const double> per_edge);

}  // namespace mwvc

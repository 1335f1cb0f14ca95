#include "mwvc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace mwvc {
namespace {

enum class Status : std::uint8_t { undecided, in, out };

class BranchAndBound {
 public:
  BranchAndBound(const WeightedGraph& g, std::size_t cap)
      : g_(g), cap_(cap), status_(g.num_vertices(), Status::undecided),
        residual_(g.num_vertices()) {}

  ExactResult solve() {
    // Incumbent: every non-isolated vertex.
    best_weight_ = 0.0;
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      if (g_.degree(v) > 0) {
        best_cover_.push_back(v);
        best_weight_ += g_.weight(v);
      }
    }
    recurse(0.0);
    ExactResult r;
    r.opt_cover = best_cover_;
    r.opt_weight = best_weight_;
    r.nodes_explored = nodes_;
    return r;
  }

 private:
  // Greedy fractional matching on edges with both endpoints undecided; by
  // weak duality its value bounds the cost of covering them.
  double lower_bound() {
    for (VertexId v = 0; v < g_.num_vertices(); ++v) residual_[v] = g_.weight(v);
    double lb = 0.0;
    for (const auto& e : g_.edges()) {
      if (status_[e.u] != Status::undecided || status_[e.v] != Status::undecided)
        continue;
      const double x = std::min(residual_[e.u], residual_[e.v]);
      residual_[e.u] -= x;
      residual_[e.v] -= x;
      lb += x;
    }
    return lb;
  }

  void recurse(double weight) {
    if (++nodes_ > cap_) {
      throw OracleCapExceeded("instance too large for oracle: more than " +
                              std::to_string(cap_) + " nodes");
    }
    if (weight >= best_weight_) return;

    VertexId pick = 0;
    std::size_t pick_deg = 0;
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      if (status_[v] != Status::undecided) continue;
      std::size_t deg = 0;
      for (const auto& inc : g_.neighbors(v))
        if (status_[inc.neighbor] == Status::undecided) ++deg;
      if (deg > pick_deg) {
        pick = v;
        pick_deg = deg;
      }
    }
    if (pick_deg == 0) {
      best_weight_ = weight;
      best_cover_.clear();
      for (VertexId v = 0; v < g_.num_vertices(); ++v)
        if (status_[v] == Status::in) best_cover_.push_back(v);
      return;
    }
    if (weight + lower_bound() >= best_weight_) return;

    status_[pick] = Status::in;
    recurse(weight + g_.weight(pick));

    status_[pick] = Status::out;
    std::vector<VertexId> forced;
    double added = 0.0;
    for (const auto& inc : g_.neighbors(pick)) {
      if (status_[inc.neighbor] == Status::undecided) {
        status_[inc.neighbor] = Status::in;
        forced.push_back(inc.neighbor);
        added += g_.weight(inc.neighbor);
      }
    }
    recurse(weight + added);
    for (VertexId v : forced) status_[v] = Status::undecided;
    status_[pick] = Status::undecided;
  }

  const WeightedGraph& g_;
  std::size_t cap_;
  std::size_t nodes_ = 0;
  std::vector<Status> status_;
  std::vector<double> residual_;
  double best_weight_ = 0.0;
  std::vector<VertexId> best_cover_;
};

}  // namespace

ExactResult exact_mwvc(const WeightedGraph& graph, std::size_t node_cap) {
  return BranchAndBound(graph, node_cap).solve();
}

CoverCheck validate_cover(const WeightedGraph& graph,
                          std::span<const VertexId> cover) {
  std::vector<std::uint8_t> in(graph.num_vertices(), 0);
  for (VertexId v : cover) {
    if (v >= graph.num_vertices()) {
      throw std::out_of_range("cover vertex " + std::to_string(v) +
                              " out of range");
    }
    in[v] = 1;
  }
  CoverCheck check;
  for (const auto& e : graph.edges()) {
    if (!in[e.u] && !in[e.v]) {
      check.valid = false;
      check.witness = e;
      break;
    }
  }
  return check;
}

FeasibilityReport validate_fractional_matching(const WeightedGraph& graph,
                                               std::span<const double> weights,
                                               std::span<const double> x,
                                               double slack_factor,
                                               double tolerance) {
  if (weights.size() != graph.num_vertices() || x.size() != graph.num_edges()) {
    throw std::invalid_argument("validate_fractional_matching: size mismatch");
  }
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (x[e] < 0.0) {
      throw std::invalid_argument("negative edge value at edge " +
                                  std::to_string(e));
    }
  }
  FeasibilityReport report;
  report.slack_tolerance_used = tolerance;
  const auto load = incident_sums(graph, x);
  double worst_rel = std::numeric_limits<double>::infinity();
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    const double cap = slack_factor * weights[v];
    const double slack = cap - load[v];
    const double rel = slack / weights[v];
    if (load[v] > cap * (1.0 + tolerance)) report.feasible = false;
    if (!report.worst_vertex || rel < worst_rel ||
        (rel == worst_rel && slack < report.worst_slack)) {
      report.worst_vertex = v;
      report.worst_slack = slack;
      worst_rel = rel;
    }
  }
  return report;
}

RatioReport ratio_report(Algorithm algorithm, double cover_weight,
                         double matching_value, std::optional<double> opt,
                         double epsilon) {
  RatioReport r;
  r.algorithm = algorithm;
  const bool central = algorithm == Algorithm::central;
  r.bound = central ? 2.0 + 10.0 * epsilon : 2.0 + 30.0 * epsilon;
  const double c = central ? 4.0 : 16.0;

  if (cover_weight == 0.0) {
    r.vacuous = true;
    if (opt && *opt > 0.0) r.ratio_vs_opt = 0.0;
    return r;
  }
  if (matching_value > 0.0) {
    r.ratio_vs_matching = cover_weight / matching_value;
  } else {
    r.anomaly = true;
  }
  r.certificate_ok =
      (1.0 - c * epsilon) * cover_weight <= 2.0 * matching_value + kRatioSlack;
  if (opt) {
    if (*opt > 0.0) r.ratio_vs_opt = cover_weight / *opt;
    r.bound_ok = cover_weight <= r.bound * *opt + kRatioSlack;
  }
  r.pass = r.certificate_ok && r.bound_ok;
  return r;
}

RatioReport ratio_report(const CentralResult& result, const ExactResult* exact,
                         double epsilon) {
  return ratio_report(Algorithm::central, result.cover_weight,
                      result.matching_value,
                      exact ? std::optional<double>(exact->opt_weight)
                            : std::nullopt,
                      epsilon);
}

RatioReport ratio_report(const MpcResult& result, const ExactResult* exact,
                         double epsilon) {
  return ratio_report(Algorithm::mpc, result.cover_weight,
                      result.matching_value,
                      exact ? std::optional<double>(exact->opt_weight)
                            : std::nullopt,
                      epsilon);
}

}  // namespace mwvc

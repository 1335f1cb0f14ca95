#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mwvc/central.hpp"
#include "mwvc/graph.hpp"
#include "mwvc/mpc.hpp"

namespace mwvc {

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactResult {
  std::vector<VertexId> opt_cover;  // sorted
  double opt_weight = 0.0;
  std::size_t nodes_explored = 0;
};

inline constexpr std::size_t kDefaultNodeCap = 10'000'000;

/// Minimum-weight vertex cover by branch and bound. Branches on the
/// endpoint u of an uncovered edge with the most uncovered incident edges:
/// either u joins the cover or all of u's undecided neighbors do. Subtrees
/// are pruned when the current weight plus a greedy fractional-matching
/// lower bound on the uncovered remainder reaches the incumbent.
///
/// Throws OracleCapExceeded once more than node_cap nodes are explored; it
/// never returns a non-optimal answer.
ExactResult exact_mwvc(const WeightedGraph& graph,
                       std::size_t node_cap = kDefaultNodeCap);

struct CoverCheck {
  bool valid = true;
  std::optional<Edge> witness;  // first uncovered edge
};

/// Cover ids out of range are an error (std::out_of_range).
CoverCheck validate_cover(const WeightedGraph& graph,
                          std::span<const VertexId> cover);

struct FeasibilityReport {
  bool feasible = true;
  std::optional<VertexId> worst_vertex;
  /// slack_factor * w(v) - sum_{e at v} x_e at the worst vertex.
  double worst_slack = 0.0;
  double slack_tolerance_used = 0.0;
};

/// Checks sum_{e at v} x_e <= slack_factor * w(v) * (1 + tolerance) for every
/// v. The worst vertex minimizes slack / w(v), ties to the smaller absolute
/// slack, then the smaller id. Throws std::invalid_argument on a negative
/// entry or a size mismatch.
FeasibilityReport validate_fractional_matching(
    const WeightedGraph& graph, std::span<const double> weights,
    std::span<const double> x, double slack_factor = 1.0,
    double tolerance = kFeasibilityTolerance);

enum class Algorithm { central, mpc };

struct RatioReport {
  Algorithm algorithm = Algorithm::central;
  std::optional<double> ratio_vs_matching;
  std::optional<double> ratio_vs_opt;
  /// 2 + 10 eps (central) or 2 + 30 eps (mpc).
  double bound = 0.0;
  /// (1 - c eps) w(C) <= 2 W_M with c = 4 (central) or 16 (mpc).
  bool certificate_ok = true;
  /// w(C) <= bound * OPT; true when no OPT was supplied.
  bool bound_ok = true;
  bool vacuous = false;  // empty cover
  bool anomaly = false;  // nonempty cover with zero matching value
  bool pass = true;
};

/// Absolute slack added to ratio comparisons.
inline constexpr double kRatioSlack = 1e-9;

RatioReport ratio_report(const CentralResult& result,
                         const ExactResult* exact, double epsilon);
RatioReport ratio_report(const MpcResult& result, const ExactResult* exact,
                         double epsilon);
/// Shared core, for stored reports.
RatioReport ratio_report(Algorithm algorithm, double cover_weight,
                         double matching_value, std::optional<double> opt,
                         double epsilon);

}  // namespace mwvc

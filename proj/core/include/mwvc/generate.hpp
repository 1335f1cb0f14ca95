#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mwvc/graph.hpp"

namespace mwvc {

enum class GraphModel { gnp, star, path, triangle, power_law };

struct WeightDist {
  enum class Kind { uniform, exponential, degree_proportional };
  Kind kind = Kind::uniform;
  double lo = 1.0;    // uniform lower bound
  double hi = 1.0;    // uniform upper bound
  double mean = 1.0;  // exponential mean

  static WeightDist uniform(double lo, double hi) {
    return {Kind::uniform, lo, hi, 1.0};
  }
  static WeightDist exponential(double mean) {
    return {Kind::exponential, 1.0, 1.0, mean};
  }
  static WeightDist degree_proportional() {
    return {Kind::degree_proportional, 1.0, 1.0, 1.0};
  }
};

/// Generator input.
///
/// Models:
///   gnp        Erdos-Renyi G(n, p), p = target_avg_degree / (n - 1)
///   star       center 0, leaves 1..n-1
///   path       0 - 1 - ... - (n-1)
///   triangle   vertex-disjoint triangles {3k, 3k+1, 3k+2}; leftovers isolated
///   power_law  Chung-Lu with degree exponent 2.5 scaled to the target mean
///
/// degree_proportional weights are max(1, deg(v)).
struct GenSpec {
  GraphModel model = GraphModel::gnp;
  std::size_t num_vertices = 0;
  double target_avg_degree = 0.0;
  WeightDist weights = WeightDist::uniform(1.0, 1.0);
  std::uint64_t seed = 0;
};

/// Invalid generator input; field() names the offending GenSpec field.
class SpecError : public std::invalid_argument {
 public:
  SpecError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

void validate(const GenSpec& spec);

/// Pure function of the spec: identical specs give identical graphs.
WeightedGraph generate(const GenSpec& spec);

GraphModel parse_model(std::string_view name);
std::string to_string(GraphModel model);

/// "uniform:LO:HI", "exponential:MEAN" or "degree".
WeightDist parse_weight_dist(std::string_view text);
std::string to_string(const WeightDist& dist);

}  // namespace mwvc

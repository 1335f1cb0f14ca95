#include "mwvc/generate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <vector>

#include "mwvc/random.hpp"

namespace mwvc {
namespace {

constexpr double kPowerLawExponent = 2.5;

// std::mt19937_64 output is fixed by the standard, unlike the std::
// distributions, so all draws go through rng:: conversions.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t tag)
      : engine_(rng::keyed(seed, {tag})) {}
  double unit() { return rng::to_unit(engine_()); }
  double open_unit() { return rng::to_open_unit(engine_()); }

 private:
  std::mt19937_64 engine_;
};

bool needs_degree(GraphModel m) {
  return m == GraphModel::gnp || m == GraphModel::power_law;
}

std::vector<Edge> gnp_edges(std::size_t n, double p, Stream& rs) {
  std::vector<Edge> edges;
  if (n < 2 || p <= 0.0) return edges;
  if (p >= 1.0) {
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
    return edges;
  }
  // Geometric skipping over the lower triangle (w < v), O(n + m).
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = rs.open_unit();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log(r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) {
      edges.push_back({static_cast<VertexId>(w), static_cast<VertexId>(v)});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Chung-Lu over expected degrees k_i proportional to (i+1)^(-1/(gamma-1)),
// which are already nonincreasing in i; skipping follows Miller-Hagberg.
std::vector<Edge> power_law_edges(std::size_t n, double target, Stream& rs) {
  std::vector<Edge> edges;
  if (n < 2 || target <= 0.0) return edges;
  std::vector<double> k(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    k[i] = std::pow(static_cast<double>(i + 1), -1.0 / (kPowerLawExponent - 1));
    total += k[i];
  }
  const double scale = target * static_cast<double>(n) / total;
  for (auto& ki : k) ki = std::min(ki * scale, static_cast<double>(n - 1));
  const double sum = target * static_cast<double>(n);

  for (std::size_t u = 0; u + 1 < n; ++u) {
    std::size_t v = u + 1;
    double p = std::min(k[u] * k[v] / sum, 1.0);
    while (v < n && p > 0.0) {
      if (p < 1.0) {
        const double r = rs.open_unit();
        v += static_cast<std::size_t>(std::floor(std::log(r) / std::log1p(-p)));
      }
      if (v < n) {
        const double q = std::min(k[u] * k[v] / sum, 1.0);
        if (rs.unit() < q / p) {
          edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
        }
        p = q;
        ++v;
      }
    }
  }
  return edges;
}

std::vector<double> draw_weights(const WeightDist& dist, std::size_t n,
                                 const std::vector<Edge>& edges, Stream& rs) {
  std::vector<double> w(n);
  switch (dist.kind) {
    case WeightDist::Kind::uniform:
      for (auto& x : w) x = dist.lo + (dist.hi - dist.lo) * rs.unit();
      break;
    case WeightDist::Kind::exponential:
      for (auto& x : w) x = -dist.mean * std::log(rs.open_unit());
      break;
    case WeightDist::Kind::degree_proportional: {
      std::vector<std::size_t> deg(n, 0);
      for (const auto& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
      }
      for (std::size_t v = 0; v < n; ++v)
        w[v] = static_cast<double>(std::max<std::size_t>(1, deg[v]));
      break;
    }
  }
  return w;
}

double parse_double(std::string_view s, const char* field) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw SpecError(field, "cannot parse number '" + std::string(s) + "'");
  }
  return out;
}

std::string fmt_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

void validate(const GenSpec& spec) {
  if (spec.num_vertices == 0) {
    throw SpecError("num_vertices", "must be at least 1");
  }
  if (spec.model == GraphModel::triangle && spec.num_vertices < 3) {
    throw SpecError("num_vertices", "triangle model needs at least 3 vertices");
  }
  if (needs_degree(spec.model)) {
    const double n = static_cast<double>(spec.num_vertices);
    if (!(spec.target_avg_degree >= 0.0) ||
        !(spec.target_avg_degree < n)) {
      throw SpecError("target_avg_degree", "must lie in [0, num_vertices)");
    }
    if (spec.target_avg_degree > n - 1.0) {
      throw SpecError("target_avg_degree",
                      "unreachable: exceeds num_vertices - 1");
    }
  }
  const auto& w = spec.weights;
  switch (w.kind) {
    case WeightDist::Kind::uniform:
      if (!(w.lo > 0.0) || !(w.lo <= w.hi) || !std::isfinite(w.hi)) {
        throw SpecError("weight_dist", "uniform bounds need 0 < lo <= hi");
      }
      break;
    case WeightDist::Kind::exponential:
      if (!(w.mean > 0.0) || !std::isfinite(w.mean)) {
        throw SpecError("weight_dist", "exponential mean must be positive");
      }
      break;
    case WeightDist::Kind::degree_proportional:
      break;
  }
}

WeightedGraph generate(const GenSpec& spec) {
  validate(spec);
  const std::size_t n = spec.num_vertices;
  Stream structure(spec.seed, 0);
  Stream weighting(spec.seed, 1);

  std::vector<Edge> edges;
  switch (spec.model) {
    case GraphModel::gnp:
      edges = gnp_edges(
          n, n > 1 ? spec.target_avg_degree / static_cast<double>(n - 1) : 0.0,
          structure);
      break;
    case GraphModel::power_law:
      edges = power_law_edges(n, spec.target_avg_degree, structure);
      break;
    case GraphModel::star:
      for (VertexId v = 1; v < n; ++v) edges.push_back({0, v});
      break;
    case GraphModel::path:
      for (VertexId v = 1; v < n; ++v) edges.push_back({v - 1, v});
      break;
    case GraphModel::triangle:
      for (VertexId b = 0; b + 2 < n; b += 3) {
        edges.push_back({b, b + 1});
        edges.push_back({b, b + 2});
        edges.push_back({b + 1, b + 2});
      }
      break;
  }
  auto weights = draw_weights(spec.weights, n, edges, weighting);
  return WeightedGraph(n, std::move(edges), std::move(weights));
}

GraphModel parse_model(std::string_view name) {
  if (name == "gnp") return GraphModel::gnp;
  if (name == "star") return GraphModel::star;
  if (name == "path") return GraphModel::path;
  if (name == "triangle") return GraphModel::triangle;
  if (name == "power-law" || name == "power_law") return GraphModel::power_law;
  throw SpecError("model", "unknown model '" + std::string(name) + "'");
}

std::string to_string(GraphModel model) {
  switch (model) {
    case GraphModel::gnp: return "gnp";
    case GraphModel::star: return "star";
    case GraphModel::path: return "path";
    case GraphModel::triangle: return "triangle";
    case GraphModel::power_law: return "power-law";
  }
  return "?";
}

WeightDist parse_weight_dist(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (parts[0] == "uniform" && parts.size() == 3) {
    return WeightDist::uniform(parse_double(parts[1], "weight_dist"),
                               parse_double(parts[2], "weight_dist"));
  }
  if (parts[0] == "exponential" && parts.size() == 2) {
    return WeightDist::exponential(parse_double(parts[1], "weight_dist"));
  }
  if ((parts[0] == "degree" || parts[0] == "degree-proportional") &&
      parts.size() == 1) {
    return WeightDist::degree_proportional();
  }
  throw SpecError("weight_dist", "expected uniform:LO:HI, exponential:MEAN "
                                 "or degree, got '" + std::string(text) + "'");
}

std::string to_string(const WeightDist& dist) {
  switch (dist.kind) {
    case WeightDist::Kind::uniform:
      return "uniform:" + fmt_double(dist.lo) + ":" + fmt_double(dist.hi);
    case WeightDist::Kind::exponential:
      return "exponential:" + fmt_double(dist.mean);
    case WeightDist::Kind::degree_proportional:
      return "degree";
  }
  return "?";
}

}  // namespace mwvc

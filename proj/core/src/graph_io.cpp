#include "mwvc/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace mwvc {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r')
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, const char* what, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(std::string("malformed ") + what + " '" +
                         std::string(tok) + "'",
                     line);
  }
  return value;
}

struct RawEdge {
  std::uint64_t u;
  std::uint64_t v;
  std::size_t line;
};

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p)
      const noexcept {
    return std::hash<std::uint64_t>{}(p.first * 0x9e3779b97f4a7c15ULL ^
                                      p.second);
  }
};

}  // namespace

bool LoadedGraph::identity_ids() const {
  for (std::size_t i = 0; i < original_ids.size(); ++i)
    if (original_ids[i] != i) return false;
  return true;
}

LoadedGraph load_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::pair<std::uint64_t, double>> vertices;
  std::vector<RawEdge> raw_edges;
  std::unordered_map<std::uint64_t, std::size_t> vertex_line;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;

    if (!have_header) {
      if (tok[0] != "p" || tok.size() != 3) {
        throw ParseError("malformed header, expected 'p <n> <m>'", line_no);
      }
      n = parse_number<std::size_t>(tok[1], "vertex count", line_no);
      m = parse_number<std::size_t>(tok[2], "edge count", line_no);
      have_header = true;
      vertices.reserve(n);
      raw_edges.reserve(m);
      continue;
    }

    if (tok[0] == "v") {
      if (tok.size() != 3) throw ParseError("malformed vertex line", line_no);
      auto id = parse_number<std::uint64_t>(tok[1], "vertex id", line_no);
      auto w = parse_number<double>(tok[2], "weight", line_no);
      if (!(w > 0.0) || !std::isfinite(w)) {
        throw ParseError("weight must be positive", line_no);
      }
      if (!vertex_line.emplace(id, line_no).second) {
        throw ParseError("duplicate vertex " + std::to_string(id), line_no);
      }
      if (vertices.size() == n) {
        throw ParseError("more than " + std::to_string(n) + " vertex lines",
                         line_no);
      }
      vertices.emplace_back(id, w);
    } else if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError("malformed edge line", line_no);
      auto u = parse_number<std::uint64_t>(tok[1], "vertex id", line_no);
      auto v = parse_number<std::uint64_t>(tok[2], "vertex id", line_no);
      if (u == v) throw ParseError("self-loop", line_no);
      auto key = std::minmax(u, v);
      if (!seen.emplace(key.first, key.second).second) {
        throw ParseError("duplicate edge", line_no);
      }
      if (raw_edges.size() == m) {
        throw ParseError("more than " + std::to_string(m) + " edge lines",
                         line_no);
      }
      raw_edges.push_back({u, v, line_no});
    } else if (tok[0] == "p") {
      throw ParseError("repeated header", line_no);
    } else {
      throw ParseError("unknown record '" + std::string(tok[0]) + "'", line_no);
    }
  }
  if (!have_header) throw ParseError("missing header", line_no + 1);
  if (vertices.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " vertex lines, found " +
                         std::to_string(vertices.size()),
                     line_no + 1);
  }
  if (raw_edges.size() != m) {
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(raw_edges.size()),
                     line_no + 1);
  }

  std::sort(vertices.begin(), vertices.end());
  LoadedGraph loaded;
  loaded.original_ids.reserve(n);
  std::vector<double> weights;
  weights.reserve(n);
  std::unordered_map<std::uint64_t, VertexId> dense;
  dense.reserve(n);
  for (const auto& [id, w] : vertices) {
    dense.emplace(id, static_cast<VertexId>(loaded.original_ids.size()));
    loaded.original_ids.push_back(id);
    weights.push_back(w);
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (const auto& e : raw_edges) {
    auto iu = dense.find(e.u);
    auto iv = dense.find(e.v);
    if (iu == dense.end() || iv == dense.end()) {
      const auto missing = iu == dense.end() ? e.u : e.v;
      throw ParseError("dangling vertex id " + std::to_string(missing), e.line);
    }
    edges.push_back({iu->second, iv->second});
  }
  loaded.graph = WeightedGraph(n, std::move(edges), std::move(weights));
  return loaded;
}

void save_graph(const WeightedGraph& graph, std::ostream& out) {
  out << "p " << graph.num_vertices() << ' ' << graph.num_edges() << '\n';
  char buf[64];
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, graph.weight(v));
    out << "v " << v << ' ' << std::string_view(buf, ptr - buf) << '\n';
  }
  for (const auto& e : graph.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

LoadedGraph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path.string());
  return load_graph(in);
}

void save_graph_file(const WeightedGraph& graph,
                     const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write " + path.string());
  save_graph(graph, out);
  if (!out) throw GraphError("write failed for " + path.string());
}

}  // namespace mwvc

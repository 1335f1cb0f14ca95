#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "mwvc/graph.hpp"

namespace mwvc {

/// Parse failure; what() reads "<message> at line <k>".
class ParseError : public GraphError {
 public:
  ParseError(const std::string& message, std::size_t line)
      : GraphError(message + " at line " + std::to_string(line)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A loaded graph plus the file's vertex labels. Dense id i corresponds to
/// original_ids[i]; labels are assigned to dense ids in increasing order,
/// so files already using 0..n-1 load with the identity mapping.
struct LoadedGraph {
  WeightedGraph graph;
  std::vector<std::uint64_t> original_ids;

  bool identity_ids() const;
};

// Text format, '#' starts a comment:
//   p <n> <m>
//   v <id> <weight>     (exactly n)
//   e <u> <v>           (exactly m)
LoadedGraph load_graph(std::istream& in);
void save_graph(const WeightedGraph& graph, std::ostream& out);

LoadedGraph load_graph_file(const std::filesystem::path& path);
void save_graph_file(const WeightedGraph& graph,
                     const std::filesystem::path& path);

}  // namespace mwvc

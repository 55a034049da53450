#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pathsep/graph.hpp"

namespace pathsep {

/// Parses the edge-list format:
///
///     # comment
///     n m
///     u v      (m lines, 0 <= u, v < n, u != v)
///
/// '#' starts a comment running to end of line, blank lines are ignored and
/// tokens are whitespace separated. Duplicate edge lines collapse into one
/// edge. Errors carry the 1-based physical line number.
Graph parse_graph(std::string_view text);

/// Loose mode: a header-less list of "u v" lines over arbitrary non-negative
/// ids. Ids are relabelled densely in ascending order; labels[i] is the
/// original id of vertex i.
struct LooseGraph {
  Graph graph;
  std::vector<std::uint64_t> labels;
};
LooseGraph parse_graph_loose(std::string_view text);

/// Emits "n m" followed by the edges in lexicographic order.
std::string format_graph(const Graph& g);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace pathsep

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathsep/path_system.hpp"

namespace pathsep {

/// Paths read from a file, before they are attached to a host graph.
struct PathList {
  std::optional<std::size_t> n;  // present in the JSON form only
  std::vector<Path> paths;
};

/// Text form: one path per line as space-separated vertex ids, '#' comments,
/// blank lines ignored, order preserved. Input whose first non-blank
/// character is '{' is read as JSON: {"n": int, "paths": [[int, ...], ...]}.
PathList parse_paths(std::string_view text);

/// Attaches parsed paths to a graph; checks a JSON "n" against the graph.
PathSystem attach(const Graph& g, PathList list);

std::string format_paths_text(const PathSystem& sys);
std::string format_paths_json(const PathSystem& sys);

}  // namespace pathsep

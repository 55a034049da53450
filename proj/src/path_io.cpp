#include "pathsep/path_io.hpp"

#include <cctype>
#include <charconv>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "pathsep/error.hpp"

namespace pathsep {

namespace {

PathList parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::parse, fmt::format("path JSON: {}", e.what()));
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("paths") || !doc["paths"].is_array())
    throw Error(ErrorKind::parse, R"(path JSON must be {"n": int, "paths": [[int, ...], ...]})");
  PathList list;
  try {
    list.n = doc["n"].get<std::size_t>();
    for (const auto& row : doc["paths"]) list.paths.emplace_back(row.get<std::vector<Vertex>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, fmt::format("path JSON: {}", e.what()));
  }
  return list;
}

}  // namespace

PathList parse_paths(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);

  PathList list;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Vertex> vs;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const auto start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i == start) continue;
      Vertex v = 0;
      const auto [ptr, ec] = std::from_chars(line.data() + start, line.data() + i, v);
      if (ec != std::errc{} || ptr != line.data() + i)
        throw ParseError(lineno, fmt::format("bad vertex id '{}'", line.substr(start, i - start)));
      vs.push_back(v);
    }
    if (vs.empty()) continue;
    try {
      list.paths.emplace_back(std::move(vs));
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return list;
}

PathSystem attach(const Graph& g, PathList list) {
  if (list.n && *list.n != g.vertex_count())
    throw Error(ErrorKind::invalid_system,
                fmt::format("path file declares n = {} but the graph has {} vertices", *list.n, g.vertex_count()));
  return PathSystem(g, std::move(list.paths));
}

std::string format_paths_text(const PathSystem& sys) {
  std::string out;
  for (const auto& p : sys.paths()) out += fmt::format("{}\n", fmt::join(p.vertices(), " "));
  return out;
}

std::string format_paths_json(const PathSystem& sys) {
  nlohmann::json doc;
  doc["n"] = sys.graph().vertex_count();
  doc["paths"] = nlohmann::json::array();
  for (const auto& p : sys.paths())
    doc["paths"].push_back(std::vector<Vertex>(p.vertices().begin(), p.vertices().end()));
  return doc.dump() + "\n";
}

}  // namespace pathsep

#include "pathsep/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "pathsep/error.hpp"

namespace pathsep {

namespace {

// Splits text into (line number, tokens) for each non-blank, non-comment line.
std::vector<std::pair<std::size_t, std::vector<std::string_view>>> tokenize(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const auto start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (!tokens.empty()) lines.emplace_back(lineno, std::move(tokens));
  }
  return lines;
}

std::uint64_t to_uint(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, fmt::format("expected a non-negative integer, got '{}'", token));
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");

  const auto& [header_line, header] = lines.front();
  if (header.size() != 2) throw ParseError(header_line, "header must be 'n m'");
  const auto n = to_uint(header[0], header_line);
  const auto m = to_uint(header[1], header_line);
  if (n > std::numeric_limits<Vertex>::max()) throw ParseError(header_line, "vertex count too large");

  std::vector<Edge> edges;
  edges.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line, tokens] = lines[i];
    if (tokens.size() != 2) throw ParseError(line, "edge line must be 'u v'");
    const auto u = to_uint(tokens[0], line);
    const auto v = to_uint(tokens[1], line);
    if (u >= n || v >= n) throw ParseError(line, fmt::format("vertex id >= declared n = {}", n));
    if (u == v) throw ParseError(line, fmt::format("self-loop at vertex {}", u));
    edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  if (edges.size() != m) {
    const auto last = lines.back().first;
    throw ParseError(last, fmt::format("header declares {} edge lines, found {}", m, edges.size()));
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

LooseGraph parse_graph_loose(std::string_view text) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::vector<std::uint64_t> labels;
  for (const auto& [line, tokens] : tokenize(text)) {
    if (tokens.size() != 2) throw ParseError(line, "edge line must be 'u v'");
    const auto u = to_uint(tokens[0], line);
    const auto v = to_uint(tokens[1], line);
    if (u == v) throw ParseError(line, fmt::format("self-loop at vertex {}", u));
    raw.emplace_back(u, v);
    labels.push_back(u);
    labels.push_back(v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const auto dense = [&](std::uint64_t id) {
    return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), id) - labels.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) edges.push_back(make_edge(dense(u), dense(v)));
  return {Graph(labels.size(), std::move(edges)), std::move(labels)};
}

std::string format_graph(const Graph& g) {
  std::string out = fmt::format("{} {}\n", g.vertex_count(), g.edge_count());
  for (const auto& e : g.edges()) out += fmt::format("{} {}\n", e.u, e.v);
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, fmt::format("cannot open '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::parse, fmt::format("cannot write '{}'", path.string()));
  out << contents;
}

}  // namespace pathsep

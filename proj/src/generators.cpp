#include "pathsep/generators.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "pathsep/error.hpp"
#include "pathsep/structure.hpp"

namespace pathsep {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::precondition, "SeededRng::below(0)");
  // excess = 2^64 mod bound; the top `excess` raw values are rejected
  const std::uint64_t excess = (0 - bound) % bound;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r > std::numeric_limits<std::uint64_t>::max() - excess);
  return r % bound;
}

Graph path_graph(std::size_t vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < vertices; ++i) edges.push_back({Vertex(i - 1), Vertex(i)});
  return Graph(vertices, std::move(edges));
}

Graph cycle_graph(std::size_t vertices) {
  if (vertices < 3) throw Error(ErrorKind::precondition, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices; ++i)
    edges.push_back(make_edge(Vertex(i), Vertex((i + 1) % vertices)));
  return Graph(vertices, std::move(edges));
}

Graph complete_graph(std::size_t vertices) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < vertices; ++u)
    for (Vertex v = u + 1; v < vertices; ++v) edges.push_back({u, v});
  return Graph(vertices, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i)
    for (std::size_t t = 0; t < b; ++t) edges.push_back({i, Vertex(a + t)});
  return Graph(a + b, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));          // outer cycle
    edges.push_back(make_edge(i, i + 5));                // spokes
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

Graph triangular_prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph cube_graph() {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 8; ++v)
    for (Vertex bit = 1; bit < 8; bit <<= 1)
      if (!(v & bit)) edges.push_back({v, v | bit});
  return Graph(8, std::move(edges));
}

Graph fan_graph(std::size_t path_vertices) {
  std::vector<Edge> edges;
  const auto apex = static_cast<Vertex>(path_vertices);
  for (Vertex i = 0; i < path_vertices; ++i) {
    if (i > 0) edges.push_back({i - 1, i});
    edges.push_back({i, apex});
  }
  return Graph(path_vertices + 1, std::move(edges));
}

std::vector<std::string> named_graph_names() {
  return {"k4", "petersen", "prism", "cube", "k33", "triangle", "p3", "c5", "fan5"};
}

Graph named_graph(std::string_view name) {
  if (name == "k4") return complete_graph(4);
  if (name == "petersen") return petersen_graph();
  if (name == "prism") return triangular_prism();
  if (name == "cube") return cube_graph();
  if (name == "k33") return complete_bipartite(3, 3);
  if (name == "triangle") return complete_graph(3);
  if (name == "p3") return path_graph(3);
  if (name == "c5") return cycle_graph(5);
  if (name == "fan5") return fan_graph(4);
  throw Error(ErrorKind::precondition, fmt::format("unknown named graph '{}'", name));
}

Graph random_two_degenerate(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorKind::precondition, "two-degenerate generator needs n >= 3");
  SeededRng rng(seed);
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  for (Vertex v = 3; v < n; ++v) {
    const auto attach = 1 + rng.below(2);
    const auto first = static_cast<Vertex>(rng.below(v));
    edges.push_back({first, v});
    if (attach == 2) {
      auto second = static_cast<Vertex>(rng.below(v - 1));
      if (second >= first) ++second;
      edges.push_back(make_edge(second, v));
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_cubic(std::size_t n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorKind::precondition, "cubic generator needs even n >= 4");
  SeededRng rng(seed);
  std::vector<Vertex> stubs(3 * n);
  for (std::size_t attempt = 0; attempt < 100000; ++attempt) {
    for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = Vertex(i / 3);
    for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[rng.below(i)]);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        simple = false;
        break;
      }
      edges.push_back(make_edge(stubs[i], stubs[i + 1]));
    }
    if (!simple) continue;
    Graph g(n, edges);
    if (g.edge_count() == edges.size() && is_connected(g)) return g;
  }
  throw Error(ErrorKind::limit, "random cubic generator exhausted its retries");
}

}  // namespace pathsep

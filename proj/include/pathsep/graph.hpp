#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pathsep {

using Vertex = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Orders the endpoints. Throws on a self-loop.
Edge make_edge(Vertex a, Vertex b);

std::string to_string(Edge e);

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted lexicographically; an edge's position in that order is
/// its edge id, which the path-system code uses to index incidence sets.
/// Adjacency lists are sorted ascending.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Duplicate edges collapse; self-loops and out-of-range ids throw.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_.at(id); }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;

  bool has_edge(Vertex a, Vertex b) const;
  std::optional<std::size_t> edge_id(Vertex a, Vertex b) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<std::size_t> adjacency_edge_;
};

/// Induced subgraph relabelled to 0..k-1; to_parent maps local ids back.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

/// `vertices` need not be sorted; local ids follow ascending parent id.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

Graph without_edge(const Graph& g, Edge e);

/// Disjoint union in argument order (vertices of `b` shifted by |V(a)|).
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace pathsep

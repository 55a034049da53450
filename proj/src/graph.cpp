#include "pathsep/graph.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "pathsep/error.hpp"

namespace pathsep {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw Error(ErrorKind::precondition, fmt::format("self-loop at vertex {}", a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(Edge e) { return fmt::format("{}-{}", e.u, e.v); }

Graph::Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw Error(ErrorKind::precondition,
                  fmt::format("edge {} out of range for {} vertices", to_string(e), n));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  std::partial_sum(deg.begin(), deg.end(), offsets_.begin() + 1);
  adjacency_.resize(2 * edges_.size());
  adjacency_edge_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const auto [u, v] = edges_[id];
    adjacency_[fill[u]] = v;
    adjacency_edge_[fill[u]++] = id;
    adjacency_[fill[v]] = u;
    adjacency_edge_[fill[v]++] = id;
  }
  // rows must be sorted by neighbour id for edge_id's binary search
  for (std::size_t v = 0; v < n; ++v) {
    const auto lo = offsets_[v], hi = offsets_[v + 1];
    std::vector<std::pair<Vertex, std::size_t>> row;
    row.reserve(hi - lo);
    for (auto i = lo; i < hi; ++i) row.emplace_back(adjacency_[i], adjacency_edge_[i]);
    std::sort(row.begin(), row.end());
    for (auto i = lo; i < hi; ++i) std::tie(adjacency_[i], adjacency_edge_[i]) = row[i - lo];
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= n_) throw Error(ErrorKind::precondition, fmt::format("vertex {} out of range", v));
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).size(); }

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

std::size_t Graph::min_degree() const noexcept {
  if (n_ == 0) return 0;
  std::size_t best = offsets_[1] - offsets_[0];
  for (std::size_t v = 1; v < n_; ++v) best = std::min(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

std::optional<std::size_t> Graph::edge_id(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_ || a == b) return std::nullopt;
  const auto row = neighbors(a);
  const auto it = std::lower_bound(row.begin(), row.end(), b);
  if (it == row.end() || *it != b) return std::nullopt;
  return adjacency_edge_[offsets_[a] + static_cast<std::size_t>(it - row.begin())];
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()), sub.to_parent.end());

  constexpr auto absent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(g.vertex_count(), absent);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) local.at(sub.to_parent[i]) = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (local[e.u] != absent && local[e.v] != absent) edges.push_back({local[e.u], local[e.v]});
  sub.graph = Graph(sub.to_parent.size(), std::move(edges));
  return sub;
}

Graph without_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& f : g.edges())
    if (f != e) edges.push_back(f);
  return Graph(g.vertex_count(), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto shift = static_cast<Vertex>(a.vertex_count());
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

}  // namespace pathsep

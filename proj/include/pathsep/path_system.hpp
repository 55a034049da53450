#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pathsep/graph.hpp"

namespace pathsep {

/// Simple path given by its vertex sequence (at least two distinct vertices).
class Path {
 public:
  Path() = default;
  /// Throws Error(invalid_system) on fewer than 2 vertices or a repeated vertex.
  explicit Path(std::vector<Vertex> vertices);
  Path(std::initializer_list<Vertex> vertices) : Path(std::vector<Vertex>(vertices)) {}

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return vertices_.empty() ? 0 : vertices_.size() - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  bool ends_at(Vertex v) const { return front() == v || back() == v; }
  bool contains(Vertex v) const;

  /// Appends v at the end equal to `at` (prepends if `at` is the front).
  Path extended(Vertex at, Vertex v) const;
  Path reversed() const;

  /// Orientation with the smaller endpoint first.
  Path canonical() const;

  auto operator<=>(const Path&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

std::string to_string(const Path& p);

/// Ordered collection of paths over a host graph. Construction checks every
/// consecutive pair against the graph and caches per-path edge ids.
class PathSystem {
 public:
  PathSystem() = default;
  /// Throws Error(invalid_system) naming the path index and offending pair.
  PathSystem(Graph graph, std::vector<Path> paths);

  const Graph& graph() const noexcept { return graph_; }
  std::span<const Path> paths() const noexcept { return paths_; }
  const Path& path(std::size_t i) const { return paths_.at(i); }
  std::size_t size() const noexcept { return paths_.size(); }
  /// Edge ids along path i, in traversal order.
  std::span<const std::size_t> path_edges(std::size_t i) const { return path_edges_.at(i); }

  /// Paths reoriented canonically and sorted; for order-insensitive comparison.
  std::vector<Path> canonical_paths() const;

 private:
  Graph graph_;
  std::vector<Path> paths_;
  std::vector<std::vector<std::size_t>> path_edges_;
};

/// Per-edge incidence sets S(e) over path indices plus the histogram e_i.
struct IncidenceProfile {
  std::size_t path_count = 0;
  std::vector<boost::dynamic_bitset<>> sets;  // indexed by edge id
  std::vector<std::size_t> histogram;         // histogram[i] = e_i

  std::size_t edges_in_exactly(std::size_t i) const { return i < histogram.size() ? histogram[i] : 0; }
};

IncidenceProfile incidence_profile(const PathSystem& sys);

enum class SeparationFailure { none, uncovered, comparable };

/// Outcome of the strong-separation check.
///
/// On `uncovered`, `first` is the smallest edge on no path. On `comparable`,
/// S(first) is a subset of S(second): no path contains `first` while avoiding
/// `second`. `shared_paths` lists S(first). The reported pair is the
/// lexicographically smallest failing unordered pair of edge ids.
struct SeparationVerdict {
  SeparationFailure failure = SeparationFailure::none;
  Edge first{};
  Edge second{};
  std::vector<std::size_t> shared_paths;

  bool pass() const noexcept { return failure == SeparationFailure::none; }
  std::string describe() const;
};

/// S(e) non-empty for every edge and pairwise incomparable. OpenMP-parallel
/// over edges; the witness does not depend on the thread count.
SeparationVerdict verify_strong_separation(const PathSystem& sys);

namespace serial {
/// Single-threaded reference for verify_strong_separation.
SeparationVerdict verify_strong_separation(const PathSystem& sys);
}  // namespace serial

struct StructuralVerdict {
  bool pass = false;
  std::string reason;
};

/// Every edge lies in exactly two paths and every vertex is an endpoint of
/// exactly two paths.
StructuralVerdict verify_structural_properties(const PathSystem& sys);

/// Number of paths ending at each vertex.
std::vector<std::size_t> endpoint_counts(const PathSystem& sys);

/// Edge-multiplicity and pair-counting inequalities for a strongly separating
/// system of K_{a,b}.
///
///   multiplicity:  3ab - 2e1 - e2 <= 2ap   (each path has at most 2a edges)
///   pairs:         e2 + 2e1 <= C(p - e1, 2) + 2e1
///   relaxed pairs: e2 + 2e1 <= p^2 / 2
///
/// The relaxed form follows from the pairs form except when every path is a
/// single edge and p <= 3 (K_{1,1}, K_{1,2}, K_{1,3} with all-singleton
/// systems); it is reported, not required.
struct CountingCertificate {
  std::int64_t a = 0, b = 0, p = 0, e1 = 0, e2 = 0;
  std::int64_t multiplicity_lhs = 0;  // 3ab - 2e1 - e2
  std::int64_t multiplicity_rhs = 0;  // 2ap
  std::int64_t pair_lhs = 0;          // e2 + 2e1
  std::int64_t pair_rhs = 0;          // C(p - e1, 2) + 2e1
  double relaxed_rhs = 0;             // p^2 / 2

  std::int64_t multiplicity_slack() const { return multiplicity_rhs - multiplicity_lhs; }
  std::int64_t pair_slack() const { return pair_rhs - pair_lhs; }
  double relaxed_slack() const { return relaxed_rhs - static_cast<double>(pair_lhs); }
  bool holds() const { return multiplicity_slack() >= 0 && pair_slack() >= 0; }
};

/// Throws Error(precondition) when the host is not K_{a,b} or the system is
/// not strongly separating.
CountingCertificate counting_certificate(const PathSystem& sys, std::int64_t a, std::int64_t b);

/// Whether g is complete bipartite with part sizes {a, b}.
bool is_complete_bipartite(const Graph& g, std::size_t a, std::size_t b);

}  // namespace pathsep

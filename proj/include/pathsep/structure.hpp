#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "pathsep/graph.hpp"

namespace pathsep {

/// Components ordered by smallest vertex id; each component sorted ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct DegeneracyResult {
  bool two_degenerate = false;
  /// Elimination order (every vertex, in removal order) when two_degenerate.
  std::vector<Vertex> order;
};

/// Repeatedly deletes a minimum-degree vertex (smallest id on ties).
DegeneracyResult is_2_degenerate(const Graph& g);

enum class RemovalKind { degree1_safe, degree2_safe, degree2_cut };
std::string_view to_string(RemovalKind kind);

struct RemovalStep {
  Vertex vertex = 0;
  RemovalKind kind = RemovalKind::degree1_safe;
  /// Neighbours at removal time, ascending (one or two entries).
  std::vector<Vertex> neighbors;
  /// For degree2_cut: the two resulting components, ordered by smallest id.
  std::vector<std::vector<Vertex>> sides;
};

/// Peels a connected 2-degenerate graph down to 3-vertex pieces.
///
/// Each step acts on one current component of at least 4 vertices. A safe
/// step removes a vertex of degree <= 2 whose removal keeps that component
/// connected (degree-1 candidates are preferred, then smallest id). When no
/// safe vertex exists the smallest-id degree-2 vertex is removed and its
/// component splits in two, each side with at least 3 vertices.
/// `base_components` are the 3-vertex pieces left at the end, ordered by
/// smallest vertex id.
struct VertexRemovalPlan {
  std::vector<RemovalStep> steps;
  std::vector<std::vector<Vertex>> base_components;
};

/// Requires g connected, 2-degenerate, n >= 4; throws Error(precondition) otherwise.
VertexRemovalPlan removal_plan_2degenerate(const Graph& g);

/// Lexicographically smallest edge whose endpoints share no neighbour.
std::optional<Edge> find_non_triangle_edge(const Graph& g);

enum class ComponentClass {
  isolated_vertex,
  single_edge,
  k4,
  cubic_non_k4,
  subcubic_2degenerate,
  general_2degenerate,
  other,
};
std::string_view to_string(ComponentClass c);

/// `component` must be a connected component of g.
ComponentClass classify_component(const Graph& g, const std::vector<Vertex>& component);

bool is_cubic(const Graph& g);
bool is_k4(const Graph& g);

}  // namespace pathsep

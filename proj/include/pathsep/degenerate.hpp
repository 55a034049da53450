#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pathsep/graph.hpp"
#include "pathsep/path_system.hpp"

namespace pathsep {

enum class StepCase { deg1_extend, deg2_extend, deg2_join };
enum class BaseShape { path, triangle };
std::string_view to_string(StepCase c);
std::string_view to_string(BaseShape s);

/// One vertex re-inserted during construction.
///
/// deg1_extend: the path at paths_modified[0] (which ended at neighbors[0])
/// is extended to `vertex`, and the edge path is appended.
/// deg2_extend / deg2_join: paths_modified[i] ended at neighbors[i] and is
/// extended to `vertex`; the path (neighbors[0], vertex, neighbors[1]) is
/// appended. deg2_join marks the re-joining of two separate components.
struct TraceStep {
  Vertex vertex = 0;
  StepCase kind = StepCase::deg1_extend;
  std::vector<Vertex> neighbors;
  std::vector<std::size_t> paths_modified;
  std::vector<std::size_t> paths_added;
};

struct BaseCase {
  std::vector<Vertex> component;  // sorted, 3 vertices
  BaseShape shape = BaseShape::path;
};

/// Base cases are laid down first (their paths take the lowest indices, in
/// order), then the steps are applied in order.
struct ConstructionTrace {
  std::vector<BaseCase> base_cases;
  std::vector<TraceStep> steps;
};

nlohmann::json to_json(const ConstructionTrace& trace);
ConstructionTrace trace_from_json(const nlohmann::json& doc);

struct DegenerateBuild {
  PathSystem system;
  ConstructionTrace trace;
};

/// n-path strongly separating system for a connected 2-degenerate graph on
/// n >= 3 vertices in which every edge lies in exactly two paths and every
/// vertex ends exactly two paths.
///
/// Replays the removal plan backwards from its 3-vertex base cases. When a
/// path ending at a vertex must be chosen, the lowest-index one is taken (for
/// the second neighbour of a degree-2 vertex: the lowest index distinct from
/// the first choice).
DegenerateBuild build_ssp_2degenerate(const Graph& g);

/// Rebuilds the system from a trace; equals the builder's output for its own trace.
PathSystem replay_trace(const Graph& g, const ConstructionTrace& trace);

/// Base-case system for 3 connected vertices: the 2-edge path (x, c, y) gives
/// {(x,c,y), (x,c), (c,y)}; the triangle a < b < c gives its three rotations.
std::vector<Path> base_case_paths(const Graph& g, const std::vector<Vertex>& component);

/// How the paths extended to u and v are picked in build_ssp_cubic_minus_edge.
enum class EndpointChoice {
  /// Four pairwise distinct paths (first such choice in index order). Always
  /// possible since each of u1, u2, v1, v2 ends two paths.
  distinct,
  /// Lowest index per vertex, only requiring P_u1 != P_u2 and P_v1 != P_v2.
  lowest_index,
};

/// System for H = G - uv, G connected cubic and not K4, uv in no triangle.
struct CubicMinusEdgeBuild {
  PathSystem system;  // host graph is H
  Vertex u = 0, v = 0;
  std::array<Vertex, 2> u_neighbors{};  // ascending, in H
  std::array<Vertex, 2> v_neighbors{};
  std::size_t u_center_path = 0;  // index of (u1, u, u2)
  std::size_t v_center_path = 0;  // index of (v1, v, v2)
  /// Paths extended to u from u1 / u2 and to v from v1 / v2.
  std::array<std::size_t, 2> u_extended{};
  std::array<std::size_t, 2> v_extended{};
};

/// Builds H' = G - {u, v}, a 2-degenerate system per component (components
/// joined in order of smallest vertex), then extends two paths to each of u
/// and v and appends (u1, u, u2), (v1, v, v2). At most n paths.
CubicMinusEdgeBuild build_ssp_cubic_minus_edge(const Graph& g, Edge e,
                                               EndpointChoice choice = EndpointChoice::distinct);

}  // namespace pathsep

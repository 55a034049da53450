#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "pathsep/degenerate.hpp"
#include "pathsep/graph.hpp"
#include "pathsep/path_system.hpp"
#include "pathsep/structure.hpp"

namespace pathsep {

/// Result of re-routing a G - e system through e = uv.
struct CubicBuild {
  PathSystem system;
  Edge rerouted_edge{};
  Vertex u = 0, v = 0;
  /// Neighbours of u and v in G - e. v_neighbors is in the order used for
  /// re-routing (possibly swapped so that P1 != Q1 and P2 != Q2).
  std::array<Vertex, 2> u_neighbors{};
  std::array<Vertex, 2> v_neighbors{};
  bool swapped = false;
  /// P1, P2: paths ending at u through u1, u2. Q1, Q2: same for v.
  std::array<std::size_t, 2> p{};
  std::array<std::size_t, 2> q{};
  /// Indices of (u1, u, v, v1) and (u2, u, v, v2).
  std::array<std::size_t, 2> rerouted{};
};

/// Takes a system for H = G - uv with the shape produced by
/// build_ssp_cubic_minus_edge (the length-2 paths (u1,u,u2) and (v1,v,v2),
/// two paths ending at each of u and v) and replaces the two length-2 paths
/// by (u1,u,v,v1) and (u2,u,v,v2), swapping v1 and v2 first when P1 = Q1
/// or P2 = Q2.
CubicBuild reroute_through_edge(const Graph& g, Edge e, const PathSystem& h_system);

/// At most n paths for a connected cubic graph other than K4. The re-routed
/// edge is the smallest edge in no triangle.
CubicBuild build_ssp_cubic(const Graph& g, EndpointChoice choice = EndpointChoice::distinct);

/// Five-path strongly separating system of K4 on vertices 0..3 (ssp(K4) = 5).
std::vector<Path> k4_canned_paths();

enum class BuilderKind { none, single_edge, k4_canned, cubic, two_degenerate };
std::string_view to_string(BuilderKind b);

struct ComponentReport {
  std::vector<Vertex> vertices;
  ComponentClass classification = ComponentClass::other;
  BuilderKind builder = BuilderKind::none;
  std::size_t paths = 0;
};

struct DispatchReport {
  std::vector<ComponentReport> components;
  std::size_t n = 0;
  std::size_t k4_components = 0;
  std::size_t total_paths = 0;
};

struct DispatchBuild {
  PathSystem system;
  DispatchReport report;
};

/// Subcubic graphs: K4 components get the canned 5-path system, other cubic
/// components the re-routing construction, single edges one path, isolated
/// vertices none, everything else the 2-degenerate builder. At most n + k
/// paths, k the number of K4 components.
DispatchBuild build_ssp_subcubic(const Graph& g);

/// 2-degenerate graphs of any maximum degree; at most n paths.
DispatchBuild build_ssp_outerplanar_entry(const Graph& g);

/// Per component, first applicable of: K4 canned, cubic re-routing,
/// 2-degenerate. Throws Error(not_applicable) naming the first uncovered component.
DispatchBuild build_ssp_auto(const Graph& g);

}  // namespace pathsep

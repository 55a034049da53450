#include "pathsep/cubic.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "pathsep/error.hpp"

namespace pathsep {

namespace {

std::array<Vertex, 2> two_neighbors(const Graph& h, Vertex x) {
  const auto nb = h.neighbors(x);
  if (nb.size() != 2) throw Error(ErrorKind::precondition, fmt::format("vertex {} must have degree 2 in G - e", x));
  return {nb[0], nb[1]};
}

std::size_t center_path(const PathSystem& h, Vertex x, const std::array<Vertex, 2>& nb) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto vs = h.path(i).vertices();
    if (vs.size() == 3 && vs[1] == x && std::min(vs[0], vs[2]) == nb[0] && std::max(vs[0], vs[2]) == nb[1]) {
      if (found) throw Error(ErrorKind::precondition, fmt::format("two length-2 paths centred at {}", x));
      found = i;
    }
  }
  if (!found) throw Error(ErrorKind::precondition, fmt::format("no length-2 path centred at {}", x));
  return *found;
}

// The paths ending at x, indexed by which of x's neighbours they leave through.
std::array<std::size_t, 2> paths_leaving(const PathSystem& h, Vertex x, const std::array<Vertex, 2>& nb) {
  std::array<std::optional<std::size_t>, 2> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto vs = h.path(i).vertices();
    std::optional<Vertex> next;
    if (vs.front() == x) next = vs[1];
    else if (vs.back() == x) next = vs[vs.size() - 2];
    if (!next) continue;
    const auto slot = *next == nb[0] ? 0 : 1;
    if (out[slot]) throw Error(ErrorKind::precondition, fmt::format("two paths end at {} through {}", x, *next));
    out[slot] = i;
  }
  if (!out[0] || !out[1]) throw Error(ErrorKind::precondition, fmt::format("need a path ending at {} through each neighbour", x));
  return {*out[0], *out[1]};
}

Path relabel(const Path& p, const std::vector<Vertex>& to_parent) {
  std::vector<Vertex> vs;
  vs.reserve(p.vertex_count());
  for (const auto x : p.vertices()) vs.push_back(to_parent[x]);
  return Path(std::move(vs));
}

enum class Mode { subcubic, outerplanar, automatic };

DispatchBuild dispatch(const Graph& g, Mode mode) {
  if (mode == Mode::subcubic && g.max_degree() > 3)
    throw Error(ErrorKind::precondition, fmt::format("maximum degree {} exceeds 3", g.max_degree()));
  if (mode == Mode::outerplanar && !is_2_degenerate(g).two_degenerate)
    throw Error(ErrorKind::precondition, "graph is not 2-degenerate");

  DispatchBuild out;
  out.report.n = g.vertex_count();
  std::vector<Path> paths;
  for (const auto& comp : connected_components(g)) {
    ComponentReport rep{comp, classify_component(g, comp), BuilderKind::none, 0};
    const auto sub = induced_subgraph(g, comp);
    std::vector<Path> local;
    switch (rep.classification) {
      case ComponentClass::isolated_vertex:
        break;
      case ComponentClass::single_edge:
        rep.builder = BuilderKind::single_edge;
        local.push_back(Path{0, 1});
        break;
      case ComponentClass::k4:
        rep.builder = BuilderKind::k4_canned;
        local = k4_canned_paths();
        ++out.report.k4_components;
        break;
      case ComponentClass::cubic_non_k4: {
        rep.builder = BuilderKind::cubic;
        const auto built = build_ssp_cubic(sub.graph);
        local.assign(built.system.paths().begin(), built.system.paths().end());
        break;
      }
      case ComponentClass::subcubic_2degenerate:
      case ComponentClass::general_2degenerate: {
        rep.builder = BuilderKind::two_degenerate;
        const auto built = build_ssp_2degenerate(sub.graph);
        local.assign(built.system.paths().begin(), built.system.paths().end());
        break;
      }
      case ComponentClass::other:
        ensure(mode == Mode::automatic, "connected subcubic non-cubic components are 2-degenerate");
        throw Error(ErrorKind::not_applicable,
                    fmt::format("component containing vertex {} is neither K4, cubic, nor 2-degenerate", comp.front()));
    }
    rep.paths = local.size();
    for (const auto& p : local) paths.push_back(relabel(p, sub.to_parent));
    out.report.components.push_back(std::move(rep));
  }
  out.report.total_paths = paths.size();
  if (mode == Mode::subcubic)
    ensure(out.report.total_paths <= out.report.n + out.report.k4_components, "subcubic dispatch uses at most n + k paths");
  out.system = PathSystem(g, std::move(paths));
  return out;
}

}  // namespace

std::vector<Path> k4_canned_paths() {
  // minimum found by exact search; S(e) = {0}, {1,2}, {3,4}, {1,4}, {2,3}, {2,4}
  return {Path{0, 1}, Path{0, 2, 1}, Path{0, 2, 3, 1}, Path{0, 3, 1}, Path{0, 3, 2, 1}};
}

std::string_view to_string(BuilderKind b) {
  switch (b) {
    case BuilderKind::none: return "none";
    case BuilderKind::single_edge: return "single-edge";
    case BuilderKind::k4_canned: return "K4-canned";
    case BuilderKind::cubic: return "cubic-reroute";
    case BuilderKind::two_degenerate: return "2-degenerate";
  }
  return "?";
}

CubicBuild reroute_through_edge(const Graph& g, Edge e, const PathSystem& h_system) {
  if (!g.has_edge(e.u, e.v)) throw Error(ErrorKind::precondition, fmt::format("{} is not an edge", to_string(e)));
  if (!(h_system.graph() == without_edge(g, e)))
    throw Error(ErrorKind::precondition, "system is not over G - e");
  const auto& h = h_system.graph();

  CubicBuild out;
  out.rerouted_edge = e;
  out.u = e.u;
  out.v = e.v;
  out.u_neighbors = two_neighbors(h, out.u);
  out.v_neighbors = two_neighbors(h, out.v);
  const auto pu = center_path(h_system, out.u, out.u_neighbors);
  const auto pv = center_path(h_system, out.v, out.v_neighbors);
  out.p = paths_leaving(h_system, out.u, out.u_neighbors);
  out.q = paths_leaving(h_system, out.v, out.v_neighbors);
  // A path ending at both u and v must leave them through neighbours of
  // different index; swapping v1 and v2 fixes either collision.
  if (out.p[0] == out.q[0] || out.p[1] == out.q[1]) {
    std::swap(out.v_neighbors[0], out.v_neighbors[1]);
    std::swap(out.q[0], out.q[1]);
    out.swapped = true;
  }
  ensure(out.p[0] != out.q[0] && out.p[1] != out.q[1], "re-routing pairs P1/Q1 and P2/Q2 are distinct");

  std::vector<Path> paths(h_system.paths().begin(), h_system.paths().end());
  paths[pu] = Path{out.u_neighbors[0], out.u, out.v, out.v_neighbors[0]};
  paths[pv] = Path{out.u_neighbors[1], out.u, out.v, out.v_neighbors[1]};
  out.rerouted = {pu, pv};
  out.system = PathSystem(g, std::move(paths));

  const auto uses = [&](std::size_t i, Vertex a, Vertex b) {
    const auto id = g.edge_id(a, b);
    const auto es = out.system.path_edges(i);
    return std::find(es.begin(), es.end(), *id) != es.end();
  };
  for (std::size_t k = 0; k < 2; ++k) {
    const auto uk = out.u_neighbors[k], vk = out.v_neighbors[k];
    ensure(uses(out.p[k], out.u, uk) && !uses(out.p[k], out.v, vk) && uses(out.q[k], out.v, vk) && !uses(out.q[k], out.u, uk),
           "re-routed pair is separated by P and Q");
  }
  return out;
}

CubicBuild build_ssp_cubic(const Graph& g, EndpointChoice choice) {
  if (!is_cubic(g) || !is_connected(g)) throw Error(ErrorKind::precondition, "graph is not connected and cubic");
  if (is_k4(g)) throw Error(ErrorKind::not_applicable, "cubic construction does not apply to K4");
  const auto e = find_non_triangle_edge(g);
  ensure(e.has_value(), "a connected cubic graph other than K4 has an edge in no triangle");
  const auto lemma = build_ssp_cubic_minus_edge(g, *e, choice);
  return reroute_through_edge(g, *e, lemma.system);
}

DispatchBuild build_ssp_subcubic(const Graph& g) { return dispatch(g, Mode::subcubic); }
DispatchBuild build_ssp_outerplanar_entry(const Graph& g) { return dispatch(g, Mode::outerplanar); }
DispatchBuild build_ssp_auto(const Graph& g) { return dispatch(g, Mode::automatic); }

}  // namespace pathsep

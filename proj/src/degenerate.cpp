#include "pathsep/degenerate.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "assembler.hpp"
#include "pathsep/error.hpp"
#include "pathsep/structure.hpp"

namespace pathsep {

using detail::Assembler;

std::string_view to_string(StepCase c) {
  switch (c) {
    case StepCase::deg1_extend: return "deg1-extend";
    case StepCase::deg2_extend: return "deg2-extend";
    case StepCase::deg2_join: return "deg2-join";
  }
  return "?";
}

std::string_view to_string(BaseShape s) { return s == BaseShape::path ? "path-of-2-edges" : "triangle"; }

namespace {

StepCase step_case(RemovalKind kind) {
  switch (kind) {
    case RemovalKind::degree1_safe: return StepCase::deg1_extend;
    case RemovalKind::degree2_safe: return StepCase::deg2_extend;
    case RemovalKind::degree2_cut: return StepCase::deg2_join;
  }
  return StepCase::deg1_extend;
}

BaseShape shape_of(const Graph& g, const std::vector<Vertex>& c) {
  const int edges = g.has_edge(c[0], c[1]) + g.has_edge(c[0], c[2]) + g.has_edge(c[1], c[2]);
  if (edges == 3) return BaseShape::triangle;
  ensure(edges == 2, "3-vertex base component is connected");
  return BaseShape::path;
}

std::vector<Vertex> new_path(const TraceStep& s) {
  if (s.kind == StepCase::deg1_extend) return {s.neighbors[0], s.vertex};
  return {s.neighbors[0], s.vertex, s.neighbors[1]};
}

void check_degenerate_input(const Graph& g) {
  if (g.vertex_count() < 3) throw Error(ErrorKind::precondition, "2-degenerate builder needs n >= 3");
  if (!is_connected(g)) throw Error(ErrorKind::precondition, "graph is not connected");
  if (!is_2_degenerate(g).two_degenerate) throw Error(ErrorKind::precondition, "graph is not 2-degenerate");
}

}  // namespace

std::vector<Path> base_case_paths(const Graph& g, const std::vector<Vertex>& component) {
  auto c = component;
  std::sort(c.begin(), c.end());
  ensure(c.size() == 3, "base component has 3 vertices");
  if (shape_of(g, c) == BaseShape::triangle)
    return {Path{c[0], c[1], c[2]}, Path{c[1], c[2], c[0]}, Path{c[2], c[0], c[1]}};
  // the middle vertex is the one adjacent to both others
  const auto adjacent_to_both = [&](Vertex x) {
    return std::count_if(c.begin(), c.end(), [&](Vertex y) { return g.has_edge(x, y); }) == 2;
  };
  const auto mid = std::find_if(c.begin(), c.end(), adjacent_to_both);
  ensure(mid != c.end(), "2-edge base path has a middle vertex");
  std::vector<Vertex> ends;
  for (const auto x : c)
    if (x != *mid) ends.push_back(x);
  return {Path{ends[0], *mid, ends[1]}, Path{ends[0], *mid}, Path{*mid, ends[1]}};
}

DegenerateBuild build_ssp_2degenerate(const Graph& g) {
  check_degenerate_input(g);
  ConstructionTrace trace;
  Assembler paths(g.vertex_count());

  const auto lay_base = [&](const std::vector<Vertex>& comp) {
    trace.base_cases.push_back({comp, shape_of(g, comp)});
    for (const auto& p : base_case_paths(g, comp))
      paths.add(std::vector<Vertex>(p.vertices().begin(), p.vertices().end()));
  };

  if (g.vertex_count() == 3) {
    lay_base({0, 1, 2});
  } else {
    const auto plan = removal_plan_2degenerate(g);
    for (const auto& comp : plan.base_components) lay_base(comp);

    for (auto it = plan.steps.rbegin(); it != plan.steps.rend(); ++it) {
      TraceStep step{it->vertex, step_case(it->kind), it->neighbors, {}, {}};
      const auto v = step.vertex;
      if (step.kind == StepCase::deg1_extend) {
        const auto u = step.neighbors[0];
        const auto pu = paths.lowest_ending_at(u);
        ensure(pu.has_value(), fmt::format("a path ends at {}", u));
        paths.extend(*pu, u, v);
        step.paths_modified = {*pu};
      } else {
        const auto u = step.neighbors[0], w = step.neighbors[1];
        const auto pu = paths.lowest_ending_at(u);
        ensure(pu.has_value(), fmt::format("a path ends at {}", u));
        const auto pw = paths.lowest_ending_at(w, *pu);
        ensure(pw.has_value(), fmt::format("a second path ends at {}", w));
        paths.extend(*pu, u, v);
        paths.extend(*pw, w, v);
        step.paths_modified = {*pu, *pw};
      }
      step.paths_added = {paths.add(new_path(step))};
      trace.steps.push_back(std::move(step));
    }
  }

  ensure(paths.size() == g.vertex_count(), "builder emits exactly n paths");
  return {PathSystem(g, std::move(paths).finish()), std::move(trace)};
}

PathSystem replay_trace(const Graph& g, const ConstructionTrace& trace) {
  Assembler paths(g.vertex_count());
  for (const auto& base : trace.base_cases)
    for (const auto& p : base_case_paths(g, base.component))
      paths.add(std::vector<Vertex>(p.vertices().begin(), p.vertices().end()));
  for (const auto& step : trace.steps) {
    const auto arity = step.kind == StepCase::deg1_extend ? 1u : 2u;
    if (step.neighbors.size() != arity || step.paths_modified.size() != arity || step.paths_added.size() != 1)
      throw Error(ErrorKind::parse, fmt::format("malformed trace step at vertex {}", step.vertex));
    for (std::size_t i = 0; i < arity; ++i) paths.extend(step.paths_modified[i], step.neighbors[i], step.vertex);
    const auto added = paths.add(new_path(step));
    if (added != step.paths_added[0])
      throw Error(ErrorKind::parse, fmt::format("trace step at vertex {} adds path {}, recorded {}", step.vertex,
                                                added, step.paths_added[0]));
  }
  return PathSystem(g, std::move(paths).finish());
}

nlohmann::json to_json(const ConstructionTrace& trace) {
  nlohmann::json doc;
  doc["base_cases"] = nlohmann::json::array();
  for (const auto& b : trace.base_cases)
    doc["base_cases"].push_back({{"component", b.component}, {"shape", to_string(b.shape)}});
  doc["steps"] = nlohmann::json::array();
  for (const auto& s : trace.steps)
    doc["steps"].push_back({{"vertex", s.vertex},
                            {"case", to_string(s.kind)},
                            {"neighbors", s.neighbors},
                            {"paths_modified", s.paths_modified},
                            {"paths_added", s.paths_added}});
  return doc;
}

ConstructionTrace trace_from_json(const nlohmann::json& doc) {
  ConstructionTrace trace;
  try {
    for (const auto& b : doc.at("base_cases")) {
      const auto shape = b.at("shape").get<std::string>();
      if (shape != "triangle" && shape != "path-of-2-edges")
        throw Error(ErrorKind::parse, "unknown base-case shape '" + shape + "'");
      trace.base_cases.push_back(
          {b.at("component").get<std::vector<Vertex>>(), shape == "triangle" ? BaseShape::triangle : BaseShape::path});
    }
    for (const auto& s : doc.at("steps")) {
      TraceStep step;
      step.vertex = s.at("vertex").get<Vertex>();
      const auto kind = s.at("case").get<std::string>();
      if (kind == "deg1-extend") step.kind = StepCase::deg1_extend;
      else if (kind == "deg2-extend") step.kind = StepCase::deg2_extend;
      else if (kind == "deg2-join") step.kind = StepCase::deg2_join;
      else throw Error(ErrorKind::parse, "unknown step case '" + kind + "'");
      step.neighbors = s.at("neighbors").get<std::vector<Vertex>>();
      step.paths_modified = s.at("paths_modified").get<std::vector<std::size_t>>();
      step.paths_added = s.at("paths_added").get<std::vector<std::size_t>>();
      trace.steps.push_back(std::move(step));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("trace JSON: ") + e.what());
  }
  return trace;
}

CubicMinusEdgeBuild build_ssp_cubic_minus_edge(const Graph& g, Edge e, EndpointChoice choice) {
  if (!is_cubic(g) || !is_connected(g)) throw Error(ErrorKind::precondition, "graph is not connected and cubic");
  if (is_k4(g)) throw Error(ErrorKind::not_applicable, "K4: every edge lies in a triangle");
  if (!g.has_edge(e.u, e.v)) throw Error(ErrorKind::precondition, fmt::format("{} is not an edge", to_string(e)));

  CubicMinusEdgeBuild out;
  out.u = e.u;
  out.v = e.v;
  const auto other = [&](Vertex x, Vertex skip) {
    std::array<Vertex, 2> nb{};
    std::size_t k = 0;
    for (const auto y : g.neighbors(x))
      if (y != skip) nb[k++] = y;
    return nb;
  };
  out.u_neighbors = other(out.u, out.v);
  out.v_neighbors = other(out.v, out.u);
  for (const auto a : out.u_neighbors)
    for (const auto b : out.v_neighbors)
      if (a == b) throw Error(ErrorKind::precondition, fmt::format("edge {} lies in a triangle", to_string(e)));

  std::vector<Vertex> rest;
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (x != out.u && x != out.v) rest.push_back(x);
  const auto reduced = induced_subgraph(g, rest);

  Assembler paths(g.vertex_count());
  for (const auto& comp : connected_components(reduced.graph)) {
    ensure(comp.size() >= 3, "every component of G - {u, v} has at least 3 vertices");
    const auto piece = induced_subgraph(reduced.graph, comp);
    const auto built = build_ssp_2degenerate(piece.graph);
    for (const auto& p : built.system.paths()) {
      std::vector<Vertex> global;
      for (const auto x : p.vertices()) global.push_back(reduced.to_parent[piece.to_parent[x]]);
      paths.add(std::move(global));
    }
  }

  const std::array<Vertex, 4> targets{out.u_neighbors[0], out.u_neighbors[1], out.v_neighbors[0],
                                      out.v_neighbors[1]};
  std::array<std::size_t, 4> chosen{};
  if (choice == EndpointChoice::distinct) {
    std::array<std::vector<std::size_t>, 4> cands;
    for (std::size_t k = 0; k < 4; ++k) {
      cands[k] = paths.ending_at(targets[k]);
      std::sort(cands[k].begin(), cands[k].end());
      ensure(cands[k].size() == 2, fmt::format("two paths end at {}", targets[k]));
    }
    bool found = false;
    for (unsigned mask = 0; mask < 16 && !found; ++mask) {
      for (std::size_t k = 0; k < 4; ++k) chosen[k] = cands[k][(mask >> (3 - k)) & 1u];
      auto sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      found = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    ensure(found, "four distinct paths end at u1, u2, v1, v2");
  } else {
    for (std::size_t k = 0; k < 4; k += 2) {
      const auto first = paths.lowest_ending_at(targets[k]);
      ensure(first.has_value(), fmt::format("a path ends at {}", targets[k]));
      const auto second = paths.lowest_ending_at(targets[k + 1], *first);
      ensure(second.has_value(), fmt::format("a second path ends at {}", targets[k + 1]));
      chosen[k] = *first;
      chosen[k + 1] = *second;
    }
  }

  for (std::size_t k = 0; k < 4; ++k) paths.extend(chosen[k], targets[k], k < 2 ? out.u : out.v);
  out.u_extended = {chosen[0], chosen[1]};
  out.v_extended = {chosen[2], chosen[3]};
  out.u_center_path = paths.add({out.u_neighbors[0], out.u, out.u_neighbors[1]});
  out.v_center_path = paths.add({out.v_neighbors[0], out.v, out.v_neighbors[1]});
  ensure(paths.size() <= g.vertex_count(), "at most n paths");
  out.system = PathSystem(without_edge(g, e), std::move(paths).finish());
  return out;
}

}  // namespace pathsep

#include "pathsep/structure.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "pathsep/error.hpp"

namespace pathsep {

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    auto& comp = comps.emplace_back();
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (const auto y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

DegeneracyResult is_2_degenerate(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  DegeneracyResult result;
  result.order.reserve(n);
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    if (d >= 3) {
      result.order.clear();
      return result;
    }
    queue.erase(queue.begin());
    result.order.push_back(v);
    deg[v] = 0;
    for (const auto w : g.neighbors(v)) {
      if (auto it = queue.find({deg[w], w}); it != queue.end()) {
        queue.erase(it);
        queue.emplace(--deg[w], w);
      }
    }
  }
  result.two_degenerate = true;
  return result;
}

std::string_view to_string(RemovalKind kind) {
  switch (kind) {
    case RemovalKind::degree1_safe: return "degree1-safe";
    case RemovalKind::degree2_safe: return "degree2-safe";
    case RemovalKind::degree2_cut: return "degree2-cut";
  }
  return "?";
}

namespace {

// Working copy of a graph under vertex deletion.
class Peeler {
 public:
  explicit Peeler(const Graph& g) : g_(g), alive_(g.vertex_count(), 1), mark_(g.vertex_count(), 0) {
    deg_.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) deg_[v] = g.degree(v);
  }

  std::size_t degree(Vertex v) const { return deg_[v]; }

  std::vector<Vertex> live_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const auto w : g_.neighbors(v))
      if (alive_[w]) out.push_back(w);
    return out;
  }

  void remove(Vertex v) {
    alive_[v] = 0;
    for (const auto w : g_.neighbors(v))
      if (alive_[w]) --deg_[w];
  }
  void restore(Vertex v) {
    alive_[v] = 1;
    for (const auto w : g_.neighbors(v))
      if (alive_[w]) ++deg_[w];
  }

  // Live vertices reachable from s, sorted.
  std::vector<Vertex> reach(Vertex s) {
    ++stamp_;
    std::vector<Vertex> out{s}, stack{s};
    mark_[s] = stamp_;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (const auto y : g_.neighbors(x))
        if (alive_[y] && mark_[y] != stamp_) {
          mark_[y] = stamp_;
          out.push_back(y);
          stack.push_back(y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const Graph& g_;
  std::vector<char> alive_;
  std::vector<std::size_t> deg_;
  std::vector<unsigned> mark_;
  unsigned stamp_ = 0;
};

}  // namespace

VertexRemovalPlan removal_plan_2degenerate(const Graph& g) {
  if (g.vertex_count() < 4)
    throw Error(ErrorKind::precondition, "removal plan needs at least 4 vertices");
  if (!is_connected(g)) throw Error(ErrorKind::precondition, "graph is not connected");
  if (!is_2_degenerate(g).two_degenerate) throw Error(ErrorKind::precondition, "graph is not 2-degenerate");

  Peeler peeler(g);
  VertexRemovalPlan plan;
  std::vector<std::vector<Vertex>> pending;
  {
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    pending.push_back(std::move(all));
  }

  while (!pending.empty()) {
    auto comp = std::move(pending.back());
    pending.pop_back();
    if (comp.size() == 3) {
      plan.base_components.push_back(std::move(comp));
      continue;
    }
    ensure(comp.size() >= 4, "peeled component has at least 3 vertices");

    std::optional<Vertex> pick;
    RemovalKind kind = RemovalKind::degree1_safe;
    for (const auto v : comp)
      if (peeler.degree(v) == 1) {
        pick = v;
        break;
      }
    if (!pick) {
      // per-candidate connectivity test, O(n + m) each
      for (const auto v : comp) {
        if (peeler.degree(v) != 2) continue;
        peeler.remove(v);
        const auto reached = peeler.reach(peeler.live_neighbors(v).front());
        peeler.restore(v);
        if (reached.size() + 1 == comp.size()) {
          pick = v;
          kind = RemovalKind::degree2_safe;
          break;
        }
      }
    }
    if (!pick) {
      for (const auto v : comp)
        if (peeler.degree(v) == 2) {
          pick = v;
          kind = RemovalKind::degree2_cut;
          break;
        }
    }
    if (!pick)
      throw Error(ErrorKind::precondition, "graph is not 2-degenerate (no vertex of degree <= 2)");

    const auto v = *pick;
    RemovalStep step{v, kind, peeler.live_neighbors(v), {}};
    peeler.remove(v);
    std::vector<Vertex> rest;
    rest.reserve(comp.size() - 1);
    for (const auto x : comp)
      if (x != v) rest.push_back(x);

    if (kind == RemovalKind::degree2_cut) {
      auto first = peeler.reach(step.neighbors[0]);
      auto second = peeler.reach(step.neighbors[1]);
      ensure(first.front() != second.front(), "cut vertex separates its neighbours");
      ensure(first.size() + second.size() == rest.size(), "cut yields exactly two components");
      ensure(first.size() >= 3 && second.size() >= 3, "both sides of a cut have at least 3 vertices");
      if (second.front() < first.front()) std::swap(first, second);
      step.sides = {first, second};
      pending.push_back(std::move(second));
      pending.push_back(std::move(first));
    } else {
      pending.push_back(std::move(rest));
    }
    plan.steps.push_back(std::move(step));
  }

  std::sort(plan.base_components.begin(), plan.base_components.end());
  return plan;
}

std::optional<Edge> find_non_triangle_edge(const Graph& g) {
  for (const auto& e : g.edges()) {
    const auto a = g.neighbors(e.u);
    const auto b = g.neighbors(e.v);
    bool common = false;
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
      if (a[i] == b[j]) {
        common = true;
        break;
      }
      a[i] < b[j] ? ++i : ++j;
    }
    if (!common) return e;
  }
  return std::nullopt;
}

std::string_view to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::isolated_vertex: return "isolated-vertex";
    case ComponentClass::single_edge: return "single-edge";
    case ComponentClass::k4: return "K4";
    case ComponentClass::cubic_non_k4: return "cubic-non-K4";
    case ComponentClass::subcubic_2degenerate: return "subcubic-2degenerate";
    case ComponentClass::general_2degenerate: return "general-2degenerate";
    case ComponentClass::other: return "other";
  }
  return "?";
}

bool is_cubic(const Graph& g) {
  return g.vertex_count() > 0 && g.min_degree() == 3 && g.max_degree() == 3;
}

bool is_k4(const Graph& g) { return g.vertex_count() == 4 && g.edge_count() == 6; }

ComponentClass classify_component(const Graph& g, const std::vector<Vertex>& component) {
  if (component.size() == 1) return ComponentClass::isolated_vertex;
  if (component.size() == 2) return ComponentClass::single_edge;
  const auto sub = induced_subgraph(g, component);
  if (is_k4(sub.graph)) return ComponentClass::k4;
  if (is_cubic(sub.graph)) return ComponentClass::cubic_non_k4;
  if (is_2_degenerate(sub.graph).two_degenerate)
    return sub.graph.max_degree() <= 3 ? ComponentClass::subcubic_2degenerate
                                       : ComponentClass::general_2degenerate;
  return ComponentClass::other;
}

}  // namespace pathsep

#pragma once

// Reference oracles for tests. Each one works from definitions on plain
// vertex sequences and shares no code with the library routine it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "pathsep/graph.hpp"
#include "pathsep/path_system.hpp"

namespace testing_support {

using pathsep::Graph;
using pathsep::Vertex;
using Seq = std::vector<Vertex>;
using VPair = std::pair<Vertex, Vertex>;

inline Graph make_graph(std::size_t n, std::initializer_list<VPair> edges) {
  std::vector<pathsep::Edge> es;
  for (const auto& [a, b] : edges) es.push_back(pathsep::make_edge(a, b));
  return Graph(n, std::move(es));
}

// Two copies of {w,a,b,c,d} with edges wa wb ac ad bc bd cd, joined through
// vertex 10 adjacent to both w's. Vertex 10 is the only vertex of degree <= 2
// and it is a cut vertex, so any removal plan must start with a cut.
inline Graph forced_cut_graph() {
  return make_graph(11, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                         {5, 6}, {5, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9},
                         {10, 0}, {10, 5}});
}

inline std::vector<Seq> sequences(const pathsep::PathSystem& sys) {
  std::vector<Seq> out;
  for (const auto& p : sys.paths()) out.emplace_back(p.vertices().begin(), p.vertices().end());
  return out;
}

inline std::vector<VPair> edge_pairs(const Graph& g) {
  std::vector<VPair> out;
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    for (const auto y : g.neighbors(x))
      if (x < y) out.emplace_back(x, y);
  return out;
}

inline bool walks_edge(const Seq& path, VPair e) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if ((path[i] == e.first && path[i + 1] == e.second) || (path[i] == e.second && path[i + 1] == e.first)) return true;
  return false;
}

// For every ordered pair (e, f) of distinct edges some path walks e and not f,
// and every edge is walked by some path.
inline bool literal_separates(const Graph& g, const std::vector<Seq>& paths) {
  const auto es = edge_pairs(g);
  for (const auto& e : es) {
    if (std::none_of(paths.begin(), paths.end(), [&](const Seq& p) { return walks_edge(p, e); })) return false;
    for (const auto& f : es) {
      if (e == f) continue;
      const bool ok =
          std::any_of(paths.begin(), paths.end(), [&](const Seq& p) { return walks_edge(p, e) && !walks_edge(p, f); });
      if (!ok) return false;
    }
  }
  return true;
}

// Same definition through explicit incidence sets: each S(e) non-empty and no
// S(e) contained in another S(f). Quadratic in m, linear in total path length.
inline bool incidence_sets_separate(const Graph& g, const std::vector<Seq>& paths) {
  std::map<VPair, std::set<std::size_t>> s;
  for (const auto& e : edge_pairs(g)) s[e];
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = 0; j + 1 < paths[i].size(); ++j) {
      const auto a = paths[i][j], b = paths[i][j + 1];
      const auto it = s.find(a < b ? VPair{a, b} : VPair{b, a});
      if (it == s.end()) return false;
      it->second.insert(i);
    }
  for (const auto& [e, se] : s) {
    if (se.empty()) return false;
    for (const auto& [f, sf] : s)
      if (e != f && std::includes(sf.begin(), sf.end(), se.begin(), se.end())) return false;
  }
  return true;
}

// Repeatedly deletes any vertex of degree <= 2; 2-degenerate iff this empties the graph.
inline bool peels_to_empty(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<bool> gone(n, false);
  for (std::size_t left = n; left > 0; --left) {
    bool found = false;
    for (Vertex x = 0; x < n && !found; ++x) {
      if (gone[x]) continue;
      std::size_t d = 0;
      for (const auto y : g.neighbors(x)) d += !gone[y];
      if (d <= 2) gone[x] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

// Every non-empty vertex subset induces a subgraph with a vertex of degree <= 2.
inline bool brute_force_2degenerate(const Graph& g) {
  const auto n = g.vertex_count();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool has_low = false;
    for (Vertex x = 0; x < n && !has_low; ++x) {
      if (!(mask >> x & 1u)) continue;
      int d = 0;
      for (const auto y : g.neighbors(x)) d += mask >> y & 1u;
      has_low = d <= 2;
    }
    if (!has_low) return false;
  }
  return true;
}

// Simple paths with at least one edge, one orientation each (first < last).
inline std::vector<Seq> all_simple_paths(const Graph& g) {
  std::vector<Seq> out;
  Seq cur;
  std::vector<bool> used(g.vertex_count(), false);
  std::function<void(Vertex)> go = [&](Vertex x) {
    if (cur.size() >= 2 && cur.front() < cur.back()) out.push_back(cur);
    for (const auto y : g.neighbors(x)) {
      if (used[y]) continue;
      used[y] = true;
      cur.push_back(y);
      go(y);
      cur.pop_back();
      used[y] = false;
    }
  };
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    used[s] = true;
    cur = {s};
    go(s);
    used[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Smallest k such that some k-subset of all simple paths is separating; plain
// subset enumeration, feasible only for a few dozen paths.
inline std::size_t brute_force_ssp(const Graph& g) {
  const auto all = all_simple_paths(g);
  for (std::size_t k = 1; k <= all.size(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<Seq> pick;
      for (const auto i : idx) pick.push_back(all[i]);
      if (literal_separates(g, pick)) return k;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == all.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return all.size();
}

inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Least k >= 1 with C(k, floor(k/2)) >= m (the sets must be non-empty).
inline std::size_t sperner_bound(std::size_t m) {
  std::size_t k = 1;
  while (binom(k, k / 2) < m) ++k;
  return k;
}

// Injective into {0..a} and consecutive differences exactly {1..a}.
inline bool is_graceful(const std::vector<std::int64_t>& lab) {
  const auto a = static_cast<std::int64_t>(lab.size()) - 1;
  if (a < 1) return false;
  std::set<std::int64_t> seen(lab.begin(), lab.end()), diffs;
  if (static_cast<std::int64_t>(seen.size()) != a + 1 || *seen.begin() < 0 || *seen.rbegin() > a) return false;
  for (std::int64_t i = 0; i < a; ++i) diffs.insert(lab[i + 1] > lab[i] ? lab[i + 1] - lab[i] : lab[i] - lab[i + 1]);
  return static_cast<std::int64_t>(diffs.size()) == a && *diffs.begin() == 1 && *diffs.rbegin() == a;
}

// Paths that, by the closed form, contain u_i v_j in the K_{a,b} construction.
inline std::set<std::size_t> closed_form_members(const std::vector<std::int64_t>& phi, std::int64_t b, std::int64_t i,
                                                 std::int64_t j) {
  const auto mod = [b](std::int64_t x) { return static_cast<std::size_t>(((x % b) + b) % b); };
  return {mod(j - phi[i]), mod(j - phi[i + 1])};
}

// Random self-avoiding walks; used to generate systems of mixed quality.
inline std::vector<Seq> random_paths(const Graph& g, std::size_t count, std::mt19937_64& rng) {
  std::vector<Seq> out;
  const auto es = edge_pairs(g);
  while (out.size() < count && !es.empty()) {
    const auto e = es[rng() % es.size()];
    Seq p{e.first, e.second};
    const auto target = 1 + rng() % g.vertex_count();
    while (p.size() <= target) {
      std::vector<Vertex> next;
      for (const auto y : g.neighbors(p.back()))
        if (std::find(p.begin(), p.end(), y) == p.end()) next.push_back(y);
      if (next.empty()) break;
      p.push_back(next[rng() % next.size()]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace testing_support

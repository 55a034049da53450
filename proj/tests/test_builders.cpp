#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "pathsep/cubic.hpp"
#include "pathsep/degenerate.hpp"
#include "pathsep/error.hpp"
#include "pathsep/generators.hpp"
#include "pathsep/oracle.hpp"
#include "pathsep/structure.hpp"
#include "support.hpp"

using namespace pathsep;
using testing_support::make_graph;

namespace {

std::vector<Path> canon(std::vector<Path> ps) {
  for (auto& p : ps) p = p.canonical();
  std::sort(ps.begin(), ps.end());
  return ps;
}

std::vector<Path> paths_of(const PathSystem& s) { return {s.paths().begin(), s.paths().end()}; }

bool uses(const Path& p, Vertex a, Vertex b) {
  return testing_support::walks_edge(testing_support::Seq(p.vertices().begin(), p.vertices().end()), {a, b});
}

void check_degenerate_output(const Graph& g, const PathSystem& sys) {
  CHECK(sys.size() == g.vertex_count());
  CHECK(testing_support::literal_separates(g, testing_support::sequences(sys)));
  const auto prof = incidence_profile(sys);
  CHECK(prof.edges_in_exactly(2) == g.edge_count());
  std::vector<std::size_t> ends(g.vertex_count(), 0);
  std::size_t lengths = 0;
  for (const auto& p : sys.paths()) {
    ++ends[p.front()];
    ++ends[p.back()];
    lengths += p.edge_count();
  }
  CHECK(std::all_of(ends.begin(), ends.end(), [](std::size_t c) { return c == 2; }));
  CHECK(lengths == 2 * g.edge_count());
}

// Replays the first k steps and checks the partial system on the vertices
// present so far, plus the local separation of the step's new edges.
void check_stepwise(const Graph& g, const ConstructionTrace& trace) {
  std::vector<Vertex> present;
  for (const auto& base : trace.base_cases) present.insert(present.end(), base.component.begin(), base.component.end());
  for (std::size_t k = 0; k <= trace.steps.size(); ++k) {
    if (k > 0) present.push_back(trace.steps[k - 1].vertex);
    ConstructionTrace prefix{trace.base_cases, {trace.steps.begin(), trace.steps.begin() + static_cast<std::ptrdiff_t>(k)}};
    const auto partial = replay_trace(g, prefix);
    auto sorted = present;
    std::sort(sorted.begin(), sorted.end());
    const auto sub = induced_subgraph(g, sorted);
    std::map<Vertex, Vertex> local;
    for (Vertex i = 0; i < sub.to_parent.size(); ++i) local[sub.to_parent[i]] = i;
    std::vector<Path> mapped;
    for (const auto& p : partial.paths()) {
      std::vector<Vertex> vs;
      for (const auto x : p.vertices()) vs.push_back(local.at(x));
      mapped.emplace_back(std::move(vs));
    }
    const PathSystem sys(sub.graph, mapped);
    CHECK(verify_strong_separation(sys).pass());
    CHECK(incidence_profile(sys).edges_in_exactly(2) == sub.graph.edge_count());
    if (k == 0) continue;
    const auto& step = trace.steps[k - 1];
    const auto v = step.vertex;
    if (step.kind == StepCase::deg1_extend) {
      REQUIRE(step.paths_modified.size() == 1);
      CHECK(uses(partial.path(step.paths_modified[0]), step.neighbors[0], v));
      CHECK(partial.path(step.paths_added[0]) == Path{step.neighbors[0], v});
    } else {
      const auto u = step.neighbors[0], w = step.neighbors[1];
      REQUIRE(step.paths_modified.size() == 2);
      const auto& p1 = partial.path(step.paths_modified[0]);
      const auto& p2 = partial.path(step.paths_modified[1]);
      CHECK(uses(p1, u, v));
      CHECK_FALSE(uses(p1, v, w));
      CHECK(uses(p2, v, w));
      CHECK_FALSE(uses(p2, u, v));
      CHECK(partial.path(step.paths_added[0]) == Path{u, v, w});
    }
  }
}

}  // namespace

TEST_CASE("degenerate: base cases are exact") {
  const auto p = build_ssp_2degenerate(path_graph(3));
  CHECK(canon(paths_of(p.system)) == canon({Path{0, 1, 2}, Path{0, 1}, Path{1, 2}}));
  const auto t = build_ssp_2degenerate(complete_graph(3));
  CHECK(canon(paths_of(t.system)) == canon({Path{0, 1, 2}, Path{1, 2, 0}, Path{2, 0, 1}}));
  CHECK(t.trace.base_cases.size() == 1);
  CHECK(t.trace.base_cases[0].shape == BaseShape::triangle);
  CHECK(p.trace.base_cases[0].shape == BaseShape::path);
  CHECK(base_case_paths(path_graph(3), {0, 1, 2}) == std::vector<Path>{Path{0, 1, 2}, Path{0, 1}, Path{1, 2}});
}

TEST_CASE("degenerate: preconditions") {
  CHECK_THROWS_AS(build_ssp_2degenerate(path_graph(2)), Error);
  CHECK_THROWS_AS(build_ssp_2degenerate(make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}})), Error);
  CHECK_THROWS_AS(build_ssp_2degenerate(complete_graph(4)), Error);
}

TEST_CASE("degenerate: random graphs give n paths with both properties") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto g = random_two_degenerate(3 + seed % 60, seed);
    const auto built = build_ssp_2degenerate(g);
    check_degenerate_output(g, built.system);
    CHECK(verify_structural_properties(built.system).pass);
  }
}

TEST_CASE("degenerate: cut case and named shapes") {
  const auto cut = testing_support::forced_cut_graph();
  const auto built = build_ssp_2degenerate(cut);
  check_degenerate_output(cut, built.system);
  REQUIRE_FALSE(built.trace.steps.empty());
  CHECK(built.trace.steps.back().kind == StepCase::deg2_join);
  CHECK(built.trace.steps.back().vertex == 10);
  CHECK(built.trace.base_cases.size() == 2);
  check_stepwise(cut, built.trace);
  for (const auto& g : {cycle_graph(5), fan_graph(5), path_graph(7), make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})}) {
    const auto b = build_ssp_2degenerate(g);
    check_degenerate_output(g, b.system);
    check_stepwise(g, b.trace);
  }
}

TEST_CASE("degenerate: trace replay, per-step checks, JSON round-trip, determinism") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_two_degenerate(4 + seed, seed);
    const auto built = build_ssp_2degenerate(g);
    CHECK(paths_of(replay_trace(g, built.trace)) == paths_of(built.system));
    const auto again = build_ssp_2degenerate(g);
    CHECK(paths_of(again.system) == paths_of(built.system));
    const auto restored = trace_from_json(to_json(built.trace));
    CHECK(paths_of(replay_trace(g, restored)) == paths_of(built.system));
    CHECK(to_json(restored) == to_json(built.trace));
    check_stepwise(g, built.trace);
  }
  const auto doc = to_json(build_ssp_2degenerate(path_graph(4)).trace);
  CHECK(doc.contains("steps"));
  CHECK(doc.contains("base_cases"));
  CHECK(doc["steps"][0]["case"] == "deg1-extend");
  CHECK(doc["base_cases"][0]["shape"] == "path-of-2-edges");
  CHECK_THROWS_AS(trace_from_json(nlohmann::json::parse(R"({"steps": 3})")), Error);
  auto bad = doc;
  bad["steps"][0]["case"] = "sideways";
  CHECK_THROWS_AS(trace_from_json(bad), Error);
}

TEST_CASE("cubic minus edge: documented examples") {
  const auto k33 = complete_bipartite(3, 3);
  for (const auto& e : k33.edges()) {
    const auto b = build_ssp_cubic_minus_edge(k33, e);
    const auto h = without_edge(k33, e);
    CHECK(b.system.graph() == h);
    CHECK(b.system.size() <= 6);
    CHECK(verify_strong_separation(b.system).pass());
    CHECK(b.system.path(b.u_center_path) == Path{b.u_neighbors[0], b.u, b.u_neighbors[1]});
    CHECK(b.system.path(b.v_center_path) == Path{b.v_neighbors[0], b.v, b.v_neighbors[1]});
  }
  const auto prism = triangular_prism();
  const auto pb = build_ssp_cubic_minus_edge(prism, Edge{1, 4});
  CHECK(pb.system.size() <= 6);
  CHECK(verify_strong_separation(pb.system).pass());
  CHECK_THROWS_AS(build_ssp_cubic_minus_edge(complete_graph(4), Edge{0, 1}), Error);
  CHECK_THROWS_AS(build_ssp_cubic_minus_edge(prism, Edge{0, 1}), Error);
  CHECK_THROWS_AS(build_ssp_cubic_minus_edge(cycle_graph(6), Edge{0, 1}), Error);
  CHECK_THROWS_AS(build_ssp_cubic_minus_edge(k33, Edge{0, 1}), Error);
}

TEST_CASE("cubic minus edge: both properties and distinct extended paths") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_cubic(6 + 2 * (seed % 10), seed);
    if (is_k4(g)) continue;
    const auto e = find_non_triangle_edge(g);
    REQUIRE(e.has_value());
    for (const auto choice : {EndpointChoice::distinct, EndpointChoice::lowest_index}) {
      const auto b = build_ssp_cubic_minus_edge(g, *e, choice);
      const auto& h = b.system.graph();
      CHECK(b.system.size() <= g.vertex_count());
      CHECK(testing_support::literal_separates(h, testing_support::sequences(b.system)));
      CHECK(verify_structural_properties(b.system).pass);
      CHECK(b.u_extended[0] != b.u_extended[1]);
      CHECK(b.v_extended[0] != b.v_extended[1]);
      if (choice == EndpointChoice::distinct) {
        std::set<std::size_t> four{b.u_extended[0], b.u_extended[1], b.v_extended[0], b.v_extended[1]};
        CHECK(four.size() == 4);
      }
    }
  }
}

TEST_CASE("cubic: documented examples with the re-routed paths present") {
  for (const auto& name : {"k33", "prism", "cube", "petersen"}) {
    const auto g = named_graph(name);
    const auto b = build_ssp_cubic(g);
    CHECK(b.system.size() <= g.vertex_count());
    CHECK(testing_support::literal_separates(g, testing_support::sequences(b.system)));
    CHECK(b.system.path(b.rerouted[0]) == Path{b.u_neighbors[0], b.u, b.v, b.v_neighbors[0]});
    CHECK(b.system.path(b.rerouted[1]) == Path{b.u_neighbors[1], b.u, b.v, b.v_neighbors[1]});
  }
  CHECK_THROWS_AS(build_ssp_cubic(complete_graph(4)), Error);
  try {
    build_ssp_cubic(complete_graph(4));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_applicable);
  }
  CHECK_THROWS_AS(build_ssp_cubic(cycle_graph(5)), Error);
  CHECK_THROWS_AS(build_ssp_cubic(disjoint_union(complete_bipartite(3, 3), triangular_prism())), Error);
}

TEST_CASE("cubic: re-routing only changes the two pairs it targets") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_cubic(6 + 2 * (seed % 6), seed);
    if (is_k4(g)) continue;
    const auto e = *find_non_triangle_edge(g);
    const auto lemma = build_ssp_cubic_minus_edge(g, e);
    const auto b = reroute_through_edge(g, e, lemma.system);
    CHECK(verify_strong_separation(b.system).pass());
    CHECK(b.p[0] != b.q[0]);
    CHECK(b.p[1] != b.q[1]);
    // separation of {uu_k, vv_k} by P_k and Q_k
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(uses(b.system.path(b.p[k]), b.u, b.u_neighbors[k]));
      CHECK_FALSE(uses(b.system.path(b.p[k]), b.v, b.v_neighbors[k]));
      CHECK(uses(b.system.path(b.q[k]), b.v, b.v_neighbors[k]));
      CHECK_FALSE(uses(b.system.path(b.q[k]), b.u, b.u_neighbors[k]));
    }
    // pairs of H-edges: separated in H implies separated in G
    const auto& h = lemma.system.graph();
    const auto hp = incidence_profile(lemma.system);
    const auto gp = incidence_profile(b.system);
    std::size_t changed = 0;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      const auto gi = *g.edge_id(h.edge(i).u, h.edge(i).v);
      if (hp.sets[i] != gp.sets[gi]) ++changed;
    }
    // only the four edges at u and v move between paths
    CHECK(changed <= 4);
  }
}

TEST_CASE("cubic: swap branch under the greedy endpoint choice") {
  std::size_t swaps = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_cubic(6 + 2 * (seed % 4), seed);
    if (is_k4(g)) continue;
    const auto b = build_ssp_cubic(g, EndpointChoice::lowest_index);
    CHECK(verify_strong_separation(b.system).pass());
    CHECK(b.system.size() <= g.vertex_count());
    swaps += b.swapped;
    CHECK_FALSE(build_ssp_cubic(g, EndpointChoice::distinct).swapped);
  }
  CHECK(swaps > 0);
}

TEST_CASE("cubic: canned K4 system is minimum and re-derived by search") {
  const auto k4 = complete_graph(4);
  const PathSystem canned(k4, k4_canned_paths());
  CHECK(canned.size() == 5);
  CHECK(testing_support::literal_separates(k4, testing_support::sequences(canned)));
  const auto r = exact_ssp(k4);
  REQUIRE(r.conclusive);
  CHECK(r.lower == 5);
  CHECK(canon(paths_of(r.witness)) == canon(k4_canned_paths()));
}

TEST_CASE("subcubic dispatch: documented examples") {
  const auto two_k4 = disjoint_union(complete_graph(4), complete_graph(4));
  const auto d = build_ssp_subcubic(two_k4);
  CHECK(d.system.size() == 10);
  CHECK(d.report.k4_components == 2);
  CHECK(d.report.n == 8);
  CHECK(verify_strong_separation(d.system).pass());

  const auto c5 = build_ssp_subcubic(cycle_graph(5));
  CHECK(c5.system.size() == 5);
  CHECK(verify_strong_separation(c5.system).pass());

  const auto k4_edge = disjoint_union(complete_graph(4), path_graph(2));
  const auto ke = build_ssp_subcubic(k4_edge);
  CHECK(ke.system.size() == 6);
  CHECK(verify_strong_separation(ke.system).pass());
  REQUIRE(ke.report.components.size() == 2);
  CHECK(ke.report.components[0].builder == BuilderKind::k4_canned);
  CHECK(ke.report.components[1].builder == BuilderKind::single_edge);

  CHECK_THROWS_AS(build_ssp_subcubic(complete_graph(5)), Error);
}

TEST_CASE("subcubic dispatch: totals on mixed random inputs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_cubic(8 + 2 * (seed % 3), seed);
    if (seed % 2) g = disjoint_union(g, complete_graph(4));
    if (seed % 3 == 0) g = disjoint_union(g, Graph(1));
    auto h = random_cubic(10, seed + 100);
    g = disjoint_union(g, without_edge(h, h.edge(0)));
    const auto d = build_ssp_subcubic(g);
    CHECK(verify_strong_separation(d.system).pass());
    std::size_t sum = 0, isolated = 0;
    for (const auto& c : d.report.components) {
      sum += c.paths;
      isolated += c.classification == ComponentClass::isolated_vertex;
    }
    CHECK(sum == d.report.total_paths);
    CHECK(d.report.total_paths == d.system.size());
    CHECK(d.system.size() <= d.report.n + d.report.k4_components);
    if (d.report.k4_components == 0 && isolated == 0) CHECK(d.system.size() <= d.report.n);
  }
}

TEST_CASE("outerplanar entry: documented examples") {
  const auto fan = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
  const auto f = build_ssp_outerplanar_entry(fan);
  CHECK(f.system.size() == 5);
  CHECK(verify_strong_separation(f.system).pass());
  CHECK(build_ssp_outerplanar_entry(complete_graph(3)).system.size() == 3);
  const auto forest = build_ssp_outerplanar_entry(make_graph(4, {{0, 1}, {2, 3}}));
  CHECK(forest.system.size() == 2);
  CHECK(verify_strong_separation(forest.system).pass());
  CHECK_THROWS_AS(build_ssp_outerplanar_entry(complete_graph(4)), Error);
}

TEST_CASE("auto dispatch: refuses uncovered components with not_applicable") {
  const auto g = disjoint_union(cycle_graph(4), complete_graph(5));
  try {
    build_ssp_auto(g);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_applicable);
    CHECK(std::string(e.what()).find("vertex 4") != std::string::npos);
  }
  const auto ok = build_ssp_auto(disjoint_union(fan_graph(6), petersen_graph()));
  CHECK(verify_strong_separation(ok.system).pass());
  CHECK(ok.system.size() <= 17);
}

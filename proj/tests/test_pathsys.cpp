#include <doctest.h>

#include <algorithm>
#include <random>

#include "pathsep/bipartite.hpp"
#include "pathsep/degenerate.hpp"
#include "pathsep/error.hpp"
#include "pathsep/generators.hpp"
#include "pathsep/path_io.hpp"
#include "pathsep/path_system.hpp"
#include "support.hpp"

using namespace pathsep;
using testing_support::make_graph;

namespace {

PathSystem sys_of(const Graph& g, std::vector<std::vector<Vertex>> seqs) {
  std::vector<Path> ps;
  for (auto& s : seqs) ps.emplace_back(std::move(s));
  return PathSystem(g, std::move(ps));
}

PathSystem triangle_rotations() { return sys_of(complete_graph(3), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}); }

std::vector<std::size_t> members(const boost::dynamic_bitset<>& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != boost::dynamic_bitset<>::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

// Graphs with at most 12 edges used for verifier agreement.
std::vector<Graph> small_corpus() {
  std::vector<Graph> out{complete_graph(3), path_graph(3), path_graph(5), complete_graph(4), cycle_graph(5),
                         fan_graph(5),      complete_bipartite(3, 3),     triangular_prism(), complete_bipartite(2, 5),
                         complete_bipartite(1, 3), cube_graph(), make_graph(4, {{0, 1}, {2, 3}}), Graph(2, {Edge{0, 1}})};
  for (std::uint64_t seed = 0; seed < 6; ++seed) out.push_back(random_two_degenerate(4 + seed, seed));
  return out;
}

}  // namespace

TEST_CASE("path: validation and helpers") {
  CHECK_THROWS_AS(Path({1}), Error);
  CHECK_THROWS_AS(Path({1, 2, 1}), Error);
  const Path p{3, 1, 2};
  CHECK(p.edge_count() == 2);
  CHECK(p.ends_at(3));
  CHECK(p.ends_at(2));
  CHECK_FALSE(p.ends_at(1));
  CHECK(p.contains(1));
  CHECK(p.canonical() == Path{2, 1, 3});
  CHECK(p.reversed() == Path{2, 1, 3});
  CHECK(p.extended(3, 0) == Path{0, 3, 1, 2});
  CHECK(p.extended(2, 0) == Path{3, 1, 2, 0});
  CHECK_THROWS_AS(p.extended(1, 0), Error);
  CHECK(to_string(p) == "(3,1,2)");
}

TEST_CASE("path system: non-edges are rejected with the path index") {
  CHECK_THROWS_WITH_AS(sys_of(path_graph(3), {{0, 1}, {0, 2}}), doctest::Contains("path 1"), Error);
}

TEST_CASE("incidence profile: documented examples") {
  const auto tri = incidence_profile(triangle_rotations());
  CHECK(tri.edges_in_exactly(2) == 3);
  CHECK(tri.edges_in_exactly(1) == 0);
  CHECK(tri.edges_in_exactly(0) == 0);

  const auto k2 = incidence_profile(sys_of(complete_graph(2), {{0, 1}}));
  CHECK(k2.edges_in_exactly(1) == 1);

  const auto p = incidence_profile(sys_of(path_graph(3), {{0, 1}, {1, 2}}));
  CHECK(members(p.sets[0]) == std::vector<std::size_t>{0});
  CHECK(members(p.sets[1]) == std::vector<std::size_t>{1});
}

TEST_CASE("incidence profile: histogram and length sums") {
  std::mt19937_64 rng(3);
  for (const auto& g : small_corpus()) {
    const auto seqs = testing_support::random_paths(g, 1 + rng() % 6, rng);
    const auto sys = sys_of(g, seqs);
    const auto prof = incidence_profile(sys);
    std::size_t total = 0, weighted = 0, lengths = 0;
    for (std::size_t i = 0; i < prof.histogram.size(); ++i) {
      total += prof.histogram[i];
      weighted += i * prof.histogram[i];
    }
    for (const auto& p : sys.paths()) lengths += p.edge_count();
    CHECK(total == g.edge_count());
    CHECK(weighted == lengths);
  }
}

TEST_CASE("strong separation: documented examples") {
  CHECK(verify_strong_separation(triangle_rotations()).pass());

  const auto bad = verify_strong_separation(sys_of(path_graph(3), {{0, 1, 2}}));
  CHECK(bad.failure == SeparationFailure::comparable);
  CHECK(bad.first == Edge{0, 1});
  CHECK(bad.second == Edge{1, 2});
  CHECK(bad.shared_paths == std::vector<std::size_t>{0});

  const auto unc = verify_strong_separation(sys_of(path_graph(3), {{0, 1}}));
  CHECK(unc.failure == SeparationFailure::uncovered);
  CHECK(unc.first == Edge{1, 2});

  // every 4-subset of the simple paths of K4 fails
  const auto k4 = complete_graph(4);
  const auto all = testing_support::all_simple_paths(k4);
  std::size_t checked = 0;
  for (std::size_t a = 0; a < all.size(); a += 3)
    for (std::size_t b = a + 1; b < all.size(); b += 2)
      for (std::size_t c = b + 1; c < all.size(); c += 3)
        for (std::size_t d = c + 1; d < all.size(); d += 2) {
          CHECK_FALSE(verify_strong_separation(sys_of(k4, {all[a], all[b], all[c], all[d]})).pass());
          ++checked;
        }
  CHECK(checked > 100);
}

TEST_CASE("strong separation: agrees with the literal pair scan on m <= 12") {
  std::mt19937_64 rng(12);
  std::size_t passes = 0, fails = 0;
  for (const auto& g : small_corpus()) {
    REQUIRE(g.edge_count() <= 12);
    const auto all = testing_support::all_simple_paths(g);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<testing_support::Seq> seqs;
      if (trial % 2 == 0) {
        seqs = testing_support::random_paths(g, 1 + rng() % (g.edge_count() + 2), rng);
      } else {
        const auto k = 1 + rng() % std::min<std::size_t>(all.size(), g.edge_count() + 1);
        for (std::size_t i = 0; i < k; ++i) seqs.push_back(all[rng() % all.size()]);
      }
      const auto sys = sys_of(g, seqs);
      const bool lit = testing_support::literal_separates(g, seqs);
      CHECK(verify_strong_separation(sys).pass() == lit);
      CHECK(serial::verify_strong_separation(sys).pass() == lit);
      (lit ? passes : fails) += 1;
    }
  }
  CHECK(passes > 20);
  CHECK(fails > 20);
}

TEST_CASE("strong separation: parallel and serial witnesses coincide") {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_two_degenerate(10 + seed, seed);
    const auto sys = sys_of(g, testing_support::random_paths(g, 3 + seed % 10, rng));
    const auto par = verify_strong_separation(sys);
    const auto ser = serial::verify_strong_separation(sys);
    CHECK(par.failure == ser.failure);
    CHECK(par.first == ser.first);
    CHECK(par.second == ser.second);
    CHECK(par.shared_paths == ser.shared_paths);
  }
}

TEST_CASE("strong separation: path order does not matter") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_two_degenerate(6 + seed % 10, seed);
    auto seqs = seed % 2 ? testing_support::sequences(build_ssp_2degenerate(g).system)
                         : testing_support::random_paths(g, 4 + seed % 6, rng);
    const bool before = verify_strong_separation(sys_of(g, seqs)).pass();
    for (int k = 0; k < 5; ++k) {
      std::shuffle(seqs.begin(), seqs.end(), rng);
      CHECK(verify_strong_separation(sys_of(g, seqs)).pass() == before);
    }
  }
}

TEST_CASE("strong separation: adding paths preserves PASS, removing can break it") {
  // an element of S(e) \ S(f) survives any added path
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_two_degenerate(5 + seed % 8, seed);
    auto seqs = testing_support::sequences(build_ssp_2degenerate(g).system);
    for (const auto& extra : testing_support::random_paths(g, 4, rng)) {
      seqs.push_back(extra);
      CHECK(verify_strong_separation(sys_of(g, seqs)).pass());
    }
  }
  // regression: P4 with {(0,1),(1,2,3),(2,3)} fails (S(12) = {1} inside
  // S(23) = {1,2}); adding (0,1,2) repairs it, dropping (2,3) again breaks it
  const auto g = path_graph(4);
  const auto failing = sys_of(g, {{0, 1}, {1, 2, 3}, {2, 3}});
  CHECK_FALSE(verify_strong_separation(failing).pass());
  const auto repaired = sys_of(g, {{0, 1}, {1, 2, 3}, {2, 3}, {0, 1, 2}});
  CHECK(verify_strong_separation(repaired).pass());
  const auto dropped = sys_of(g, {{0, 1}, {1, 2, 3}, {0, 1, 2}});
  CHECK_FALSE(verify_strong_separation(dropped).pass());
  CHECK_FALSE(testing_support::literal_separates(g, testing_support::sequences(failing)));
  CHECK(testing_support::literal_separates(g, testing_support::sequences(repaired)));
  CHECK_FALSE(testing_support::literal_separates(g, testing_support::sequences(dropped)));
}

TEST_CASE("structural properties: documented examples") {
  CHECK(verify_structural_properties(triangle_rotations()).pass);
  CHECK(verify_structural_properties(sys_of(path_graph(3), {{0, 1, 2}, {0, 1}, {1, 2}})).pass);
  const auto bad = verify_structural_properties(sys_of(complete_graph(3), {{0, 1, 2}, {0, 1}, {1, 2}}));
  CHECK_FALSE(bad.pass);
  CHECK(bad.reason.find("0-2") != std::string::npos);
  CHECK(endpoint_counts(triangle_rotations()) == std::vector<std::size_t>{2, 2, 2});
}

TEST_CASE("counting certificate: documented examples") {
  const auto k13 = counting_certificate(build_ssp_complete_bipartite(1, 3), 1, 3);
  CHECK(k13.e2 == 3);
  CHECK(k13.e1 == 0);
  CHECK(k13.p == 3);
  CHECK(k13.multiplicity_lhs == 6);
  CHECK(k13.multiplicity_rhs == 6);
  CHECK(k13.holds());

  const auto k25 = counting_certificate(build_ssp_complete_bipartite(2, 5), 2, 5);
  CHECK(k25.e2 == 10);
  CHECK(k25.e1 == 0);
  CHECK(k25.p == 5);
  CHECK(k25.multiplicity_lhs == 20);
  CHECK(k25.multiplicity_rhs == 20);
  CHECK(k25.multiplicity_slack() == 0);
  CHECK(k25.pair_slack() >= 0);
  CHECK(k25.relaxed_slack() >= 0);
  CHECK(k25.holds());
}

TEST_CASE("counting certificate: single-edge star systems") {
  for (std::size_t b = 1; b <= 6; ++b) {
    const auto g = complete_bipartite(1, b);
    std::vector<std::vector<Vertex>> seqs;
    for (Vertex t = 0; t < b; ++t) seqs.push_back({0, static_cast<Vertex>(1 + t)});
    const auto c = counting_certificate(sys_of(g, seqs), 1, static_cast<std::int64_t>(b));
    CHECK(c.holds());
    CHECK(c.pair_lhs == static_cast<std::int64_t>(2 * b));
    // the relaxed p^2/2 form fails exactly for b <= 3
    CHECK((c.relaxed_slack() < 0) == (b <= 3));
  }
}

TEST_CASE("counting certificate: rejects wrong hosts and failing systems") {
  CHECK_THROWS_AS(counting_certificate(triangle_rotations(), 1, 2), Error);
  const auto g = complete_bipartite(1, 2);
  CHECK_THROWS_AS(counting_certificate(sys_of(g, {{1, 0, 2}}), 1, 2), Error);
  CHECK(is_complete_bipartite(complete_bipartite(2, 3), 3, 2));
  CHECK_FALSE(is_complete_bipartite(cycle_graph(5), 2, 3));
}

TEST_CASE("path io: text and JSON round-trip") {
  const auto sys = build_ssp_complete_bipartite(2, 5);
  const auto text = format_paths_text(sys);
  const auto back = attach(sys.graph(), parse_paths(text));
  CHECK(std::vector<Path>(back.paths().begin(), back.paths().end()) ==
        std::vector<Path>(sys.paths().begin(), sys.paths().end()));
  const auto js = format_paths_json(sys);
  const auto list = parse_paths(js);
  REQUIRE(list.n.has_value());
  CHECK(*list.n == 7);
  CHECK(attach(sys.graph(), list).canonical_paths() == sys.canonical_paths());
  CHECK(parse_paths("# c\n0 1 2\n\n2 3 # t\n").paths == std::vector<Path>{Path{0, 1, 2}, Path{2, 3}});
}

TEST_CASE("path io: errors") {
  CHECK_THROWS_AS(parse_paths("0 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_paths("0 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_paths("0 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_paths(R"({"n": 3, "paths": 5})"), Error);
  CHECK_THROWS_AS(parse_paths(R"({"n": 3)"), Error);
  CHECK_THROWS_AS(attach(path_graph(3), parse_paths(R"({"n": 4, "paths": [[0,1]]})")), Error);
  CHECK_THROWS_AS(attach(path_graph(3), parse_paths("0 2\n")), Error);
}

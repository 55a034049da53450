#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pathsep/bipartite.hpp"
#include "pathsep/graph.hpp"
#include "pathsep/path_system.hpp"

namespace pathsep {

/// Search engines for one level of the iterative deepening. Each is complete on
/// its own; the portfolio interleaves both and stops at the first verdict.
enum class OracleEngine { portfolio, candidate_paths, edge_columns };

struct OracleConfig {
  std::size_t max_vertices = 10;
  std::size_t max_edges = 16;
  /// Largest system size the search tries before giving up as inconclusive.
  std::size_t max_path_budget = 12;
  double time_budget_seconds = 120.0;
  /// Ignore max_vertices / max_edges. Graphs with more than 64 edges are always refused.
  bool force = false;
  /// Worker threads for the top-level branches; 0 uses the OpenMP default.
  int threads = 0;
  std::size_t max_enumerated_paths = 2'000'000;
  OracleEngine engine = OracleEngine::portfolio;
};

/// Every simple path with at least one edge, oriented with the smaller
/// endpoint first, in lexicographic order of vertex sequences.
/// Throws Error(limit) when the graph exceeds the configured limits.
std::vector<Path> enumerate_paths(const Graph& g, const OracleConfig& cfg = {});

/// Smallest k with C(k, floor(k/2)) >= m: m pairwise incomparable sets need a
/// ground set of at least k elements.
std::size_t sperner_lower_bound(std::size_t m);

struct OracleResult {
  bool conclusive = false;
  std::size_t lower = 0;
  std::size_t upper = 0;
  /// A strongly separating system of size `upper`.
  PathSystem witness;
  std::size_t enumerated_paths = 0;
  std::uint64_t search_nodes = 0;

  /// Exact minimum; throws Error(limit) if inconclusive.
  std::size_t value() const;
};

/// Minimum size of a strongly separating path system.
///
/// Iterative deepening on the system size p, starting at
/// max(max degree, sperner_lower_bound(m)). Each level is decided by two
/// complete depth-first searches run in alternating rounds:
///
/// - candidate paths: repeatedly takes the unseparated ordered edge pair
///   (e, f) with the fewest remaining candidates (paths through e avoiding f)
///   and branches on them, excluding earlier siblings so each subset is
///   visited once. Cut off when some pair has no candidate left or when a
///   greedy packing of pairs with disjoint candidate sets needs more paths
///   than remain.
/// - edge columns: assigns each edge its incidence set, a subset of the p
///   path slots, so that every slot stays a simple path and the sets stay
///   pairwise incomparable; interchangeable slots are kept in one order.
///
/// Top-level branches run in parallel under deterministic node allowances;
/// the witness is the first in branch order and independent of the thread
/// count. On timeout or when the budget is exhausted the result is
/// inconclusive with the bracket found so far (the all-single-edge system is
/// always a valid upper witness).
OracleResult exact_ssp(const Graph& g, const OracleConfig& cfg = {});

namespace serial {
/// Same search on one thread; the reference for the parallel version.
OracleResult exact_ssp(const Graph& g, const OracleConfig& cfg = {});
}  // namespace serial

struct FormulaCheck {
  OracleResult oracle;
  BoundReport bounds;
  bool consistent = false;
  std::string detail;
};

/// Runs the oracle on K_{a,b} and compares with bipartite_bounds: equality
/// with b when a < b/2, otherwise exact >= ceil(lower).
FormulaCheck exact_matches_formula(std::size_t a, std::size_t b, const OracleConfig& cfg = {});

}  // namespace pathsep

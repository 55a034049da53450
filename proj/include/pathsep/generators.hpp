#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pathsep/graph.hpp"

namespace pathsep {

/// Seeded source of randomness for every generator in the project.
///
/// The engine is std::mt19937_64 (its output sequence is fixed by the C++
/// standard) and bounded draws use rejection sampling on the raw 64-bit output,
/// so a seed produces the same graph with any conforming standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

Graph path_graph(std::size_t vertices);
Graph cycle_graph(std::size_t vertices);
Graph complete_graph(std::size_t vertices);
/// Parts u_0..u_{a-1} = ids 0..a-1 and v_0..v_{b-1} = ids a..a+b-1.
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen_graph();
Graph triangular_prism();
Graph cube_graph();
/// Path 0-1-...-(k-1) plus an apex k adjacent to all of them.
Graph fan_graph(std::size_t path_vertices);

/// k4, petersen, prism, cube, k33, triangle, p3, c5, fan5. Throws on unknown names.
Graph named_graph(std::string_view name);
std::vector<std::string> named_graph_names();

/// Starts from the triangle {0,1,2}; every further vertex joins 1 or 2
/// (chosen uniformly) distinct earlier vertices chosen uniformly. Always
/// connected and 2-degenerate. Requires n >= 3.
Graph random_two_degenerate(std::size_t n, std::uint64_t seed);

/// Uniform stub pairing, retried until the result is simple and connected.
/// Requires n even and n >= 4.
Graph random_cubic(std::size_t n, std::uint64_t seed);

}  // namespace pathsep

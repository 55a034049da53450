#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathsep/path_system.hpp"

namespace pathsep {

/// Graceful labeling of the path 0-1-...-a: labels are distinct values in
/// {0..a} and the a consecutive differences |labels[i+1] - labels[i]| are
/// exactly {1..a}.
struct GracefulLabeling {
  std::size_t a = 0;
  std::vector<std::int64_t> labels;  // a + 1 entries
};

/// Zig-zag labeling c, c-1, c+1, c-2, c+2, ... with c = ceil(a/2).
/// Even a ends ..., a-1, 0, a; odd a ends ..., 1, a, 0.
GracefulLabeling graceful_path_labeling(std::size_t a);

/// Empty when valid, otherwise the first violated condition.
std::optional<std::string> graceful_violation(const GracefulLabeling& lab);

/// b-path system for K_{a,b} with 1 <= a < b/2.
///
/// Vertices u_i = i (0 <= i < a), v_t = a + t. Path j visits
/// v_{phi(0)+j}, u_0, v_{phi(1)+j}, u_1, ..., u_{a-1}, v_{phi(a)+j} with v
/// indices taken mod b, so edge u_i v_t lies in exactly the paths
/// (t - phi(i)) mod b and (t - phi(i+1)) mod b. `labeling` defaults to
/// graceful_path_labeling(a) and is validated when supplied.
PathSystem build_ssp_complete_bipartite(std::size_t a, std::size_t b,
                                        const std::optional<GracefulLabeling>& labeling = std::nullopt);

namespace serial {
/// Single-threaded reference for build_ssp_complete_bipartite.
PathSystem build_ssp_complete_bipartite(std::size_t a, std::size_t b,
                                        const std::optional<GracefulLabeling>& labeling = std::nullopt);
}  // namespace serial

/// Bounds on ssp(K_{a,b}) for 1 <= a <= b.
struct BoundReport {
  std::int64_t a = 0, b = 0;
  double lower = 0;
  std::optional<double> upper;
  std::optional<std::int64_t> exact;
  /// Set when `lower` is an integer value computed exactly.
  std::optional<std::int64_t> lower_exact;
  std::string lower_source;
  std::string upper_source;
};

/// a < b/2: exact = b (max-degree lower bound, graceful construction upper).
/// a >= b/2: lower = (sqrt(6 b/a + 4) - 2) a = sqrt(a (6b + 4a)) - 2a, upper unknown.
BoundReport bipartite_bounds(std::int64_t a, std::int64_t b);

/// Lower bound as a real function of a (for the sweep), same piecewise rule.
double bipartite_lower_bound(double a, double b);

struct BoundRow {
  double a = 0;
  double lower = 0;
};

/// `steps` rows with a evenly spaced over [1, b] (a = b when steps == 1);
/// steps == b gives a = 1, 2, ..., b.
std::vector<BoundRow> bounds_table(std::int64_t b, std::int64_t steps);

/// CSV with header "a,lower_bound".
std::string bounds_csv(const std::vector<BoundRow>& rows);

/// Six significant digits (round-half-even on the binary value), integers
/// without a fractional part.
std::string format_bound_value(double x);

}  // namespace pathsep

#include "pathsep/bipartite.hpp"

#include <cmath>

#include <fmt/format.h>

#include "pathsep/error.hpp"
#include "pathsep/generators.hpp"

namespace pathsep {

GracefulLabeling graceful_path_labeling(std::size_t a) {
  if (a == 0) throw Error(ErrorKind::precondition, "graceful labeling needs a >= 1");
  GracefulLabeling lab{a, std::vector<std::int64_t>(a + 1)};
  const auto c = static_cast<std::int64_t>((a + 1) / 2);
  lab.labels[0] = c;
  for (std::size_t i = 1; i <= a; ++i) {
    const auto k = static_cast<std::int64_t>((i + 1) / 2);
    lab.labels[i] = i % 2 == 1 ? c - k : c + k;
  }
  return lab;
}

std::optional<std::string> graceful_violation(const GracefulLabeling& lab) {
  const auto a = lab.a;
  if (a == 0) return "a must be positive";
  if (lab.labels.size() != a + 1) return fmt::format("expected {} labels, got {}", a + 1, lab.labels.size());
  std::vector<char> used(a + 1, 0), diff(a + 1, 0);
  for (const auto x : lab.labels) {
    if (x < 0 || x > static_cast<std::int64_t>(a)) return fmt::format("label {} outside [0, {}]", x, a);
    if (used[x]++) return fmt::format("label {} repeated", x);
  }
  for (std::size_t i = 0; i < a; ++i) {
    const auto d = std::abs(lab.labels[i + 1] - lab.labels[i]);
    if (diff[d]++) return fmt::format("difference {} repeated", d);
  }
  return std::nullopt;
}

namespace {

// Path j visits v_{phi(0)+j}, u_0, v_{phi(1)+j}, ..., v_{phi(a)+j} (v indices mod b).
PathSystem bipartite_system(std::size_t a, std::size_t b, const std::optional<GracefulLabeling>& labeling,
                            bool parallel) {
  if (a < 1 || 2 * a >= b)
    throw Error(ErrorKind::precondition, fmt::format("construction requires 1 <= a < b/2, got a = {}, b = {}", a, b));
  const auto lab = labeling ? *labeling : graceful_path_labeling(a);
  if (lab.a != a) throw Error(ErrorKind::precondition, "labeling is for a different path length");
  if (const auto bad = graceful_violation(lab)) throw Error(ErrorKind::precondition, "labeling not graceful: " + *bad);

  std::vector<std::vector<Vertex>> rows(b);
  const auto bb = static_cast<std::int64_t>(b);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t j = 0; j < bb; ++j) {
    auto& vs = rows[static_cast<std::size_t>(j)];
    vs.reserve(2 * a + 1);
    for (std::size_t i = 0; i <= a; ++i) {
      vs.push_back(static_cast<Vertex>(a + static_cast<std::size_t>((lab.labels[i] + j) % bb)));
      if (i < a) vs.push_back(static_cast<Vertex>(i));
    }
  }
  std::vector<Path> paths;
  paths.reserve(b);
  for (auto& vs : rows) paths.emplace_back(std::move(vs));  // rejects a repeated v-vertex
  return PathSystem(complete_bipartite(a, b), std::move(paths));
}

}  // namespace

PathSystem build_ssp_complete_bipartite(std::size_t a, std::size_t b,
                                        const std::optional<GracefulLabeling>& labeling) {
  return bipartite_system(a, b, labeling, true);
}

namespace serial {
PathSystem build_ssp_complete_bipartite(std::size_t a, std::size_t b,
                                        const std::optional<GracefulLabeling>& labeling) {
  return bipartite_system(a, b, labeling, false);
}
}  // namespace serial

double bipartite_lower_bound(double a, double b) {
  if (2 * a < b) return b;
  return std::sqrt(a * (6 * b + 4 * a)) - 2 * a;
}

BoundReport bipartite_bounds(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::precondition, "part sizes must be positive");
  if (a > b) throw Error(ErrorKind::precondition, fmt::format("orientation requires a <= b, got a = {}, b = {}", a, b));
  BoundReport r;
  r.a = a;
  r.b = b;
  if (2 * a < b) {
    r.lower = r.upper.emplace(static_cast<double>(b));
    r.exact = r.lower_exact = b;
    r.lower_source = "maximum degree";
    r.upper_source = "graceful-labeling construction";
    return r;
  }
  r.lower_source = "edge-multiplicity counting";
  // sqrt(6b/a + 4) a == sqrt(a (6b + 4a)), exact when a(6b + 4a) is a square
  const auto radicand = a * (6 * b + 4 * a);
  auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(radicand))));
  while (root * root > radicand) --root;
  while ((root + 1) * (root + 1) <= radicand) ++root;
  if (root * root == radicand) {
    r.lower_exact = root - 2 * a;
    r.lower = static_cast<double>(*r.lower_exact);
  } else {
    r.lower = bipartite_lower_bound(static_cast<double>(a), static_cast<double>(b));
  }
  return r;
}

std::vector<BoundRow> bounds_table(std::int64_t b, std::int64_t steps) {
  if (b < 2) throw Error(ErrorKind::precondition, "bounds table needs b >= 2");
  if (steps < 1) throw Error(ErrorKind::precondition, "bounds table needs steps >= 1");
  std::vector<BoundRow> rows;
  const auto bd = static_cast<double>(b);
  for (std::int64_t k = 0; k < steps; ++k) {
    const double a = steps == 1 ? bd : 1.0 + (bd - 1.0) * static_cast<double>(k) / static_cast<double>(steps - 1);
    // integer a goes through the exact path so perfect squares print exactly
    const auto ai = static_cast<std::int64_t>(std::llround(a));
    const double lower = std::abs(a - static_cast<double>(ai)) < 1e-12 ? bipartite_bounds(ai, b).lower
                                                                        : bipartite_lower_bound(a, bd);
    rows.push_back({a, lower});
  }
  return rows;
}

std::string format_bound_value(double x) { return fmt::format("{:.6g}", x); }

std::string bounds_csv(const std::vector<BoundRow>& rows) {
  std::string out = "a,lower_bound\n";
  for (const auto& r : rows) out += fmt::format("{},{}\n", format_bound_value(r.a), format_bound_value(r.lower));
  return out;
}

}  // namespace pathsep

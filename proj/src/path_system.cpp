#include "pathsep/path_system.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "pathsep/error.hpp"
#include "pathsep/structure.hpp"

namespace pathsep {

Path::Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2)
    throw Error(ErrorKind::invalid_system, "a path needs at least two vertices");
  auto sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::invalid_system, fmt::format("path ({}) repeats a vertex", fmt::join(vertices_, ",")));
}

bool Path::contains(Vertex v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

Path Path::extended(Vertex at, Vertex v) const {
  auto out = vertices_;
  if (out.back() == at) {
    out.push_back(v);
  } else if (out.front() == at) {
    out.insert(out.begin(), v);
  } else {
    throw Error(ErrorKind::internal, fmt::format("path {} does not end at {}", to_string(*this), at));
  }
  return Path(std::move(out));
}

Path Path::reversed() const { return Path(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend())); }

Path Path::canonical() const { return front() <= back() ? *this : reversed(); }

std::string to_string(const Path& p) { return fmt::format("({})", fmt::join(p.vertices(), ",")); }

PathSystem::PathSystem(Graph graph, std::vector<Path> paths) : graph_(std::move(graph)), paths_(std::move(paths)) {
  path_edges_.reserve(paths_.size());
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    const auto vs = paths_[i].vertices();
    std::vector<std::size_t> ids;
    ids.reserve(vs.size());
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
      const auto id = graph_.edge_id(vs[k], vs[k + 1]);
      if (!id)
        throw Error(ErrorKind::invalid_system,
                    fmt::format("path {} uses non-edge {}-{}", i, vs[k], vs[k + 1]));
      ids.push_back(*id);
    }
    path_edges_.push_back(std::move(ids));
  }
}

std::vector<Path> PathSystem::canonical_paths() const {
  std::vector<Path> out;
  out.reserve(paths_.size());
  for (const auto& p : paths_) out.push_back(p.canonical());
  std::sort(out.begin(), out.end());
  return out;
}

IncidenceProfile incidence_profile(const PathSystem& sys) {
  IncidenceProfile prof;
  prof.path_count = sys.size();
  prof.sets.assign(sys.graph().edge_count(), boost::dynamic_bitset<>(sys.size()));
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (const auto id : sys.path_edges(i)) prof.sets[id].set(i);
  for (const auto& s : prof.sets) {
    const auto c = s.count();
    if (prof.histogram.size() <= c) prof.histogram.resize(c + 1, 0);
    ++prof.histogram[c];
  }
  return prof;
}

std::string SeparationVerdict::describe() const {
  switch (failure) {
    case SeparationFailure::none: return "strongly separating";
    case SeparationFailure::uncovered: return fmt::format("uncovered edge {}", to_string(first));
    case SeparationFailure::comparable:
      return fmt::format("every path containing {} also contains {} (paths {{{}}})", to_string(first),
                         to_string(second), fmt::join(shared_paths, ","));
  }
  return "?";
}

namespace {

std::vector<std::size_t> members(const boost::dynamic_bitset<>& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != boost::dynamic_bitset<>::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

std::optional<SeparationVerdict> uncovered(const PathSystem& sys, const IncidenceProfile& prof) {
  for (std::size_t e = 0; e < prof.sets.size(); ++e)
    if (prof.sets[e].none()) {
      SeparationVerdict v;
      v.failure = SeparationFailure::uncovered;
      v.first = v.second = sys.graph().edge(e);
      return v;
    }
  return std::nullopt;
}

SeparationVerdict comparable(const PathSystem& sys, const IncidenceProfile& prof, std::size_t e, std::size_t f) {
  if (!prof.sets[e].is_subset_of(prof.sets[f])) std::swap(e, f);
  SeparationVerdict v;
  v.failure = SeparationFailure::comparable;
  v.first = sys.graph().edge(e);
  v.second = sys.graph().edge(f);
  v.shared_paths = members(prof.sets[e]);
  return v;
}

bool related(const boost::dynamic_bitset<>& x, const boost::dynamic_bitset<>& y) {
  return x.is_subset_of(y) || y.is_subset_of(x);
}

}  // namespace

SeparationVerdict verify_strong_separation(const PathSystem& sys) {
  const auto prof = incidence_profile(sys);
  if (auto v = uncovered(sys, prof)) return *v;

  const auto m = static_cast<std::int64_t>(prof.sets.size());
  std::vector<std::int64_t> first_bad(prof.sets.size(), -1);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t e = 0; e < m; ++e)
    for (std::int64_t f = e + 1; f < m; ++f)
      if (related(prof.sets[e], prof.sets[f])) {
        first_bad[e] = f;
        break;
      }
  for (std::size_t e = 0; e < first_bad.size(); ++e)
    if (first_bad[e] >= 0) return comparable(sys, prof, e, static_cast<std::size_t>(first_bad[e]));
  return {};
}

namespace serial {

SeparationVerdict verify_strong_separation(const PathSystem& sys) {
  const auto prof = incidence_profile(sys);
  if (auto v = uncovered(sys, prof)) return *v;
  for (std::size_t e = 0; e < prof.sets.size(); ++e)
    for (std::size_t f = e + 1; f < prof.sets.size(); ++f)
      if (related(prof.sets[e], prof.sets[f])) return comparable(sys, prof, e, f);
  return {};
}

}  // namespace serial

std::vector<std::size_t> endpoint_counts(const PathSystem& sys) {
  std::vector<std::size_t> ends(sys.graph().vertex_count(), 0);
  for (const auto& p : sys.paths()) {
    ++ends[p.front()];
    ++ends[p.back()];
  }
  return ends;
}

StructuralVerdict verify_structural_properties(const PathSystem& sys) {
  const auto prof = incidence_profile(sys);
  for (std::size_t e = 0; e < prof.sets.size(); ++e) {
    const auto c = prof.sets[e].count();
    if (c != 2)
      return {false, fmt::format("edge {} lies in {} paths, expected 2", to_string(sys.graph().edge(e)), c)};
  }
  const auto ends = endpoint_counts(sys);
  for (Vertex v = 0; v < ends.size(); ++v)
    if (ends[v] != 2) return {false, fmt::format("vertex {} ends {} paths, expected 2", v, ends[v])};
  return {true, {}};
}

bool is_complete_bipartite(const Graph& g, std::size_t a, std::size_t b) {
  if (a == 0 || b == 0 || g.vertex_count() != a + b || g.edge_count() != a * b) return false;
  if (!is_connected(g)) return false;
  std::vector<int> side(g.vertex_count(), -1);
  std::vector<Vertex> stack{0};
  side[0] = 0;
  std::size_t zeros = 0;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    zeros += side[x] == 0;
    for (const auto y : g.neighbors(x)) {
      if (side[y] == side[x]) return false;
      if (side[y] < 0) {
        side[y] = 1 - side[x];
        stack.push_back(y);
      }
    }
  }
  const auto ones = g.vertex_count() - zeros;
  return (zeros == a && ones == b) || (zeros == b && ones == a);
}

CountingCertificate counting_certificate(const PathSystem& sys, std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0 || !is_complete_bipartite(sys.graph(), std::size_t(a), std::size_t(b)))
    throw Error(ErrorKind::precondition, fmt::format("host graph is not K_{{{},{}}}", a, b));
  if (const auto v = verify_strong_separation(sys); !v.pass())
    throw Error(ErrorKind::precondition, "system is not strongly separating: " + v.describe());

  const auto prof = incidence_profile(sys);
  CountingCertificate c;
  c.a = a;
  c.b = b;
  c.p = static_cast<std::int64_t>(sys.size());
  c.e1 = static_cast<std::int64_t>(prof.edges_in_exactly(1));
  c.e2 = static_cast<std::int64_t>(prof.edges_in_exactly(2));
  c.multiplicity_lhs = 3 * a * b - 2 * c.e1 - c.e2;
  c.multiplicity_rhs = 2 * a * c.p;
  c.pair_lhs = c.e2 + 2 * c.e1;
  const auto q = c.p - c.e1;
  c.pair_rhs = q * (q - 1) / 2 + 2 * c.e1;
  c.relaxed_rhs = static_cast<double>(c.p) * static_cast<double>(c.p) / 2.0;
  return c;
}

}  // namespace pathsep

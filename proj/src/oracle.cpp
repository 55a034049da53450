#include "pathsep/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <optional>

#include <fmt/format.h>
#include <omp.h>

#include "pathsep/error.hpp"
#include "pathsep/generators.hpp"

namespace pathsep {

namespace {

using Clock = std::chrono::steady_clock;

void check_limits(const Graph& g, const OracleConfig& cfg) {
  if (g.edge_count() > 64) throw Error(ErrorKind::limit, "exact search supports at most 64 edges");
  if (cfg.force) return;
  if (g.vertex_count() > cfg.max_vertices)
    throw Error(ErrorKind::limit, fmt::format("{} vertices exceeds the limit of {}", g.vertex_count(), cfg.max_vertices));
  if (g.edge_count() > cfg.max_edges)
    throw Error(ErrorKind::limit, fmt::format("{} edges exceeds the limit of {}", g.edge_count(), cfg.max_edges));
}

struct Candidate {
  Path path;
  std::uint64_t mask = 0;  // edge ids on the path
};

std::vector<Candidate> enumerate(const Graph& g, const OracleConfig& cfg) {
  std::vector<Candidate> out;
  std::vector<Vertex> stack;
  std::vector<char> on_path(g.vertex_count(), 0);

  // recursion depth is bounded by n <= 64 edges' worth of vertices
  auto grow = [&](auto&& self, std::uint64_t mask) -> void {
    const auto tip = stack.back();
    for (const auto next : g.neighbors(tip)) {
      if (on_path[next]) continue;
      const auto id = *g.edge_id(tip, next);
      stack.push_back(next);
      on_path[next] = 1;
      const auto grown = mask | (std::uint64_t{1} << id);
      if (next > stack.front()) {
        if (out.size() >= cfg.max_enumerated_paths)
          throw Error(ErrorKind::limit, fmt::format("more than {} simple paths", cfg.max_enumerated_paths));
        out.push_back({Path(stack), grown});
      }
      self(self, grown);
      on_path[next] = 0;
      stack.pop_back();
    }
  };
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    stack.assign(1, s);
    on_path[s] = 1;
    grow(grow, 0);
    on_path[s] = 0;
  }
  return out;
}

struct Bits {
  std::vector<std::uint64_t> words;
  explicit Bits(std::size_t n = 0) : words((n + 63) / 64, 0) {}
  void set(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1u; }
};

std::size_t and_count(const Bits& x, const Bits& y) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < x.words.size(); ++w) c += std::popcount(x.words[w] & y.words[w]);
  return c;
}

// Shared, read-only description of one search problem.
struct Problem {
  std::size_t m = 0;
  std::uint64_t full = 0;
  std::vector<Candidate> candidates;
  std::vector<Bits> resolvers;  // [e * m + f]: candidates containing e and avoiding f
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::vector<std::size_t> sperner;  // sperner[s] = sperner_lower_bound(s)
};

Problem make_problem(const Graph& g, std::vector<Candidate> candidates) {
  Problem pb;
  pb.m = g.edge_count();
  pb.full = pb.m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pb.m) - 1;
  pb.candidates = std::move(candidates);
  pb.edges.assign(g.edges().begin(), g.edges().end());
  pb.n = g.vertex_count();
  for (std::size_t k = 0; k <= pb.m; ++k) pb.sperner.push_back(sperner_lower_bound(k));
  pb.resolvers.assign(pb.m * pb.m, Bits(pb.candidates.size()));
  for (std::size_t c = 0; c < pb.candidates.size(); ++c) {
    const auto mask = pb.candidates[c].mask;
    for (std::size_t e = 0; e < pb.m; ++e) {
      if (!((mask >> e) & 1u)) continue;
      for (std::size_t f = 0; f < pb.m; ++f)
        if (f != e && !((mask >> f) & 1u)) pb.resolvers[e * pb.m + f].set(c);
    }
  }
  return pb;
}

struct Timeout {};
struct Cancelled {};
struct OutOfBudget {};

// Depth-first search for a system that adds at most `slots` candidates.
class Search {
 public:
  Search(const Problem& pb, Clock::time_point deadline, std::uint64_t node_limit = ~std::uint64_t{0},
         const std::atomic<std::size_t>* winner = nullptr, std::size_t branch = 0, std::size_t slots = 0)
      : pb_(pb), deadline_(deadline), node_limit_(node_limit), winner_(winner), branch_(branch), slots_(slots),
        avail_(pb.candidates.size()),
        resolved_(pb.m, 0), incidence_(pb.m, 0), at_vertex_(pb.n, 0) {
    for (std::size_t c = 0; c < pb.candidates.size(); ++c) avail_.set(c);
    for (std::size_t e = 0; e < pb.m; ++e) resolved_[e] = std::uint64_t{1} << e;
  }

  void exclude(std::size_t c) { avail_.reset(c); }
  void take(std::size_t c) {
    avail_.reset(c);
    apply(c);
    chosen_.push_back(c);
  }

  bool run() { return dfs(slots_); }

  // Root split: the most constrained pair's candidates, ascending.
  std::optional<std::vector<std::size_t>> branch_candidates() const {
    const auto q = most_constrained();
    if (!q) return std::nullopt;
    std::vector<std::size_t> out;
    const auto& r = pb_.resolvers[*q];
    for (std::size_t c = 0; c < pb_.candidates.size(); ++c)
      if (r.test(c) && avail_.test(c)) out.push_back(c);
    return out;
  }

  const std::vector<std::size_t>& chosen() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void apply(std::size_t c) {
    const auto mask = pb_.candidates[c].mask;
    const auto slot = std::uint64_t{1} << (chosen_.size() & 63);
    for (auto rest = mask; rest; rest &= rest - 1) {
      const auto e = static_cast<std::size_t>(std::countr_zero(rest));
      resolved_[e] |= ~mask & pb_.full;
      incidence_[e] |= slot;
    }
  }

  // Edges whose current incidence sets coincide can only be told apart by the
  // remaining `slots` paths: their future parts must form an antichain, so a
  // class of size s needs sperner(s) slots, and since a path uses at most two
  // edges at a vertex, at most `slots` class members may share a vertex.
  bool classes_feasible(std::size_t slots) const {
    order_.resize(pb_.m);
    for (std::size_t e = 0; e < pb_.m; ++e) order_[e] = {incidence_[e], e};
    std::sort(order_.begin(), order_.end());
    for (std::size_t lo = 0; lo < pb_.m;) {
      auto hi = lo + 1;
      while (hi < pb_.m && order_[hi].first == order_[lo].first) ++hi;
      const auto size = hi - lo;
      if (pb_.sperner[size] > slots) return false;
      if (size > slots) {
        bool ok = true;
        for (auto i = lo; i < hi && ok; ++i) {
          const auto& e = pb_.edges[order_[i].second];
          ok = ++at_vertex_[e.u] <= slots && ++at_vertex_[e.v] <= slots;
        }
        for (auto i = lo; i < hi; ++i) {
          const auto& e = pb_.edges[order_[i].second];
          at_vertex_[e.u] = at_vertex_[e.v] = 0;
        }
        if (!ok) return false;
      }
      lo = hi;
    }
    return true;
  }

  // Index e * m + f of the unresolved ordered pair with the fewest available
  // resolvers; nullopt when everything is resolved. Sets dead_ when some pair
  // has none left.
  std::optional<std::size_t> most_constrained() const {
    std::optional<std::size_t> best;
    std::size_t best_count = ~std::size_t{0};
    dead_ = false;
    pending_.clear();
    for (std::size_t e = 0; e < pb_.m; ++e) {
      for (auto open = ~resolved_[e] & pb_.full; open; open &= open - 1) {
        const auto q = e * pb_.m + static_cast<std::size_t>(std::countr_zero(open));
        const auto count = and_count(pb_.resolvers[q], avail_);
        if (count == 0) {
          dead_ = true;
          return q;
        }
        pending_.emplace_back(count, q);
        if (count < best_count) {
          best_count = count;
          best = q;
        }
      }
    }
    return best;
  }

  // Greedy count of open pairs whose available resolver sets are pairwise disjoint.
  std::size_t packing_bound(std::size_t cap) const {
    std::sort(pending_.begin(), pending_.end());
    Bits used(pb_.candidates.size());
    std::size_t packed = 0;
    for (const auto& [count, q] : pending_) {
      const auto& r = pb_.resolvers[q];
      bool disjoint = true;
      for (std::size_t w = 0; w < used.words.size() && disjoint; ++w)
        disjoint = (r.words[w] & avail_.words[w] & used.words[w]) == 0;
      if (!disjoint) continue;
      for (std::size_t w = 0; w < used.words.size(); ++w) used.words[w] |= r.words[w] & avail_.words[w];
      if (++packed > cap) break;
    }
    return packed;
  }

  bool dfs(std::size_t slots) {
    if (nodes_ >= node_limit_) throw OutOfBudget{};
    if ((++nodes_ & 1023u) == 0) {
      if (Clock::now() > deadline_) throw Timeout{};
      if (winner_ && winner_->load(std::memory_order_relaxed) < branch_) throw Cancelled{};
    }
    const auto q = most_constrained();
    if (!q) return true;
    if (dead_ || slots == 0) return false;
    if (!classes_feasible(slots)) return false;
    if (packing_bound(slots) > slots) return false;

    std::vector<std::size_t> tried;
    const auto& r = pb_.resolvers[*q];
    const auto saved = resolved_;
    const auto saved_incidence = incidence_;
    bool found = false;
    for (std::size_t w = 0; w < avail_.words.size() && !found; ++w) {
      for (auto bits = r.words[w] & avail_.words[w]; bits && !found; bits &= bits - 1) {
        const auto c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        avail_.reset(c);
        tried.push_back(c);
        apply(c);
        chosen_.push_back(c);
        found = dfs(slots - 1);
        if (!found) {
          chosen_.pop_back();
          resolved_ = saved;
          incidence_ = saved_incidence;
        }
      }
    }
    for (const auto c : tried) avail_.set(c);
    return found;
  }

  const Problem& pb_;
  Clock::time_point deadline_;
  std::uint64_t node_limit_;
  const std::atomic<std::size_t>* winner_;
  std::size_t branch_;
  std::size_t slots_;
  Bits avail_;
  std::vector<std::uint64_t> resolved_;
  std::vector<std::uint64_t> incidence_;  // per edge: bit i set when chosen_[i] contains it
  std::vector<std::size_t> chosen_;
  mutable std::vector<std::size_t> at_vertex_;
  mutable std::vector<std::pair<std::uint64_t, std::size_t>> order_;
  std::uint64_t nodes_ = 0;
  mutable bool dead_ = false;
  mutable std::vector<std::pair<std::size_t, std::size_t>> pending_;
};

// Second engine: assigns each edge its incidence set S(e), a subset of the
// `slots` columns, in a fixed BFS edge order. Column c is path c's edge set, so
// within a column every vertex has degree <= 2, no cycle closes, and once all
// edges at a vertex are placed at most two vertices per column have degree 1.
// S(e) is checked for incomparability against every earlier set when placed.
// Columns that agree on all placed edges are interchangeable; requiring their
// bits to be non-increasing keeps one representative of each permutation
// class. Empty columns are allowed, so a level finds systems of size <= slots.
struct ColumnProblem {
  std::size_t n = 0;
  std::vector<Edge> order;
  std::vector<std::vector<Vertex>> closes;  // vertices whose last edge is order[k]
};

ColumnProblem make_column_problem(const Graph& g) {
  ColumnProblem cp;
  cp.n = g.vertex_count();
  std::vector<char> seen(cp.n, 0), placed(g.edge_count(), 0);
  for (Vertex root = 0; root < cp.n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto x = queue[head];
      for (const auto y : g.neighbors(x)) {
        const auto id = *g.edge_id(x, y);
        if (!placed[id]) {
          placed[id] = 1;
          cp.order.push_back(g.edge(id));
        }
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
  }
  std::vector<std::size_t> last(cp.n, 0);
  std::vector<char> touched(cp.n, 0);
  for (std::size_t k = 0; k < cp.order.size(); ++k) {
    last[cp.order[k].u] = last[cp.order[k].v] = k;
    touched[cp.order[k].u] = touched[cp.order[k].v] = 1;
  }
  cp.closes.assign(cp.order.size(), {});
  for (Vertex x = 0; x < cp.n; ++x)
    if (touched[x]) cp.closes[last[x]].push_back(x);
  return cp;
}

// Candidate sets in trial order: sizes near two first (most edges of a small
// system lie on exactly two paths), then descending bit pattern.
std::vector<std::uint32_t> column_masks(std::size_t slots) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << slots); ++s) out.push_back(s);
  const auto key = [](std::uint32_t s) { return std::abs(std::popcount(s) - 2); };
  std::stable_sort(out.begin(), out.end(), [&](std::uint32_t a, std::uint32_t b) {
    return key(a) != key(b) ? key(a) < key(b) : a > b;
  });
  return out;
}

class ColumnSearch {
 public:
  ColumnSearch(const ColumnProblem& cp, const std::vector<std::uint32_t>& masks, std::size_t slots,
               Clock::time_point deadline, std::uint64_t node_limit = ~std::uint64_t{0},
               const std::atomic<std::size_t>* winner = nullptr, std::size_t branch = 0)
      : cp_(cp), masks_(masks), slots_(slots), deadline_(deadline), node_limit_(node_limit), winner_(winner),
        branch_(branch), deg_(slots * cp.n, 0), comp_(slots * cp.n), ends_(slots, 0), group_(slots, 0),
        frames_(cp.order.size()) {
    for (std::size_t c = 0; c < slots; ++c)
      for (Vertex x = 0; x < cp.n; ++x) comp_[c * cp.n + x] = x;
  }

  // Places the next edge with set s if that keeps every constraint; returns false
  // and leaves the state unchanged otherwise.
  bool place(std::uint32_t s) {
    const auto k = sets_.size();
    if (!consistent(k, s)) return false;
    apply(k, s);
    if (std::any_of(ends_.begin(), ends_.end(), [](std::uint8_t e) { return e > 2; })) {
      revert(k, s);
      return false;
    }
    return true;
  }

  // Consistent prefixes of length `depth` (or complete assignments if shorter), in trial order.
  void prefixes(std::size_t depth, std::vector<std::vector<std::uint32_t>>& out) {
    if (sets_.size() == depth || sets_.size() == cp_.order.size()) {
      out.push_back(sets_);
      return;
    }
    for (const auto s : masks_) {
      if (!place(s)) continue;
      prefixes(depth, out);
      revert(sets_.size() - 1, s);
    }
  }

  bool run() { return dfs(); }
  std::uint64_t nodes() const { return nodes_; }

  std::vector<Path> paths() const {
    std::vector<Path> out;
    for (std::size_t c = 0; c < slots_; ++c) {
      std::vector<std::vector<Vertex>> adj(cp_.n);
      for (std::size_t k = 0; k < sets_.size(); ++k)
        if ((sets_[k] >> c) & 1u) {
          adj[cp_.order[k].u].push_back(cp_.order[k].v);
          adj[cp_.order[k].v].push_back(cp_.order[k].u);
        }
      Vertex start = 0;
      while (start < cp_.n && adj[start].size() != 1) ++start;
      if (start == cp_.n) continue;  // empty column
      std::vector<Vertex> walk{start};
      for (Vertex prev = start, cur = adj[start][0];;) {
        walk.push_back(cur);
        if (adj[cur].size() == 1) break;
        const auto next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
      }
      out.push_back(Path(std::move(walk)).canonical());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Frame {
    std::vector<Vertex> comp;  // saved rows of the columns in s
    std::vector<std::uint8_t> ends, group;
  };

  bool consistent(std::size_t k, std::uint32_t s) const {
    for (std::size_t c = 1; c < slots_; ++c)
      if (group_[c] == group_[c - 1] && !((s >> (c - 1)) & 1u) && ((s >> c) & 1u)) return false;
    const auto [u, v] = cp_.order[k];
    for (auto rest = s; rest; rest &= rest - 1) {
      const auto c = static_cast<std::size_t>(std::countr_zero(rest)) * cp_.n;
      if (deg_[c + u] >= 2 || deg_[c + v] >= 2 || comp_[c + u] == comp_[c + v]) return false;
    }
    for (std::size_t f = 0; f < k; ++f) {
      const auto common = sets_[f] & s;
      if (common == sets_[f] || common == s) return false;
    }
    return true;
  }

  void apply(std::size_t k, std::uint32_t s) {
    auto& fr = frames_[k];
    fr.comp.clear();
    fr.ends = ends_;
    fr.group = group_;
    const auto [u, v] = cp_.order[k];
    for (auto rest = s; rest; rest &= rest - 1) {
      const auto c = static_cast<std::size_t>(std::countr_zero(rest)) * cp_.n;
      fr.comp.insert(fr.comp.end(), comp_.begin() + static_cast<std::ptrdiff_t>(c),
                     comp_.begin() + static_cast<std::ptrdiff_t>(c + cp_.n));
      ++deg_[c + u];
      ++deg_[c + v];
      const auto keep = comp_[c + u], drop = comp_[c + v];
      for (std::size_t x = c; x < c + cp_.n; ++x)
        if (comp_[x] == drop) comp_[x] = keep;
    }
    for (const auto x : cp_.closes[k])
      for (std::size_t c = 0; c < slots_; ++c) ends_[c] += deg_[c * cp_.n + x] == 1;
    std::uint8_t id = 0;
    for (std::size_t c = 0; c < slots_; ++c) {
      if (c > 0 && (fr.group[c] != fr.group[c - 1] || ((s >> c) & 1u) != ((s >> (c - 1)) & 1u))) ++id;
      group_[c] = id;
    }
    sets_.push_back(s);
  }

  void revert(std::size_t k, std::uint32_t s) {
    auto& fr = frames_[k];
    const auto [u, v] = cp_.order[k];
    std::size_t row = 0;
    for (auto rest = s; rest; rest &= rest - 1, row += cp_.n) {
      const auto c = static_cast<std::size_t>(std::countr_zero(rest)) * cp_.n;
      --deg_[c + u];
      --deg_[c + v];
      std::copy_n(fr.comp.begin() + static_cast<std::ptrdiff_t>(row), cp_.n,
                  comp_.begin() + static_cast<std::ptrdiff_t>(c));
    }
    ends_ = fr.ends;
    group_ = fr.group;
    sets_.pop_back();
  }

  bool dfs() {
    if (nodes_ >= node_limit_) throw OutOfBudget{};
    if ((++nodes_ & 1023u) == 0) {
      if (Clock::now() > deadline_) throw Timeout{};
      if (winner_ && winner_->load(std::memory_order_relaxed) < branch_) throw Cancelled{};
    }
    const auto k = sets_.size();
    if (k == cp_.order.size())
      return std::all_of(ends_.begin(), ends_.end(), [](std::uint8_t e) { return e == 0 || e == 2; });
    for (const auto s : masks_) {
      if (!place(s)) continue;
      if (dfs()) return true;
      revert(k, s);
    }
    return false;
  }

  const ColumnProblem& cp_;
  const std::vector<std::uint32_t>& masks_;
  std::size_t slots_;
  Clock::time_point deadline_;
  std::uint64_t node_limit_;
  const std::atomic<std::size_t>* winner_;
  std::size_t branch_;
  std::vector<std::uint8_t> deg_;
  std::vector<Vertex> comp_;  // per column: representative of each vertex's component
  std::vector<std::uint8_t> ends_;
  std::vector<std::uint8_t> group_;
  std::vector<std::uint32_t> sets_;
  std::vector<Frame> frames_;
  std::uint64_t nodes_ = 0;
};

enum class Verdict { found, refuted, undecided };

struct LevelOutcome {
  Verdict verdict = Verdict::refuted;
  std::vector<Path> witness;
  std::uint64_t nodes = 0;
};

enum class BranchStatus : std::uint8_t { open, refuted, found };

struct Round {
  std::optional<std::vector<Path>> witness;
  std::uint64_t nodes = 0;
  bool timed_out = false;
};

// Runs every open branch once under the same node allowance and records the
// ones it settles. The smallest successful branch wins; later branches are
// cancelled once it is known and earlier ones always run to their own end, so
// the outcome does not depend on the thread count. `run(i, winner, allowance,
// nodes)` returns a system, nullopt when branch i has none, or throws.
template <class Run>
Round run_round(std::vector<BranchStatus>& status, std::uint64_t allowance, int threads, Run&& run) {
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < status.size(); ++i)
    if (status[i] == BranchStatus::open) open.push_back(i);
  const auto k = status.size();
  std::atomic<std::size_t> winner{k};
  std::vector<std::optional<std::vector<Path>>> found(k);
  std::atomic<bool> timed_out{false};
  std::atomic<std::uint64_t> nodes{0};
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(open.size()); ++j) {
    const auto branch = open[static_cast<std::size_t>(j)];
    if (timed_out.load() || winner.load() < branch) continue;
    std::uint64_t used = 0;
    try {
      if (auto sol = run(branch, winner, allowance, used)) {
        found[branch] = std::move(sol);
        status[branch] = BranchStatus::found;
        auto cur = winner.load();
        while (branch < cur && !winner.compare_exchange_weak(cur, branch)) {
        }
      } else {
        status[branch] = BranchStatus::refuted;
      }
    } catch (const Timeout&) {
      timed_out = true;
    } catch (const Cancelled&) {
    } catch (const OutOfBudget&) {
    }
    nodes += used;
  }
  Round out;
  out.nodes = nodes.load();
  out.timed_out = timed_out.load();
  if (const auto w = winner.load(); w < k) out.witness = std::move(found[w]);
  return out;
}

// Runs `search.run()` and reports its node count even when it throws.
template <class S>
bool counted(S& search, std::uint64_t& used) {
  try {
    const bool ok = search.run();
    used = search.nodes();
    return ok;
  } catch (...) {
    used = search.nodes();
    throw;
  }
}

class PathEngine {
 public:
  PathEngine(const Problem& pb, std::size_t slots, Clock::time_point deadline)
      : pb_(pb), slots_(slots), deadline_(deadline) {
    if (auto split = Search(pb, deadline).branch_candidates()) cands_ = std::move(*split);
  }
  std::size_t branches() const { return cands_.size(); }

  std::optional<std::vector<Path>> run(std::size_t branch, const std::atomic<std::size_t>& winner,
                                       std::uint64_t allowance, std::uint64_t& used) const {
    Search s(pb_, deadline_, allowance, &winner, branch, slots_ - 1);
    for (std::size_t j = 0; j < branch; ++j) s.exclude(cands_[j]);
    s.take(cands_[branch]);
    if (!counted(s, used)) return std::nullopt;
    auto pick = s.chosen();
    std::sort(pick.begin(), pick.end());
    std::vector<Path> paths;
    for (const auto c : pick) paths.push_back(pb_.candidates[c].path);
    return paths;
  }

 private:
  const Problem& pb_;
  std::size_t slots_;
  Clock::time_point deadline_;
  std::vector<std::size_t> cands_;
};

class ColumnEngine {
 public:
  ColumnEngine(const ColumnProblem& cp, std::size_t slots, Clock::time_point deadline)
      : cp_(cp), slots_(slots), deadline_(deadline), masks_(column_masks(slots)) {
    ColumnSearch(cp, masks_, slots, deadline).prefixes(std::min<std::size_t>(2, cp.order.size()), roots_);
  }
  std::size_t branches() const { return roots_.size(); }

  std::optional<std::vector<Path>> run(std::size_t branch, const std::atomic<std::size_t>& winner,
                                       std::uint64_t allowance, std::uint64_t& used) const {
    ColumnSearch s(cp_, masks_, slots_, deadline_, allowance, &winner, branch);
    for (const auto set : roots_[branch]) s.place(set);
    if (!counted(s, used)) return std::nullopt;
    return s.paths();
  }

 private:
  const ColumnProblem& cp_;
  std::size_t slots_;
  Clock::time_point deadline_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::vector<std::uint32_t>> roots_;
};

// The engines are complementary: candidate-path branching with its packing
// bound settles dense graphs, column assignment settles sparse and cubic ones.
// Each lane keeps its settled branches between rounds and multiplies the
// per-branch allowance by two; the lane that has spent less goes next, with
// spend measured in weighted nodes.
// Node counts are deterministic, so the schedule and the verdict are too.
constexpr std::uint64_t kFirstAllowance = 1024;
// A candidate-path node costs about three column nodes (pair scan over bitsets).
constexpr std::uint64_t kPathNodeWeight = 3;
// Column search enumerates all 2^p sets per edge; above this only candidate paths run.
constexpr std::size_t kMaxColumnSlots = 16;

LevelOutcome solve_level(const Problem& pb, const ColumnProblem& cp, std::size_t slots,
                         Clock::time_point deadline, int threads, OracleEngine engine) {
  struct Lane {
    std::vector<BranchStatus> status;
    std::uint64_t allowance = kFirstAllowance;
    std::uint64_t spent = 0;
  };
  const bool use_paths = engine != OracleEngine::edge_columns || slots > kMaxColumnSlots;
  const bool use_columns = engine != OracleEngine::candidate_paths && slots <= kMaxColumnSlots;
  std::optional<PathEngine> paths;
  std::optional<ColumnEngine> columns;
  Lane lanes[2];
  if (use_paths) {
    paths.emplace(pb, slots, deadline);
    lanes[0].status.assign(paths->branches(), BranchStatus::open);
  }
  if (use_columns) {
    columns.emplace(cp, slots, deadline);
    lanes[1].status.assign(columns->branches(), BranchStatus::open);
  }
  const auto settled = [](const Lane& lane) {
    return std::none_of(lane.status.begin(), lane.status.end(), [](BranchStatus s) { return s == BranchStatus::open; });
  };

  LevelOutcome out;
  for (;;) {
    // either engine refuting every branch settles the level
    if ((use_paths && settled(lanes[0])) || (use_columns && settled(lanes[1]))) return out;
    const std::size_t pick = !use_paths || (use_columns && lanes[1].spent < lanes[0].spent) ? 1 : 0;
    auto& lane = lanes[pick];
    if (Clock::now() > deadline) {
      out.verdict = Verdict::undecided;
      return out;
    }
    const auto round =
        pick == 0 ? run_round(lane.status, lane.allowance, threads,
                              [&](std::size_t b, const auto& w, std::uint64_t a, std::uint64_t& u) {
                                return paths->run(b, w, a, u);
                              })
                  : run_round(lane.status, lane.allowance, threads,
                              [&](std::size_t b, const auto& w, std::uint64_t a, std::uint64_t& u) {
                                return columns->run(b, w, a, u);
                              });
    lane.spent += round.nodes * (pick == 0 ? kPathNodeWeight : 1);
    out.nodes += round.nodes;
    if (round.witness) {
      out.verdict = Verdict::found;
      out.witness = std::move(*round.witness);
      return out;
    }
    if (round.timed_out) {
      out.verdict = Verdict::undecided;
      return out;
    }
    lane.allowance *= 2;
  }
}

OracleResult run_oracle(const Graph& g, const OracleConfig& cfg, int threads) {
  check_limits(g, cfg);
  if (g.edge_count() == 0) throw Error(ErrorKind::precondition, "exact search needs at least one edge");
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.time_budget_seconds));

  const auto problem = make_problem(g, enumerate(g, cfg));
  const auto columns = make_column_problem(g);
  OracleResult res;
  res.enumerated_paths = problem.candidates.size();

  const auto m = g.edge_count();
  const auto singletons = [&] {
    std::vector<Path> paths;
    for (const auto& e : g.edges()) paths.push_back(Path{e.u, e.v});
    return PathSystem(g, std::move(paths));
  };

  res.lower = std::max(g.max_degree(), sperner_lower_bound(m));
  res.upper = m;
  res.witness = singletons();
  if (res.lower >= m) {
    res.lower = m;
    res.conclusive = true;
    return res;
  }

  for (auto p = res.lower; p < m; ++p) {
    if (p > cfg.max_path_budget) return res;  // inconclusive: [p, m]
    auto level = solve_level(problem, columns, p, deadline, threads, cfg.engine);
    res.search_nodes += level.nodes;
    if (level.verdict == Verdict::undecided) return res;  // timed out: [p, m]
    if (level.verdict == Verdict::found) {
      res.lower = res.upper = level.witness.size();
      res.witness = PathSystem(g, std::move(level.witness));
      res.conclusive = true;
      return res;
    }
    res.lower = p + 1;
  }
  res.conclusive = true;  // lower reached m: singletons are optimal
  return res;
}

}  // namespace

std::vector<Path> enumerate_paths(const Graph& g, const OracleConfig& cfg) {
  check_limits(g, cfg);
  std::vector<Path> out;
  for (auto& c : enumerate(g, cfg)) out.push_back(std::move(c.path));
  return out;
}

std::size_t sperner_lower_bound(std::size_t m) {
  if (m <= 1) return m;
  // C(k, floor(k/2)) grows past any size_t m long before k = 70
  for (std::size_t k = 1;; ++k) {
    long double c = 1;
    for (std::size_t i = 1; i <= k / 2; ++i) c = c * static_cast<long double>(k - k / 2 + i) / i;
    if (std::llround(c) >= static_cast<long long>(m)) return k;
  }
}

std::size_t OracleResult::value() const {
  if (!conclusive) throw Error(ErrorKind::limit, fmt::format("inconclusive: ssp in [{}, {}]", lower, upper));
  return lower;
}

OracleResult exact_ssp(const Graph& g, const OracleConfig& cfg) { return run_oracle(g, cfg, cfg.threads); }

namespace serial {
OracleResult exact_ssp(const Graph& g, const OracleConfig& cfg) { return run_oracle(g, cfg, 1); }
}  // namespace serial

FormulaCheck exact_matches_formula(std::size_t a, std::size_t b, const OracleConfig& cfg) {
  FormulaCheck check;
  check.bounds = bipartite_bounds(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
  check.oracle = exact_ssp(complete_bipartite(a, b), cfg);
  if (!check.oracle.conclusive) {
    check.detail = fmt::format("oracle inconclusive: [{}, {}]", check.oracle.lower, check.oracle.upper);
    return check;
  }
  const auto exact = static_cast<std::int64_t>(check.oracle.value());
  if (check.bounds.exact) {
    check.consistent = exact == *check.bounds.exact;
    check.detail = fmt::format("exact {} vs formula {}", exact, *check.bounds.exact);
  } else {
    const auto need = static_cast<std::int64_t>(std::ceil(check.bounds.lower - 1e-9));
    check.consistent = exact >= need;
    check.detail = fmt::format("exact {} vs lower bound {} (ceil {})", exact, format_bound_value(check.bounds.lower), need);
  }
  return check;
}

}  // namespace pathsep

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "pathsep/error.hpp"
#include "pathsep/path_system.hpp"

namespace pathsep::detail {

// Mutable path list with a per-vertex index of which paths end where.
class Assembler {
 public:
  explicit Assembler(std::size_t n) : ends_(n) {}

  std::size_t add(std::vector<Vertex> p) {
    const auto idx = paths_.size();
    ends_.at(p.front()).push_back(idx);
    ends_.at(p.back()).push_back(idx);
    paths_.push_back(std::move(p));
    return idx;
  }

  const std::vector<std::size_t>& ending_at(Vertex v) const { return ends_.at(v); }

  std::optional<std::size_t> lowest_ending_at(Vertex v, std::optional<std::size_t> other_than = {}) const {
    std::optional<std::size_t> best;
    for (const auto idx : ends_.at(v))
      if (idx != other_than && (!best || idx < *best)) best = idx;
    return best;
  }

  // Grows path idx by the edge at-v, where `at` is one of its ends.
  void extend(std::size_t idx, Vertex at, Vertex v) {
    auto& p = paths_.at(idx);
    if (p.back() == at) {
      p.push_back(v);
    } else {
      ensure(p.front() == at, "extended path ends at the attachment vertex");
      p.insert(p.begin(), v);
    }
    auto& list = ends_.at(at);
    list.erase(std::find(list.begin(), list.end(), idx));
    ends_.at(v).push_back(idx);
  }

  std::size_t size() const { return paths_.size(); }

  std::vector<Path> finish() && {
    std::vector<Path> out;
    out.reserve(paths_.size());
    for (auto& p : paths_) out.emplace_back(std::move(p));
    return out;
  }

 private:
  std::vector<std::vector<Vertex>> paths_;
  std::vector<std::vector<std::size_t>> ends_;
};

}  // namespace pathsep::detail

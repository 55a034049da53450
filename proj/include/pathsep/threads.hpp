#pragma once

#include <optional>

namespace pathsep {

/// Reads PATHSEP_MAX_THREADS and, when it holds a positive integer, caps the
/// OpenMP thread count at that value. Returns the cap applied.
std::optional<int> apply_thread_cap_from_env();

}  // namespace pathsep

#include "pathsep/threads.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace pathsep {

std::optional<int> apply_thread_cap_from_env() {
  const char* raw = std::getenv("PATHSEP_MAX_THREADS");
  if (!raw) return std::nullopt;
  try {
    const int cap = std::stoi(raw);
    if (cap <= 0) return std::nullopt;
    if (omp_get_max_threads() > cap) omp_set_num_threads(cap);
    return cap;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace pathsep

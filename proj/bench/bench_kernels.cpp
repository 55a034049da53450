// Serial reference vs OpenMP kernel, one pair per kernel. PATHSEP_MAX_THREADS
// caps the parallel side.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>

#include "pathsep/bipartite.hpp"
#include "pathsep/degenerate.hpp"
#include "pathsep/generators.hpp"
#include "pathsep/oracle.hpp"
#include "pathsep/threads.hpp"

using namespace pathsep;

namespace {

// Large passing systems: the verifier has to compare every pair of edges.
const PathSystem& bipartite_system(std::int64_t b) {
  static std::map<std::int64_t, PathSystem> cache;
  auto it = cache.find(b);
  if (it == cache.end()) it = cache.emplace(b, build_ssp_complete_bipartite(b / 4, b)).first;
  return it->second;
}

const PathSystem& degenerate_system(std::int64_t n) {
  static std::map<std::int64_t, PathSystem> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, build_ssp_2degenerate(random_two_degenerate(static_cast<std::size_t>(n), 11)).system).first;
  return it->second;
}

void BM_verify_bipartite_serial(benchmark::State& st) {
  const auto& sys = bipartite_system(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(serial::verify_strong_separation(sys).pass());
  st.counters["edges"] = static_cast<double>(sys.graph().edge_count());
}

void BM_verify_bipartite_parallel(benchmark::State& st) {
  const auto& sys = bipartite_system(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(verify_strong_separation(sys).pass());
  st.counters["edges"] = static_cast<double>(sys.graph().edge_count());
}

void BM_verify_degenerate_serial(benchmark::State& st) {
  const auto& sys = degenerate_system(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(serial::verify_strong_separation(sys).pass());
}

void BM_verify_degenerate_parallel(benchmark::State& st) {
  const auto& sys = degenerate_system(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(verify_strong_separation(sys).pass());
}

void BM_bipartite_build_serial(benchmark::State& st) {
  const auto b = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(serial::build_ssp_complete_bipartite(b / 4, b).size());
}

void BM_bipartite_build_parallel(benchmark::State& st) {
  const auto b = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(build_ssp_complete_bipartite(b / 4, b).size());
}

const char* const kOracleGraphs[] = {"k33", "prism", "cube", "petersen"};

void BM_oracle_serial(benchmark::State& st) {
  const auto g = named_graph(kOracleGraphs[st.range(0)]);
  st.SetLabel(kOracleGraphs[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(serial::exact_ssp(g).upper);
}

void BM_oracle_parallel(benchmark::State& st) {
  const auto g = named_graph(kOracleGraphs[st.range(0)]);
  st.SetLabel(kOracleGraphs[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(exact_ssp(g).upper);
}

}  // namespace

BENCHMARK(BM_verify_bipartite_serial)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_bipartite_parallel)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_degenerate_serial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_degenerate_parallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bipartite_build_serial)->Arg(400)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bipartite_build_parallel)->Arg(400)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_oracle_parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->Iterations(1);

int main(int argc, char** argv) {
  apply_thread_cap_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}

#include <benchmark/benchmark.h>

#include <random>

#include "maxrho/canonical.hpp"
#include "maxrho/enumeration.hpp"
#include "maxrho/verify.hpp"

using namespace maxrho;

namespace {

void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Graph> graphs;
  for (int i = 0; i < 64; ++i) graphs.push_back(random_connected_graph(rng, n, n));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(9)->Arg(12);

void BM_Enumerate(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const EnumSpec spec{n, n - 2};
  for (auto _ : state) {
    std::size_t count = 0;
    enumerate(spec, [&](const SmallGraph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ExtremalSearch(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extremal_search({n, n - 2}).total_classes);
}
BENCHMARK(BM_ExtremalSearch)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

#include <benchmark/benchmark.h>

#include "maxrho/charpoly.hpp"
#include "maxrho/families.hpp"
#include "maxrho/perron.hpp"
#include "maxrho/roots.hpp"
#include "maxrho/verify.hpp"

using namespace maxrho;

namespace {

void BM_PerronH1(benchmark::State& state) {
  const Graph g = build_H1(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(perron(g).rho);
}
BENCHMARK(BM_PerronH1)->Arg(60)->Arg(200)->Arg(500);

void BM_PerronProfile(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::size_t delta = n % 2 == 1 ? 8 : 7;
  const Graph g = add_loops(build_from_profile(n, delta, default_profile(n, delta, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(perron(g).rho);
}
BENCHMARK(BM_PerronProfile)->Arg(60)->Arg(120);

void BM_CharPolyAdjacency(benchmark::State& state) {
  const IntMatrix a = adjacency_matrix(build_G(static_cast<std::size_t>(state.range(0)), 4));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(a));
}
BENCHMARK(BM_CharPolyAdjacency)->Arg(8)->Arg(16)->Arg(32);

void BM_CharPolyQuotient(benchmark::State& state) {
  const IntMatrix b = named_quotient(QuotientKind::B_n5, state.range(0)).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(b));
}
BENCHMARK(BM_CharPolyQuotient)->Arg(59)->Arg(300);

void BM_CompareMaxRoots(benchmark::State& state) {
  const long n = state.range(0);
  const IntPolynomial f = closed_form(QuotientKind::B2, n);
  const IntPolynomial g = closed_form(QuotientKind::B_n5, n);
  for (auto _ : state) benchmark::DoNotOptimize(compare_max_roots(f, g));
}
BENCHMARK(BM_CompareMaxRoots)->Arg(59)->Arg(301);

void BM_MaxRealRoot(benchmark::State& state) {
  const IntPolynomial f = closed_form(QuotientKind::B1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_real_root(f));
}
BENCHMARK(BM_MaxRealRoot)->Arg(60)->Arg(300);

void BM_CompareFamilies(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compare_families(state.range(0), false).run.passed());
}
BENCHMARK(BM_CompareFamilies)->Arg(60)->Arg(300)->Unit(benchmark::kMillisecond);

}  // namespace

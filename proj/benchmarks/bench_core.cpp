#include <benchmark/benchmark.h>

#include "lct/canonical.hpp"
#include "lct/generator.hpp"
#include "lct/longest_cycles.hpp"
#include "lct/transversal.hpp"
#include "lct/treewidth.hpp"

namespace {

std::vector<lct::Generated> corpus(int n, int k) {
  lct::GenSpec s;
  s.k = k;
  s.n_min = s.n_max = n;
  s.count = 16;
  s.seed = 99;
  return lct::generate(s);
}

void BM_EnumerateLongestCycles(benchmark::State& st) {
  const auto gs = corpus(static_cast<int>(st.range(0)), 3);
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(lct::enumerate_longest_cycles(gs[i++ % gs.size()].graph));
}
BENCHMARK(BM_EnumerateLongestCycles)->DenseRange(9, 15, 2);

void BM_ExactTreewidth(benchmark::State& st) {
  const auto gs = corpus(static_cast<int>(st.range(0)), 3);
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(lct::exact_treewidth(gs[i++ % gs.size()].graph));
}
BENCHMARK(BM_ExactTreewidth)->DenseRange(9, 15, 2);

void BM_DecompositionDp(benchmark::State& st) {
  const auto gs = corpus(static_cast<int>(st.range(0)), 3);
  std::size_t i = 0;
  for (auto _ : st) {
    const auto& g = gs[i++ % gs.size()];
    benchmark::DoNotOptimize(lct::longest_cycle_length_td(g.graph, g.decomposition));
  }
}
BENCHMARK(BM_DecompositionDp)->DenseRange(9, 15, 2);

void BM_ComputeLct(benchmark::State& st) {
  const auto gs = corpus(static_cast<int>(st.range(0)), 4);
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(lct::compute_lct(gs[i++ % gs.size()].graph));
}
BENCHMARK(BM_ComputeLct)->DenseRange(9, 13, 2);

void BM_CanonicalKey(benchmark::State& st) {
  const auto gs = corpus(static_cast<int>(st.range(0)), 3);
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(lct::canonical_key(gs[i++ % gs.size()].graph));
}
BENCHMARK(BM_CanonicalKey)->DenseRange(6, 12, 2);

}  // namespace
BENCHMARK_MAIN();

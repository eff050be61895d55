#include <benchmark/benchmark.h>

#include "hrange/cover.hpp"
#include "hrange/search.hpp"

using namespace hrange;

namespace {

// The best r=0 member at the benchmark's t.
ConcreteBasis bench_basis(i64 t) {
  return instantiate({Family::braunschaedel(), {2, 2, -1, 3, -1, 0}, 0}, t);
}

void BM_CoverNaive(benchmark::State& state) {
  const ConcreteBasis b = bench_basis(state.range(0));
  i64 cover = 0;
  for (auto _ : state) {
    cover = cover_naive(b).cover;
    benchmark::DoNotOptimize(cover);
  }
  state.counters["cover"] = static_cast<double>(cover);
  state.SetItemsProcessed(state.iterations() * cover);
}
BENCHMARK(BM_CoverNaive)->Arg(8)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CoverFast(benchmark::State& state) {
  const ConcreteBasis b = bench_basis(state.range(0));
  i64 cover = 0;
  for (auto _ : state) {
    cover = cover_fast(b).cover;
    benchmark::DoNotOptimize(cover);
  }
  state.counters["cover"] = static_cast<double>(cover);
  state.SetItemsProcessed(state.iterations() * cover);
}
BENCHMARK(BM_CoverFast)->Arg(8)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CanRepresent(benchmark::State& state) {
  const ConcreteBasis b = bench_basis(16);
  const i64 target = cover_fast(b).first_gap;  // the hardest value to refute
  for (auto _ : state) {
    bool hit = can_represent(target, b);
    benchmark::DoNotOptimize(hit);
  }
}
BENCHMARK(BM_CanRepresent);

void BM_AdmissiblePrefix(benchmark::State& state) {
  const ConcreteBasis b = bench_basis(state.range(0));
  for (auto _ : state) {
    auto res = admissible_prefix(b);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_AdmissiblePrefix)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_EvaluateCandidateRejected(benchmark::State& state) {
  using namespace hrange::search;
  const ParametricBasis pb{Family::braunschaedel(), {2, 2, -1, 3, -1, 0}, 0};
  const i64 t = state.range(0);
  const CoverResult cr = cover_fast(instantiate(pb, t));
  // Against a champion one better, the candidate fails its own first gap
  // and dies in the target check instead of a multi-ms cover scan.
  TargetCache cache;
  cache.add(cr.first_gap);
  PrefixCoverCache prefix;
  for (auto _ : state) {
    auto out = evaluate_candidate(pb, t, cr.cover + 1, cache, {}, &prefix);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_EvaluateCandidateRejected)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();

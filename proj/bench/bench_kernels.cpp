// Serial reference vs OpenMP kernels. Arg 0 is the serial path, 1 the parallel one.

#include <benchmark/benchmark.h>

#include "itercurves/curves.hpp"
#include "itercurves/galois.hpp"
#include "itercurves/search.hpp"
#include "itercurves/zeta.hpp"

using namespace itc;

namespace {

void BM_CharSum(benchmark::State& state) {
  auto F = make_field(1000003, 1);
  const auto h = F->reduce(curve_f(2).h());
  const bool par = state.range(0) != 0;
  for (auto _ : state) {
    auto s = par ? kernels::char_sum_omp(*F, h) : kernels::char_sum_serial(*F, h);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(F->q()));
}

void BM_CharSumExtension(benchmark::State& state) {
  auto F = make_field(101, 3);
  const auto h = F->reduce(curve_c(BigRat(-2), 3).h());
  const bool par = state.range(0) != 0;
  for (auto _ : state) {
    auto s = par ? kernels::char_sum_omp(*F, h) : kernels::char_sum_serial(*F, h);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(F->q()));
}

void BM_NaiveSearch(benchmark::State& state) {
  const HyperCurve C = curve_f(2);
  const BigInt H(60);
  const bool par = state.range(0) != 0;
  for (auto _ : state) {
    PointList l = par ? naive_search(C, H) : naive_search_serial(C, H);
    benchmark::DoNotOptimize(l.points.data());
  }
}

void BM_Scan(benchmark::State& state) {
  const ScanRange r{ScanRange::Kind::Rationals, BigInt(25)};
  const bool par = state.range(0) != 0;
  for (auto _ : state) {
    auto v = par ? scan_newly_small(4, r) : scan_newly_small_serial(4, r);
    benchmark::DoNotOptimize(v.data());
  }
}

}  // namespace

BENCHMARK(BM_CharSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharSumExtension)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NaiveSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

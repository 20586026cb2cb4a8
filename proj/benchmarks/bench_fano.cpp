#include "biquad/fano.hpp"
#include "biquad/localcert.hpp"
#include "example.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace biquad;

void BM_VerifyFanoPoint(benchmark::State& state) {
  const PencilInput& in = example_input();
  const auto& w = in.fano_witnesses.back();
  FanoSystem s = fano_system(in.pencil(), w.chart);
  for (auto _ : state) benchmark::DoNotOptimize(verify_fano_point(s, w.coords, w.prime));
}
BENCHMARK(BM_VerifyFanoPoint)->Unit(benchmark::kMicrosecond);

void BM_HenselLift(benchmark::State& state) {
  const PencilInput& in = example_input();
  const auto& w = in.fano_witnesses.back();
  FanoSystem s = fano_system(in.pencil(), w.chart);
  for (auto _ : state)
    benchmark::DoNotOptimize(hensel_certify(s, w.coords, w.prime, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_HenselLift)->Arg(3)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_ExhaustiveSearch(benchmark::State& state) {
  PencilOfQuadrics p = example_input().pencil();
  SearchOptions opts;
  opts.charts = {GrassmannChart::standard()};
  for (auto _ : state) benchmark::DoNotOptimize(search_smooth_points(p, static_cast<std::uint64_t>(state.range(0)), opts));
}
BENCHMARK(BM_ExhaustiveSearch)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SampledSearch(benchmark::State& state) {
  PencilOfQuadrics p = example_input().pencil();
  SearchOptions opts;
  opts.budget = static_cast<std::size_t>(state.range(0));
  opts.charts = {GrassmannChart::standard()};
  for (auto _ : state) benchmark::DoNotOptimize(search_smooth_points(p, 1000003, opts));
}
BENCHMARK(BM_SampledSearch)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

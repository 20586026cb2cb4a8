#include "biquad/reduction.hpp"
#include "example.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace biquad;

void BM_KernelGuidedLocus(benchmark::State& state) {
  PencilOfQuadrics p = example_input().pencil();
  for (auto _ : state) benchmark::DoNotOptimize(singular_locus(p, 149743897, LocusMethod::kernel_guided));
}
BENCHMARK(BM_KernelGuidedLocus)->Unit(benchmark::kMicrosecond);

void BM_ExhaustiveLocus(benchmark::State& state) {
  PencilOfQuadrics p = example_input().pencil();
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(singular_locus(p, q, LocusMethod::exhaustive));
}
BENCHMARK(BM_ExhaustiveLocus)->Arg(3)->Arg(5)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_Mod2Degeneracy(benchmark::State& state) {
  PencilOfQuadrics p = example_input().pencil();
  for (auto _ : state) benchmark::DoNotOptimize(mod2_degeneracy(p));
}
BENCHMARK(BM_Mod2Degeneracy)->Unit(benchmark::kMicrosecond);

}  // namespace

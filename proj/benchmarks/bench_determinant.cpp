#include "biquad/exactmath/determinant.hpp"
#include "biquad/pencil.hpp"
#include "example.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace biquad;

Matrix<BigInt> random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-99, 99);
  Matrix<BigInt> m(n, n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

void BM_BareissInteger(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(det_integer(m));
}
BENCHMARK(BM_BareissInteger)->DenseRange(4, 16, 4);

void BM_CofactorInteger(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(det_cofactor(m));
}
BENCHMARK(BM_CofactorInteger)->DenseRange(4, 8, 2);

void BM_CharacteristicForm(benchmark::State& state) {
  const PencilInput& in = example_input();
  for (auto _ : state) {
    PencilOfQuadrics p(in.q1, in.q2);
    benchmark::DoNotOptimize(p.char_form());
  }
}
BENCHMARK(BM_CharacteristicForm)->Unit(benchmark::kMicrosecond);

}  // namespace

// Parallel kernels against the serial reference versions.

#include <benchmark/benchmark.h>

#include <vector>

#include "svda/kernels.hpp"
#include "svda/random.hpp"

namespace k = svda::kernels;
namespace ref = svda::kernels::reference;

namespace {

std::vector<double> randn(std::size_t n, std::uint64_t seed) {
  svda::Rng rng(seed);
  std::vector<double> v(n);
  for (double& x : v) x = rng.normal();
  return v;
}

// Token-major activations of a 64-image batch through the fashion model:
// 64 * 50 rows of width 256.
constexpr std::size_t kRows = 64 * 50;
constexpr std::size_t kWidth = 256;

template <bool Parallel>
void BM_Gemm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = randn(kRows * kWidth, 1), b = randn(kWidth * n, 2);
  std::vector<double> c(kRows * n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      k::gemm(a, k::Transpose::No, b, k::Transpose::No, c, {kRows, n, kWidth}, false);
    } else {
      ref::gemm(a, k::Transpose::No, b, k::Transpose::No, c, {kRows, n, kWidth}, false);
    }
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kRows * n * kWidth));
}

template <bool Parallel>
void BM_Softmax(benchmark::State& state) {
  const std::size_t cols = 50;
  const auto x = randn(64 * 4 * 50 * cols, 3);
  std::vector<double> y(x.size());
  for (auto _ : state) {
    if constexpr (Parallel) k::softmax_rows(x, y, cols);
    else ref::softmax_rows(x, y, cols);
    benchmark::DoNotOptimize(y.data());
  }
}

template <bool Parallel>
void BM_LayerNorm(benchmark::State& state) {
  const auto x = randn(kRows * kWidth, 4), gamma = randn(kWidth, 5), beta = randn(kWidth, 6);
  std::vector<double> y(x.size()), xh(x.size()), rs(kRows);
  for (auto _ : state) {
    if constexpr (Parallel) k::layer_norm_rows(x, gamma, beta, y, xh, rs, kWidth, 1e-5);
    else ref::layer_norm_rows(x, gamma, beta, y, xh, rs, kWidth, 1e-5);
    benchmark::DoNotOptimize(y.data());
  }
}

template <bool Parallel>
void BM_Gelu(benchmark::State& state) {
  const auto x = randn(kRows * 1024, 7);
  std::vector<double> y(x.size());
  for (auto _ : state) {
    if constexpr (Parallel) k::gelu(x, y);
    else ref::gelu(x, y);
    benchmark::DoNotOptimize(y.data());
  }
}

}  // namespace

BENCHMARK(BM_Gemm<true>)->Name("gemm/parallel")->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gemm<false>)->Name("gemm/reference")->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Softmax<true>)->Name("softmax/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Softmax<false>)->Name("softmax/reference")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LayerNorm<true>)->Name("layer_norm/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LayerNorm<false>)->Name("layer_norm/reference")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gelu<true>)->Name("gelu/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gelu<false>)->Name("gelu/reference")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

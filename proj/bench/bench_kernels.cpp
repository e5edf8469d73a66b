// Parallel kernels against their serial references. Each pair takes the same
// input; the argument is the problem size.

#include <benchmark/benchmark.h>

#include <random>

#include "braidforge/kernels.hpp"
#include "braidforge/premodular.hpp"
#include "braidforge/qform.hpp"

using namespace braidforge;

namespace {

std::vector<RootExp> random_exponents(int64_t n, int64_t den) {
  std::mt19937_64 rng(7);
  std::vector<RootExp> v;
  v.reserve(n);
  for (int64_t i = 0; i < n; ++i) v.emplace_back(static_cast<int64_t>(rng() % den), den);
  return v;
}

void BM_Histogram(benchmark::State& state) {
  auto v = random_exponents(state.range(0), 48);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::exponent_histogram(v, 48, 1));
}

void BM_HistogramSerial(benchmark::State& state) {
  auto v = random_exponents(state.range(0), 48);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::exponent_histogram(v, 48, 1));
}

// The serial reference adds one embedded root at a time instead of counting.
void BM_RootSum(benchmark::State& state) {
  auto v = random_exponents(state.range(0), 48);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::root_sum(v, 1));
}

void BM_RootSumSerial(benchmark::State& state) {
  auto v = random_exponents(state.range(0), 48);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::root_sum(v, 1));
}

// Pointed datum on (Z/n)^2 with the hyperbolic-style form q(x,y) = xy/n.
PreModularDatum pointed(int64_t n) {
  return pointed_datum(form_from_parameters(FinAbGroup({n, n}), {RootExp(), RootExp()}, {RootExp(1, n)}));
}

void BM_SMatrix(benchmark::State& state) {
  PreModularDatum d = pointed(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s_matrix(d.ring(), d.twists(), d.dims()));
}

void BM_SMatrixSerial(benchmark::State& state) {
  PreModularDatum d = pointed(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::s_matrix(d.ring(), d.twists(), d.dims()));
}

// Metric test over every form on a fixed group.
FinAbGroup sweep_group(int64_t which) { return which == 0 ? FinAbGroup({2, 2, 4}) : FinAbGroup({2, 2, 2, 2}); }

void BM_FormSweep(benchmark::State& state) {
  const FinAbGroup g = sweep_group(state.range(0));
  const int64_t n = count_forms(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::parallel_map(static_cast<size_t>(n), [&](size_t i) {
      return is_metric(form_at(g, static_cast<int64_t>(i)));
    }));
}

void BM_FormSweepSerial(benchmark::State& state) {
  const FinAbGroup g = sweep_group(state.range(0));
  const int64_t n = count_forms(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::serial::parallel_map(static_cast<size_t>(n), [&](size_t i) {
      return is_metric(form_at(g, static_cast<int64_t>(i)));
    }));
}

}  // namespace

BENCHMARK(BM_Histogram)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 22)->UseRealTime();
BENCHMARK(BM_HistogramSerial)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 22)->UseRealTime();
BENCHMARK(BM_RootSum)->Arg(1 << 10)->Arg(1 << 14)->UseRealTime();
BENCHMARK(BM_RootSumSerial)->Arg(1 << 10)->Arg(1 << 14)->UseRealTime();
BENCHMARK(BM_SMatrix)->Arg(4)->Arg(6)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SMatrixSerial)->Arg(4)->Arg(6)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FormSweep)->Arg(0)->Arg(1)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FormSweepSerial)->Arg(0)->Arg(1)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

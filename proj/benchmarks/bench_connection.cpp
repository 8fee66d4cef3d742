#include <benchmark/benchmark.h>

#include "mjb/bernstein_to_jacobi.hpp"
#include "mjb/degree_reduction.hpp"
#include "mjb/jacobi_to_bernstein.hpp"

namespace {

mjb::TransformParams params(const benchmark::State& s) {
  return {static_cast<int>(s.range(0)), 1, 1, 0.0, 0.0};
}

template <auto Build>
void BM_build(benchmark::State& state) {
  const auto p = params(state);
  for (auto _ : state) benchmark::DoNotOptimize(Build(p, mjb::BuildOptions{}));
  state.SetComplexityN(state.range(0));
}

template <auto Build>
void BM_build_plain(benchmark::State& state) {
  const auto p = params(state);
  for (auto _ : state) benchmark::DoNotOptimize(Build(p));
  state.SetComplexityN(state.range(0));
}

void BM_build_parallel(benchmark::State& state) {
  const auto p = params(state);
  for (auto _ : state) benchmark::DoNotOptimize(mjb::d_theorem4(p, {true, nullptr}));
}

void BM_reduce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> v(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) v[j] = (j * 37 % 11) / 11.0;
  const mjb::ReductionProblem prob{mjb::BezierCurve::from_values(v), n / 2, 1, 1, 0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(mjb::reduce(prob));
}

}  // namespace

BENCHMARK(BM_build<mjb::c_theorem1>)->Name("c_theorem1")->RangeMultiplier(2)->Range(16, 512)->Complexity();
BENCHMARK(BM_build<mjb::c_theorem2>)->Name("c_theorem2")->RangeMultiplier(2)->Range(16, 512)->Complexity();
BENCHMARK(BM_build<mjb::d_theorem3>)->Name("d_theorem3")->RangeMultiplier(2)->Range(16, 512)->Complexity();
BENCHMARK(BM_build<mjb::d_theorem4>)->Name("d_theorem4")->RangeMultiplier(2)->Range(16, 512)->Complexity();
BENCHMARK(BM_build_plain<mjb::c_oracle>)->Name("c_oracle")->RangeMultiplier(2)->Range(16, 128)->Complexity();
BENCHMARK(BM_build_plain<mjb::d_oracle>)->Name("d_oracle")->RangeMultiplier(2)->Range(16, 128)->Complexity();
BENCHMARK(BM_build_plain<mjb::c_direct>)->Name("c_direct")->RangeMultiplier(2)->Range(16, 128)->Complexity();
BENCHMARK(BM_build_parallel)->Name("d_theorem4_parallel")->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_reduce)->Name("reduce")->RangeMultiplier(2)->Range(8, 64);

BENCHMARK_MAIN();

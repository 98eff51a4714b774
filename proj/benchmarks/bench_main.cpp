#include <benchmark/benchmark.h>

#include <memory>

#include "ohpade/ohpade.hpp"

using namespace ohpade;

namespace {

MeasureSpec measure_for(int which) {
  switch (which) {
    case 0: return MeasureSpec::circle();
    case 1: return MeasureSpec::chebyshev();
    default: return MeasureSpec::legendre();
  }
}

void BM_BasisBuild(benchmark::State& state) {
  const MeasureSpec m = measure_for(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(OrthoBasis::build(m, n));
}
BENCHMARK(BM_BasisBuild)->ArgsProduct({{0, 1, 2}, {30, 120}})->Unit(benchmark::kMillisecond);

void BM_CoeffTable(benchmark::State& state) {
  const auto method = state.range(0) == 0 ? CoeffMethod::contour : CoeffMethod::quadrature;
  const auto& e = catalog_entry("interval_theta");
  auto basis = std::make_shared<const OrthoBasis>(OrthoBasis::build(e.measure, 40));
  for (auto _ : state) {
    CoeffTable t(basis, e.system.functions[0], method);
    t.ensure(2, 40);
    benchmark::DoNotOptimize(t.at(2, 40));
  }
  state.SetLabel(to_string(method));
}
BENCHMARK(BM_CoeffTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  const char* ids[] = {"circle_theta06", "interval_theta", "interval_d2"};
  const auto cfg = ExperimentConfig::from_entry(catalog_entry(ids[state.range(0)]), 5, 30);
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg));
  state.SetLabel(ids[state.range(0)]);
}
BENCHMARK(BM_Sweep)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Roots(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  std::vector<Complex> roots;
  for (int j = 0; j < deg; ++j) roots.push_back(std::polar(1.5 + 0.1 * j, 0.7 * j));
  const Poly p = poly_from_roots(roots);
  for (auto _ : state) benchmark::DoNotOptimize(root_list(p));
}
BENCHMARK(BM_Roots)->Arg(2)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();

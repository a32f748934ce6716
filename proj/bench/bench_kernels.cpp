// Serial vs OpenMP-parallel timings of the main kernels.
#include <benchmark/benchmark.h>

#include "parahess/catalog.hpp"
#include "parahess/focal.hpp"
#include "parahess/form_io.hpp"
#include "parahess/hessian.hpp"
#include "parahess/sampling.hpp"

using namespace parahess;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

const QPoly& dense_quartic() {
  static const QPoly f = parse_polynomial(
      "x0^4 + x1^4 + x2^4 + x3^4 + x4^4 + x0*x1*x2*x3 + x1*x2*x3*x4 + 2*x0^2*x4^2 - x1^3*x3 + x2^2*x3*x4", 5);
  return f;
}

void BM_DetCofactor(benchmark::State& state) {
  const auto h = hessian_matrix(dense_quartic());
  for (auto _ : state) benchmark::DoNotOptimize(det_cofactor(h, exec_of(state)));
}

void BM_DetBareiss(benchmark::State& state) {
  const auto h = hessian_matrix(dense_quartic());
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(h, exec_of(state)));
}

void BM_SampleParabolicIndex(benchmark::State& state) {
  const auto f = catalog_lookup("perazzo").form.poly;
  SamplingOptions opts;
  opts.samples = 64;
  opts.certify = false;
  opts.execution = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(generic_parabolic_index(f, opts));
}

void BM_FocalProbesNumeric(benchmark::State& state) {
  const auto e = catalog_lookup("developable3");
  ProbeOptions opts;
  opts.mode = FocalMode::numeric;
  opts.directions = 32;
  opts.execution = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(probe_catalog_entry(e, opts));
}

}  // namespace

BENCHMARK(BM_DetCofactor)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetBareiss)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleParabolicIndex)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FocalProbesNumeric)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

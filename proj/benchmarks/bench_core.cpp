#include <benchmark/benchmark.h>

#include "gegenbauer/maximal.hpp"
#include "gegenbauer/measure.hpp"
#include "gegenbauer/quadrature.hpp"
#include "gegenbauer/riesz.hpp"
#include "gegenbauer/shift.hpp"
#include "gegenbauer/special_functions.hpp"
#include "gegenbauer/transform.hpp"

using namespace gegenbauer;

namespace {

const GegenbauerParams kParams(0.25);

void BM_Hyp2F1(benchmark::State& state) {
  double z = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_2f1(1.0, 0.25, 1.125, 0.5 + z));
    z = z > 0.3 ? 0.0 : z + 1e-3;
  }
}
BENCHMARK(BM_Hyp2F1);

void BM_LegendreP(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(legendre_p(kParams, 2.5, x));
}
BENCHMARK(BM_LegendreP)->Arg(1)->Arg(10)->Arg(40);

void BM_SingularIntegral(benchmark::State& state) {
  const auto spec = QuadratureSpec{}.with_singularity(-0.5, -0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate_singular([](double p) { return std::cos(0.3 * p); }, 0.0, M_PI, spec).value);
}
BENCHMARK(BM_SingularIntegral);

void BM_BallMeasure(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ball_measure(kParams, WeightedInterval(1.0, 0.7)));
}
BENCHMARK(BM_BallMeasure);

void BM_ShiftApply(benchmark::State& state) {
  const auto f = bump(1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(shift_apply(kParams, f, 0.5, 1.5));
}
BENCHMARK(BM_ShiftApply);

void BM_ShiftAverage(benchmark::State& state) {
  const auto f = bump(1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(shift_average_integral(kParams, f, 1.5, 0.5));
}
BENCHMARK(BM_ShiftAverage)->Unit(benchmark::kMillisecond);

void BM_MaximalG(benchmark::State& state) {
  const auto f = bump(1.0, 2.0);
  const auto grid = RadiusGrid::standard();
  for (auto _ : state) benchmark::DoNotOptimize(maximal_G(kParams, f, 1.5, grid));
}
BENCHMARK(BM_MaximalG)->Unit(benchmark::kMillisecond);

void BM_HeatKernel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(heat_kernel(kParams, 0.5, 1.0));
}
BENCHMARK(BM_HeatKernel)->Unit(benchmark::kMicrosecond);

void BM_ForwardP(benchmark::State& state) {
  const auto f = bump(1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(forward_p(kParams, f, Degree(1.5)));
}
BENCHMARK(BM_ForwardP)->Unit(benchmark::kMicrosecond);

void BM_QRow(benchmark::State& state) {
  const auto gammas = spectral_grid(kParams).gamma;
  for (auto _ : state) benchmark::DoNotOptimize(legendre_q_row(kParams, 0.5, gammas).values.data());
}
BENCHMARK(BM_QRow)->Unit(benchmark::kMillisecond);

void BM_RieszApply(benchmark::State& state) {
  const PotentialParams pp(kParams, 0.5, 2.0);
  const auto f = bump(1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(riesz_apply(kParams, pp, f, 1.5));
}
BENCHMARK(BM_RieszApply)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

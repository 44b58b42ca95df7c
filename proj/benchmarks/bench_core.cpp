#include <benchmark/benchmark.h>

#include "isomono/algebra.hpp"
#include "isomono/matelem.hpp"
#include "isomono/nsym.hpp"
#include "isomono/radial.hpp"
#include "isomono/wigner.hpp"

using namespace isomono;

namespace {

angular::TripletState bench_state(HalfInt j) {
  auto bump = [](double c, double w) -> angular::RadialAmp {
    return [=](double r) { return cplx(std::exp(-(r - c) * (r - c) / (2 * w)), 0.1); };
  };
  return angular::sector_state(0.0, j, HalfInt{1}, +1, cplx{0.3, 0.0}, cplx{0.1, 0.0},
                               bump(2.0, 1.0), bump(2.5, 1.2), bump(3.0, 0.7), bump(3.5, 1.4),
                               bump(2.2, 0.9), bump(2.8, 1.1));
}

}  // namespace

static void BM_WignerSmallD(benchmark::State& state) {
  const int twoj = static_cast<int>(state.range(0));
  double th = 0.1;
  for (auto _ : state) {
    th += 1e-6;
    benchmark::DoNotOptimize(
        wigner::small_d(HalfInt{twoj}, HalfInt{1}, HalfInt{twoj % 2 ? 1 : 0}, th));
  }
}
BENCHMARK(BM_WignerSmallD)->Arg(3)->Arg(9)->Arg(21)->Arg(39);

static void BM_AxisRotation(benchmark::State& state) {
  const Vec3 n = iso3::n_of(1.1, 0.7);
  cplx A{0.9, 0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(iso3::axis_rotation(A, n));
  }
}
BENCHMARK(BM_AxisRotation);

static void BM_AssembleState(benchmark::State& state) {
  const auto st = bench_state(HalfInt{3});
  double th = 0.2;
  for (auto _ : state) {
    th += 1e-7;
    benchmark::DoNotOptimize(angular::assemble_state(st, 1.7, th, 0.9));
  }
}
BENCHMARK(BM_AssembleState);

static void BM_RadialIntegrate(benchmark::State& state) {
  radial::Params p;
  p.epsilon = 0.8;
  p.mass = 0.5;
  p.j = HalfInt{3};
  p.delta = +1;
  p.alpha = cplx{1, 0};
  p.profile = gauges::builtin_profile("bps:1");
  const auto sys = radial::assemble(radial::Case::reduced_W, p);
  Eigen::VectorXcd y0(6);
  for (int i = 0; i < 6; ++i) y0(i) = cplx(0.3 + 0.1 * i, -0.2);
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(radial::integrate(sys, 1e-3, 10.0, y0, tol));
  }
}
BENCHMARK(BM_RadialIntegrate)->Arg(8)->Arg(10)->Arg(12);

static void BM_MatrixElement(benchmark::State& state) {
  const auto st = bench_state(HalfInt{3});
  matelem::Observable g;
  g.iso = iso3::t3();
  matelem::QuadratureOptions opts;
  opts.n_theta = static_cast<int>(state.range(0));
  opts.n_phi = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(matelem::matrix_element(st, g, st, opts));
  }
}
BENCHMARK(BM_MatrixElement)->Arg(32)->Arg(96);

static void BM_CommutationDichotomy(benchmark::State& state) {
  const auto bps = gauges::builtin_profile("bps:1");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        radial::commutation_dichotomy(bps, HalfInt{3}, std::exp(cplx(0, 0.7)), {1.0}));
  }
}
BENCHMARK(BM_CommutationDichotomy);

BENCHMARK_MAIN();

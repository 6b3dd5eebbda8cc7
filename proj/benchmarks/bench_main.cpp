#include <benchmark/benchmark.h>

#include <complex>

#include "selberg/branching.hpp"
#include "selberg/characters.hpp"
#include "selberg/plancherel.hpp"
#include "selberg/zeta.hpp"

using namespace selberg;

namespace {

LengthSpectrum synthetic(int n) {
  LengthSpectrum s;
  s.n = n;
  const int k = (n - 1) / 2;
  for (int i = 0; i < 5; ++i) {
    GeodesicClass g;
    g.length = 0.6 + 0.5 * i;
    for (int j = 0; j < k; ++j) g.holonomy_angles.push_back(0.3 + 0.7 * i - 0.4 * j);
    g.spin_lift_sign = i % 2 == 0 ? 1 : -1;
    g.chi_angles = {0.1 * i};
    s.primitives.push_back(g);
  }
  return s;
}

void BM_Freudenthal(benchmark::State& state) {
  const RootSystem b = build_root_system(Series::B, static_cast<int>(state.range(0)));
  std::vector<int> hw(static_cast<std::size_t>(state.range(0)), 2);
  hw[0] = 6;
  const Weight w = Weight::from_doubled(hw);
  for (auto _ : state) {
    // Tables are memoized, so this times the cached lookup after the first round.
    benchmark::DoNotOptimize(freudenthal_weights(b, w)->total());
  }
}
BENCHMARK(BM_Freudenthal)->Arg(2)->Arg(3)->Arg(4);

void BM_TensorDecompose(benchmark::State& state) {
  const RootSystem b = build_root_system(Series::B, 3);
  const Weight a = Weight::parse("2,1,0");
  const Weight c = Weight::parse("1,1,1");
  for (auto _ : state) benchmark::DoNotOptimize(tensor_decompose(b, a, c).dimension());
}
BENCHMARK(BM_TensorDecompose);

void BM_SelbergLog(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LengthSpectrum spec = synthetic(n);
  const MType sigma = make_mtype(n, Weight::zero(static_cast<std::size_t>((n - 1) / 2)));
  const std::complex<double> s(0.5 * (n - 1) + 1.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(selberg_log(s, sigma, spec).log_value);
}
BENCHMARK(BM_SelbergLog)->Arg(3)->Arg(5);

void BM_EulerDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LengthSpectrum spec = synthetic(n);
  const MType sigma = make_mtype(n, Weight::zero(static_cast<std::size_t>((n - 1) / 2)));
  const std::complex<double> s(0.5 * (n - 1) + 1.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(selberg_euler_direct(s, sigma, spec).log_value);
}
BENCHMARK(BM_EulerDirect)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_FriedFactorization(benchmark::State& state) {
  const LengthSpectrum spec = synthetic(5);
  for (auto _ : state) benchmark::DoNotOptimize(fried_factorization_log(5.0, spec).log_value);
}
BENCHMARK(BM_FriedFactorization);

void BM_SphereSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MType sigma = make_mtype(n, Weight::half_ones(static_cast<std::size_t>((n - 1) / 2)));
  for (auto _ : state) benchmark::DoNotOptimize(sphere_spectrum(n, sigma, 20).size());
}
BENCHMARK(BM_SphereSpectrum)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

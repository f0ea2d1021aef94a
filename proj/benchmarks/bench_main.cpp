#include <benchmark/benchmark.h>

#include <cmath>

#include "dsdirac/angular.hpp"
#include "dsdirac/horizon.hpp"
#include "dsdirac/ode_oracle.hpp"
#include "dsdirac/radial.hpp"
#include "dsdirac/spinor.hpp"

using namespace dsdirac;

namespace {

void BM_Hyp2f1Series(benchmark::State& state) {
  const HypParams p(cplx(1.2, -0.7), cplx(0.3, 1.1), 2.5);
  const double z = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(hyp2f1(p, z));
}
BENCHMARK(BM_Hyp2f1Series)->Arg(10)->Arg(50)->Arg(85)->Arg(95)->Arg(99);

void BM_KummerConnection(benchmark::State& state) {
  const HypParams p = f_channel_params(system_params(1.3, 0.8, 1.7));
  for (auto _ : state) benchmark::DoNotOptimize(kummer_connection(p, KummerDirection::U1ToU2U6));
}
BENCHMARK(BM_KummerConnection);

void BM_WignerD(benchmark::State& state) {
  const HalfInt j = HalfInt::from_twice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wigner_d(j, kHalf, -kHalf, 1.1));
}
BENCHMARK(BM_WignerD)->Arg(1)->Arg(9)->Arg(41);

void BM_RadialPairValues(benchmark::State& state) {
  const RadialPair p = make_radial_pair(Kind::Regular, 1.1, 0.9, 2.3);
  for (auto _ : state) benchmark::DoNotOptimize(p.values(0.6));
}
BENCHMARK(BM_RadialPairValues);

void BM_Decompose(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(decompose(Channel::F, Kind::Regular, 1.1, 0.9, 2.3));
}
BENCHMARK(BM_Decompose);

void BM_Integrate(benchmark::State& state) {
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  const SystemSpec sys = make_system(SystemId::ZForm, 1.1, 0.9, 2.3);
  const State s = seed_regular(sys, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(integrate(sys, 0.05, 0.9, s, tol));
}
BENCHMARK(BM_Integrate)->Arg(6)->Arg(9)->Arg(12);

void BM_Assemble(benchmark::State& state) {
  const QuantumNumbers qn =
      make_quantum_numbers(1.0, 1.0, HalfInt::from_twice(2), HalfInt::from_twice(3), HalfInt::from_twice(-1));
  const RadialPair pair = pair_for(qn, Kind::Regular);
  for (auto _ : state) benchmark::DoNotOptimize(assemble(qn, pair, {0.3, 0.5, 1.0, 0.2}));
}
BENCHMARK(BM_Assemble);

}  // namespace
BENCHMARK_MAIN();

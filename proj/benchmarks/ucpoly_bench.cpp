#include "ucpoly/oracle.hpp"
#include "ucpoly/polycore.hpp"
#include "ucpoly/separation.hpp"
#include "ucpoly/verify.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ucpoly;

namespace {

UCInstance general(int T) { return make_instance(T, 1, 2, 1, 3, Rational(3, 2), 1); }

// Arbitrary fractional point inside the variable bounds.
Point scrambled(const UCInstance& inst, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const VariableSpace sp(inst.T);
  Point p(static_cast<std::size_t>(sp.size()));
  std::uniform_int_distribution<int> d(0, 6);
  for (int t = 1; t <= inst.T; ++t) {
    p[sp.y(t)] = Rational(d(rng), 6);
    p[sp.x(t)] = p[sp.y(t)] * inst.Cmax * Rational(d(rng), 6);
    if (t >= 2) p[sp.u(t)] = Rational(d(rng), 12);
  }
  return p;
}

void BM_ExtremePoints(benchmark::State& state) {
  const auto inst = general(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extreme_points(inst, Variant::Up));
}
BENCHMARK(BM_ExtremePoints)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_DoubleDescription(benchmark::State& state) {
  const auto sys = hull_system(general(static_cast<int>(state.range(0))), HullTarget::Up,
                               HullOptions{{}, Reading::Amended});
  for (auto _ : state) benchmark::DoNotOptimize(dd_enumerate(sys));
}
BENCHMARK(BM_DoubleDescription)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_Simplex(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  const auto sys = hull_system(general(T), HullTarget::Up, HullOptions{{}, Reading::Amended});
  std::mt19937_64 rng(1);
  const auto obj = random_objective(VariableSpace(T).size(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(lp_solve(sys, obj, Optimize::Min));
}
BENCHMARK(BM_Simplex)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_SeparateFamily(benchmark::State& state) {
  const auto inst = make_instance(static_cast<int>(state.range(0)), 1, 1, 0, 5, Rational(1, 2), 1);
  const auto p = scrambled(inst, 2);
  const auto f = static_cast<Family>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(separate_family(inst, f, p));
}
BENCHMARK(BM_SeparateFamily)
    ->ArgsProduct({{6, 12, 24}, {static_cast<long>(Family::F7), static_cast<long>(Family::F8),
                                 static_cast<long>(Family::F9)}});

void BM_EnumerateFamily(benchmark::State& state) {
  const auto inst = make_instance(static_cast<int>(state.range(0)), 1, 1, 0, 5, Rational(1, 2), 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_family(inst, Family::F7));
}
BENCHMARK(BM_EnumerateFamily)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();

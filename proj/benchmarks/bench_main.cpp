#include <benchmark/benchmark.h>

#include "hmon/ar_theory.hpp"
#include "hmon/random.hpp"

using namespace hmon;

namespace {

// range(0) = matrix size, t = 4, p = 2
void BM_Snf(benchmark::State& state) {
  const RingCtx ctx(BaseRing::int_local(2), 4);
  InstanceGen gen(1);
  const MonObject f = gen.object(ctx, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(snf(f.matrix()));
}
BENCHMARK(BM_Snf)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_SnfPolyQ(benchmark::State& state) {
  const RingCtx ctx(BaseRing::poly_rational(), 3);
  InstanceGen gen(2);
  const MonObject f = gen.object(ctx, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(snf(f.matrix()));
}
BENCHMARK(BM_SnfPolyQ)->Arg(2)->Arg(4);

void BM_NullHomotopy(benchmark::State& state) {
  const RingCtx ctx(BaseRing::int_local(3), 4);
  InstanceGen gen(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const MonMorphism psi = gen.morphism(gen.object(ctx, n), gen.object(ctx, n));
  for (auto _ : state) benchmark::DoNotOptimize(null_homotopy(psi));
}
BENCHMARK(BM_NullHomotopy)->Arg(2)->Arg(4)->Arg(8);

// brute-force stable Hom over Z/2^t between R/2 + R/4 and R/4
void BM_StableHomBruteforce(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const RingCtx ctx(BaseRing::int_local(2), t);
  const RModuleObj m = RModuleObj::make(ctx, {1, 2}), n = RModuleObj::make(ctx, {2});
  for (auto _ : state) benchmark::DoNotOptimize(stable_hom_R_bruteforce(m, n));
}
BENCHMARK(BM_StableHomBruteforce)->Arg(3)->Arg(4);

void BM_Octahedron(benchmark::State& state) {
  const RingCtx ctx(BaseRing::int_local(2), 3);
  InstanceGen gen(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const MonObject a = gen.object(ctx, n), b = gen.object(ctx, n), c = gen.object(ctx, n);
  const MonMorphism psi = gen.morphism(a, b), eta = gen.morphism(b, c);
  for (auto _ : state) benchmark::DoNotOptimize(octahedron(psi, eta));
}
BENCHMARK(BM_Octahedron)->Arg(1)->Arg(2)->Arg(3);

void BM_ArVerify(benchmark::State& state) {
  const RingCtx ctx(BaseRing::int_local(2), 3);
  const ArSequence seq = ar_sequence(MonObject::validate(Mat::scalar(ctx.base(), 1, ctx.pi_power(1)), ctx));
  for (auto _ : state) benchmark::DoNotOptimize(verify_right_almost_split(seq));
}
BENCHMARK(BM_ArVerify);

}  // namespace

BENCHMARK_MAIN();

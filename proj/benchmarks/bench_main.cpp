#include <benchmark/benchmark.h>

#include <thread>

#include "polyfib/bernoulli.hpp"
#include "polyfib/fibseries.hpp"
#include "polyfib/harness.hpp"
#include "polyfib/polylog.hpp"
#include "polyfib/seqcore.hpp"

namespace {

using namespace polyfib;

void BM_Fib(benchmark::State& state) {
  const auto n = static_cast<SeqIndex>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fib(n));
}
BENCHMARK(BM_Fib)->RangeMultiplier(10)->Range(10, 1000000);

void BM_BernoulliNumber(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli_number(k));
}
BENCHMARK(BM_BernoulliNumber)->Arg(10)->Arg(40)->Arg(100);

// One argument per evaluation path: inside the unit disc, near the unit
// circle, and outside it.
void BM_Polylog(benchmark::State& state) {
  const Bits prec = static_cast<Bits>(state.range(1));
  Real z(prec);
  switch (state.range(0)) {
    case 0: z = Real::from_string("0.3", prec); break;
    case 1: z = Real::from_string("-0.95", prec); break;
    default: z = Real::from_string("-7.5", prec); break;
  }
  const Complex arg(z);
  for (auto _ : state) benchmark::DoNotOptimize(li(3, arg, prec));
}
BENCHMARK(BM_Polylog)->ArgsProduct({{0, 1, 2}, {128, 512}});

void BM_BernoulliForm(benchmark::State& state) {
  const Bits prec = static_cast<Bits>(state.range(0));
  SeriesSpec spec;
  spec.family = Family::F;
  spec.weight = Weight::Alternating;
  spec.r = 2;
  spec.s = 0;
  spec.k = 5;
  spec.z = Complex(Real(-1L, prec));
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli_form(spec, prec));
}
BENCHMARK(BM_BernoulliForm)->Arg(128)->Arg(512);

void BM_VerifyAll(benchmark::State& state) {
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(192, workers));
}
BENCHMARK(BM_VerifyAll)
    ->Arg(1)
    ->Arg(static_cast<long>(std::max(1u, std::thread::hardware_concurrency())))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ladders/multisegment.hpp"
#include "ladders/orbits.hpp"
#include "ladders/symplectic.hpp"
#include "ladders/zelevinsky.hpp"

namespace {

using namespace ladders;

const Line kRho{"rho", 1, false, true};

Multisegment random_multisegment(int count, int window, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> begin(0, window);
  std::uniform_int_distribution<int> len(0, 5);
  std::vector<Segment> segs;
  segs.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int a = begin(rng);
    segs.emplace_back(kRho, Exponent::integer(a),
                      Exponent::integer(a + len(rng)));
  }
  return Multisegment(kRho, std::move(segs));
}

Multisegment speh_ladder(int pairs) {
  std::vector<Segment> segs;
  for (int i = 0; i < 2 * pairs; ++i)
    segs.emplace_back(kRho, Exponent::integer(i), Exponent::integer(i + 1));
  return Multisegment(kRho, std::move(segs));
}

void BM_MwDual(benchmark::State& state) {
  const Multisegment m =
      random_multisegment(static_cast<int>(state.range(0)), 30, 7);
  for (auto _ : state) benchmark::DoNotOptimize(mw_dual(m));
}
BENCHMARK(BM_MwDual)->Arg(8)->Arg(32)->Arg(128);

void BM_SpehHalve(benchmark::State& state) {
  const Multisegment m = speh_ladder(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(speh_halve(m));
}
BENCHMARK(BM_SpehHalve)->Arg(4)->Arg(16)->Arg(64);

void BM_StandardOrders(benchmark::State& state) {
  const Multisegment m =
      random_multisegment(static_cast<int>(state.range(0)), 6, 11);
  for (auto _ : state) benchmark::DoNotOptimize(standard_orders(m));
}
BENCHMARK(BM_StandardOrders)->Arg(4)->Arg(6)->Arg(7);

void BM_IsSymplectic(benchmark::State& state) {
  const Multisegment m = speh_ladder(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_symplectic(m));
}
BENCHMARK(BM_IsSymplectic)->Arg(1)->Arg(2)->Arg(3);

void BM_S2Involutions(benchmark::State& state) {
  const Composition alpha(
      std::vector<int>(static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(s2_of(alpha));
}
BENCHMARK(BM_S2Involutions)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "gmt/gmt.hpp"
#include "gmt/verify/random.hpp"

namespace {

using namespace gmt;

// Boundary of a random 2-chain on an n x n grid: a union of loops.
GChain loops(int side) {
  const auto k = verify::kuhn_grid({side, side});
  for (std::uint64_t i = 0;; ++i) {
    verify::Rng rng(9, static_cast<std::uint64_t>(side), i);
    auto s = boundary(verify::random_chain(rng, k, 2, NormedGroup::integers(), 0.5));
    if (s.size() >= static_cast<std::size_t>(4 * side)) return s;
  }
}

void BM_FlatNorm(benchmark::State& state) {
  const auto s = to_rational(loops(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(flat_norm(s));
  state.counters["edges"] = static_cast<double>(s.size());
}
BENCHMARK(BM_FlatNorm)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_IntegralFlatNorm(benchmark::State& state) {
  const auto s = loops(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(integral_flat_norm(s));
}
BENCHMARK(BM_IntegralFlatNorm)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

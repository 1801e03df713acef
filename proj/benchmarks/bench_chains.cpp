#include <benchmark/benchmark.h>

#include "gmt/gmt.hpp"
#include "gmt/verify/random.hpp"

namespace {

using namespace gmt;

// Full top-dimensional chain on an n x n (x n) Kuhn grid.
GChain grid_chain(int side, std::size_t dim, const NormedGroup& g) {
  verify::Rng rng(1, static_cast<std::uint64_t>(side), dim);
  return verify::random_chain(rng, verify::kuhn_grid(std::vector<int>(dim, side)), dim, g, 1.0);
}

void BM_Boundary2(benchmark::State& state) {
  const auto s = grid_chain(static_cast<int>(state.range(0)), 2, NormedGroup::integers());
  for (auto _ : state) benchmark::DoNotOptimize(boundary(s));
  state.counters["cells"] = static_cast<double>(s.size());
}
BENCHMARK(BM_Boundary2)->Arg(4)->Arg(8)->Arg(16);

void BM_Boundary3(benchmark::State& state) {
  const auto s = grid_chain(static_cast<int>(state.range(0)), 3, NormedGroup::cyclic(6));
  for (auto _ : state) benchmark::DoNotOptimize(boundary(s));
  state.counters["cells"] = static_cast<double>(s.size());
}
BENCHMARK(BM_Boundary3)->Arg(2)->Arg(4)->Arg(6);

void BM_Cut(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const auto s = grid_chain(side, 2, NormedGroup::integers());
  // a generic diagonal level through the middle of the grid
  const auto f = AffineMap::functional({Rational(1), Rational(1, 3)}, 0);
  const Rational y = Rational(2 * side, 3) + Rational(1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(cut(s, f, y));
}
BENCHMARK(BM_Cut)->Arg(4)->Arg(8);

void BM_Slice3(benchmark::State& state) {
  const auto s = grid_chain(static_cast<int>(state.range(0)), 3, NormedGroup::integers());
  const auto f = AffineMap::functional({Rational(1), Rational(1, 3), Rational(1, 5)}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(slice(s, f, Rational(3, 2) + Rational(1, 11)));
}
BENCHMARK(BM_Slice3)->Arg(2)->Arg(3);

}  // namespace

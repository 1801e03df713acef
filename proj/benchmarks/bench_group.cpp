#include <benchmark/benchmark.h>

#include "gmt/gmt.hpp"
#include "gmt/verify/random.hpp"

namespace {

using namespace gmt;

IntMatrix random_matrix(std::size_t rows, std::size_t cols, long span) {
  verify::Rng rng(3, rows, cols);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Integer(rng.uniform(-span, span));
  return m;
}

void BM_Smith(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n, 20);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_Smith)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_QuotientNorm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix rel = random_matrix(n, n, 4);
  for (std::size_t i = 0; i < n; ++i) rel(i, i) += Integer(9);
  const auto g = NormedGroup::quotient_lattice(n, rel);
  verify::Rng rng(5, n);
  const auto x = verify::random_element(rng, g);
  for (auto _ : state) benchmark::DoNotOptimize(x.norm());
}
BENCHMARK(BM_QuotientNorm)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

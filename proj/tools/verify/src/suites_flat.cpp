#include <algorithm>
#include <cmath>

#include "gmt/verify/oracles.hpp"
#include "gmt/verify/random.hpp"
#include "gmt/verify/suite.hpp"

namespace gmt::verify {
namespace {

constexpr double kTol = 1e-9;

// Up to `tops` random (m+1)-cells of a grid, or a few bare m-cells when
// tops = 0, as a complex of their own.
SimplicialComplex small_complex(Rng& rng, std::size_t m, std::size_t tops) {
  const auto grid = random_grid_complex(rng, m + 1, m + 1 + static_cast<std::size_t>(rng.uniform(0, 1)), 2);
  std::vector<Cell> pool = tops ? grid.cells(m + 1) : grid.cells(m);
  std::shuffle(pool.begin(), pool.end(), rng.engine());
  const std::size_t keep = tops ? tops : static_cast<std::size_t>(rng.uniform(1, 3));
  pool.resize(std::min(keep, pool.size()));
  return SimplicialComplex::build(grid.ambient(), grid.vertices(), pool, SimplicialComplex::Validation::Structural);
}

GChain rational_chain(Rng& rng, const SimplicialComplex& k, std::size_t m) {
  GChain s(k, m, NormedGroup::rationals());
  for (const auto& c : k.cells(m))
    if (rng.coin(0.7)) s.add_term(c, rng.rational(5, 3));
  return s;
}

CaseOutcome flat_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const std::size_t m = index % 3;
  const std::size_t tops = static_cast<std::size_t>(rng.uniform(0, 3));
  const auto k = small_complex(rng, m, tops);
  const auto s = rational_chain(rng, k, m);
  const auto dec = flat_norm(s);
  json inputs = {{"chain", io::chain_json(s)}, {"value", io::format_double(dec.value)}};
  if (dec.q + boundary(dec.r) != s)
    return CaseOutcome::failure("Q + dR != S", inputs);
  const double want = flat_norm_oracle(s);
  inputs["oracle"] = io::format_double(want);
  if (std::abs(dec.value - want) > kTol) return CaseOutcome::failure("LP optimum differs from enumeration", inputs);
  const double ms = mass(s).value;
  if (dec.value > ms + kTol) return CaseOutcome::failure("flat norm exceeds mass", inputs);
  if (tops == 0 && std::abs(dec.value - ms) > kTol)
    return CaseOutcome::failure("flat norm differs from mass without fills", inputs);
  const double parts = mass(dec.q).value + mass(dec.r).value;
  if (std::abs(parts - dec.value) > kTol) return CaseOutcome::failure("value != mass(Q) + mass(R)", inputs);
  if (dec.certificate.max_violation > kTol || std::abs(dec.certificate.dual_objective - dec.value) > kTol)
    return CaseOutcome::failure("dual certificate does not close the gap", inputs);
  return CaseOutcome::pass();
}

CaseOutcome flat_triangle_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const std::size_t m = index % 2;
  const auto grid = random_grid_complex(rng, m + 1, m + 1, 2);
  const auto a = rational_chain(rng, grid, m), b = rational_chain(rng, grid, m), c = rational_chain(rng, grid, m);
  const double ab = flat_distance(a, b), bc = flat_distance(b, c), ac = flat_distance(a, c), ba = flat_distance(b, a);
  json inputs = {{"a", io::chain_json(a)}, {"b", io::chain_json(b)}, {"c", io::chain_json(c)}};
  if (ac > ab + bc + kTol) return CaseOutcome::failure("triangle inequality fails", inputs);
  if (std::abs(ab - ba) > kTol) return CaseOutcome::failure("flat distance is not symmetric", inputs);
  if (flat_distance(a, a) != 0.0) return CaseOutcome::failure("flat_distance(S, S) != 0", inputs);
  return CaseOutcome::pass();
}

}  // namespace

void register_flat_suites(std::vector<Suite>& out) {
  out.push_back({"flat-norm", "LP optimum against arrangement enumeration, exact Q + dR = S", 600, flat_case,
                 std::nullopt});
  out.push_back({"flat-triangle", "triangle inequality and symmetry of the flat distance", 200, flat_triangle_case,
                 std::nullopt});
}

}  // namespace gmt::verify

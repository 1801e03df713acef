#include <algorithm>

#include "gmt/verify/oracles.hpp"
#include "gmt/verify/random.hpp"
#include "gmt/verify/suite.hpp"

namespace gmt::verify {
namespace {

json chain_inputs(const GChain& s) { return {{"chain", io::chain_json(s)}}; }

CaseOutcome boundary_squared_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const std::size_t m = 2 + index % 2;
  const auto group = chain_test_groups()[(index / 2) % 5];
  const std::size_t k = m + static_cast<std::size_t>(rng.uniform(0, m == 2 ? 1 : 0));
  const std::size_t n = k + static_cast<std::size_t>(rng.uniform(0, 1));
  const auto complex = random_grid_complex(rng, k, n, m == 3 ? 1 : 2);
  const auto s = random_chain(rng, complex, m, group);
  if (!boundary(boundary(s)).is_zero()) return CaseOutcome::failure("dd S != 0", chain_inputs(s));
  return CaseOutcome::pass();
}

CaseOutcome mod_d_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const long d = 2 + static_cast<long>(index % 7);
  const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform(0, 2));
  const auto complex = random_grid_complex(rng, m, m + static_cast<std::size_t>(rng.uniform(0, 1)), m == 3 ? 1 : 2);
  const auto s = random_chain(rng, complex, m, NormedGroup::integers());
  json inputs = {{"chain", io::chain_json(s)}, {"d", d}};
  if (mod_d_reduce(boundary(s), d) != boundary(mod_d_reduce(s, d)))
    return CaseOutcome::failure("reduction does not commute with the boundary", inputs);
  if (!mod_d_reduce(rho_scale(s, GroupElement::scalar(NormedGroup::integers(), d)), d).is_zero())
    return CaseOutcome::failure("d S does not reduce to zero", inputs);
  return CaseOutcome::pass();
}

// Mod 2 boundary of the Möbius band against edge incidence counts.
CaseOutcome mobius_case(std::uint64_t, std::size_t index) {
  const std::size_t sections = 5 + index;
  const auto band = mobius_band(sections);
  GChain s(band, 2, NormedGroup::integers());
  for (const auto& c : band.cells(2)) s.add_term(c, Rational(1));
  const auto z2 = NormedGroup::cyclic(2);
  GChain want(band, 1, z2);
  for (const auto& e : band.cells(1)) {
    std::size_t count = 0;
    for (const auto& t : band.cells(2)) count += std::includes(t.begin(), t.end(), e.begin(), e.end());
    if (count % 2) want.add_term(e, Rational(1));
  }
  json inputs = {{"sections", sections}};
  if (want.size() != 2 * sections) return CaseOutcome::failure("band boundary is not a 2n-gon", inputs);
  if (mod_d_reduce(boundary(s), 2) != want) return CaseOutcome::failure("mod 2 boundary differs from incidence", inputs);
  if (boundary(mod_d_reduce(s, 2)) != want) return CaseOutcome::failure("boundary of mod 2 chain differs", inputs);
  try {
    orient_manifold(band.cells(2));
    return CaseOutcome::failure("the band was oriented", inputs);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotManifold) throw;
  }
  return CaseOutcome::pass();
}

// Order of g in a finite group, by repeated addition (0 if above the cap).
long element_order(const GroupElement& g, long cap) {
  GroupElement acc = g;
  for (long k = 1; k <= cap; ++k, acc += g)
    if (acc.is_zero()) return k;
  return 0;
}

CaseOutcome rho_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const auto group = index % 8 == 7 ? NormedGroup::direct_sum({NormedGroup::integers(), NormedGroup::cyclic(6)})
                                    : random_finite_group(rng, 200);
  const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 2));
  const auto complex = random_grid_complex(rng, 2, 2, 2);
  const auto z = NormedGroup::integers();
  auto small_chain = [&] {
    GChain s(complex, m, z);
    for (const auto& c : complex.cells(m))
      if (rng.coin(0.3)) s.add_term(c, Rational(rng.uniform(-3, 3)));
    return s;
  };
  std::vector<std::pair<GChain, GroupElement>> terms;
  switch (rng.uniform(0, 3)) {
    case 0: {  // order-killing: (o S, h) with o the order of h
      const auto h = random_element(rng, group);
      const long o = element_order(h, 200);
      terms.emplace_back(o ? rho_scale(small_chain(), GroupElement::scalar(z, o)) : small_chain(), h);
      break;
    }
    case 1: {  // cancelling pair (k S, h) + (S, -k h)
      const auto s = small_chain();
      const auto h = random_element(rng, group);
      const long k = rng.uniform(-3, 3);
      terms.emplace_back(rho_scale(s, GroupElement::scalar(z, k)), h);
      terms.emplace_back(s, -h.times(k));
      break;
    }
    default: {
      const long count = rng.uniform(1, 3);
      for (long t = 0; t < count; ++t) terms.emplace_back(small_chain(), random_element(rng, group));
    }
  }
  json inputs = {{"group", io::group_json(group)}, {"terms", json::array()}};
  for (const auto& [s, h] : terms) inputs["terms"].push_back({{"chain", io::chain_json(s)}, {"g", io::element_json(h)}});

  for (const auto& [s, h] : terms)
    if (boundary(rho_scale(s, h)) != rho_scale(boundary(s), h))
      return CaseOutcome::failure("d(S.g) != (dS).g", inputs);
  const auto verdict = rho_mono_check(terms, group);
  if (verdict.violation()) return CaseOutcome::failure("chain zero but tensor nonzero", inputs);
  if (verdict.tensor_zero && !verdict.chain_zero) return CaseOutcome::failure("tensor zero but chain nonzero", inputs);
  return CaseOutcome::pass();
}

NormedGroup constancy_group(Rng& rng) {
  auto groups = chain_test_groups();
  groups.push_back(NormedGroup::quotient_lattice(2, IntMatrix{{Integer(2), Integer(1)}, {Integer(0), Integer(3)}}));
  return rng.pick(groups);
}

CaseOutcome constancy_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const std::size_t k = 2 + index % 2;
  std::vector<int> sides(k);
  for (auto& s : sides) s = static_cast<int>(rng.uniform(1, k == 2 ? 3 : 2));
  const auto complex = map_complex(kuhn_grid(sides), random_injective_affine(rng, k, k + static_cast<std::size_t>(rng.uniform(0, 1))));
  const auto group = constancy_group(rng);
  const auto manifold = orient_manifold(complex.cells(k));
  const auto g = random_nonzero_element(rng, group);
  const auto t = fundamental_chain(complex, manifold, g);
  json inputs = {{"chain", io::chain_json(t)}};
  const auto result = constancy_solve(t, manifold);
  if (!result.consistent || !result.value || !(*result.value == g))
    return CaseOutcome::failure("constant coefficient not recovered", inputs);

  // perturb one cell: the witness must be an interior face of that cell
  const auto& cell = rng.pick(manifold.cells);
  GChain bumped = t;
  bumped.add_term(cell, random_nonzero_element(rng, group));
  inputs["perturbed"] = io::chain_json(bumped);
  const auto bad = constancy_solve(bumped, manifold);
  if (bad.consistent || !bad.witness) return CaseOutcome::failure("perturbation not detected", inputs);
  const auto& w = *bad.witness;
  if (!std::includes(cell.begin(), cell.end(), w.begin(), w.end()))
    return CaseOutcome::failure("witness is not a face of the perturbed cell", inputs);
  std::size_t incident = 0;
  for (const auto& c : manifold.cells) incident += std::includes(c.begin(), c.end(), w.begin(), w.end());
  if (incident != 2) return CaseOutcome::failure("witness is not an interior face", inputs);
  if (boundary(bumped).coefficient(w).is_zero()) return CaseOutcome::failure("boundary vanishes at the witness", inputs);
  return CaseOutcome::pass();
}

CaseOutcome mass_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const std::size_t k = 1 + index % 3;
  std::vector<int> sides(k);
  long volume = 1;
  for (auto& s : sides) volume *= (s = static_cast<int>(rng.uniform(1, 2)));
  // unit coefficients on the Kuhn cubes: mass is the box volume
  const auto grid = kuhn_grid(sides);
  GChain whole(grid, k, NormedGroup::integers());
  for (const auto& c : grid.cells(k)) whole.add_term(c, Rational(1));
  if (!mass(whole).total.contains(Rational(volume)))
    return CaseOutcome::failure("grid mass differs from the box volume", {{"sides", sides}});

  const auto group = rng.pick(chain_test_groups());
  const auto complex = random_grid_complex(rng, k, k + 1, 2);
  const auto s = random_chain(rng, complex, k, group);
  const auto t = random_chain(rng, complex, k, group);
  json inputs = {{"s", io::chain_json(s)}, {"t", io::chain_json(t)}};
  const auto ms = mass(s).total, mt = mass(t).total, mst = mass(s + t).total;
  if (mst.lo() > ms.hi() + mt.hi()) return CaseOutcome::failure("mass is not subadditive", inputs);
  const auto mneg = mass(-s).total;
  if (mneg.lo() > ms.hi() || ms.lo() > mneg.hi()) return CaseOutcome::failure("mass(-S) != mass(S)", inputs);
  if (s.is_zero() != (ms.hi() == 0)) return CaseOutcome::failure("mass vanishes off the zero chain", inputs);
  return CaseOutcome::pass();
}

}  // namespace

void register_chain_suites(std::vector<Suite>& out) {
  out.push_back({"boundary-squared", "dd = 0 for m in {2, 3} over Z, Z/2, Z/6, Q, Z + Z/2", 5000,
                 boundary_squared_case, std::nullopt});
  out.push_back({"mod-d", "reduction mod d commutes with the boundary, d = 2..8", 1400, mod_d_case, std::nullopt});
  out.push_back({"mobius", "mod 2 boundary of Möbius bands against edge incidence", 0, mobius_case, 5});
  out.push_back({"rho-mono", "d(S.g) = (dS).g and the two-route univalence check", 10000, rho_case, std::nullopt});
  out.push_back({"constancy", "constant coefficients recovered, single perturbations located", 200, constancy_case,
                 std::nullopt});
  out.push_back({"mass-laws", "box volumes, subadditivity and symmetry of mass", 600, mass_case, std::nullopt});
}

}  // namespace gmt::verify

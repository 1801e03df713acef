#include "gmt/verify/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gmt::verify {

Rng::Rng(std::uint64_t seed, std::uint64_t index, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(salt)};
  engine_.seed(seq);
}

long Rng::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

bool Rng::coin(double p) { return std::bernoulli_distribution(p)(engine_); }

Rational Rng::rational(long span, long max_den) { return Rational(uniform(-span, span), uniform(1, max_den)); }

GroupElement random_element(Rng& rng, const NormedGroup& g) {
  std::vector<Rational> slots;
  std::function<void(const NormedGroup&)> fill = [&](const NormedGroup& h) {
    switch (h.kind()) {
      case GroupKind::Integers: slots.emplace_back(rng.uniform(-5, 5)); break;
      case GroupKind::Rationals: slots.push_back(rng.rational(6, 4)); break;
      case GroupKind::Cyclic: {
        const long d = h.modulus().convert_to<long>();
        slots.emplace_back(rng.uniform(0, d - 1));
        break;
      }
      case GroupKind::DirectSum:
        for (const auto& p : h.parts()) fill(p);
        break;
      case GroupKind::QuotientLattice:
        for (std::size_t i = 0; i < h.lattice_rank(); ++i) slots.emplace_back(rng.uniform(-6, 6));
        break;
    }
  };
  fill(g);
  return GroupElement(g, std::move(slots));
}

GroupElement random_nonzero_element(Rng& rng, const NormedGroup& g) {
  for (int i = 0; i < 64; ++i) {
    auto e = random_element(rng, g);
    if (!e.is_zero()) return e;
  }
  fail(ErrorCode::InvalidArgument, "group " + g.describe() + " looks trivial");
}

std::vector<NormedGroup> chain_test_groups() {
  return {NormedGroup::integers(), NormedGroup::cyclic(2), NormedGroup::cyclic(6), NormedGroup::rationals(),
          NormedGroup::direct_sum({NormedGroup::integers(), NormedGroup::cyclic(2)})};
}

SimplicialComplex kuhn_grid(const std::vector<int>& sizes) {
  const std::size_t k = sizes.size();
  std::vector<int> stride(k);
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    stride[i] = static_cast<int>(count);
    count *= static_cast<std::size_t>(sizes[i] + 1);
  }
  std::vector<Point> pts(count);
  for (std::size_t id = 0; id < count; ++id) {
    std::size_t rest = id;
    for (std::size_t i = 0; i < k; ++i) {
      pts[id].emplace_back(static_cast<long>(rest % static_cast<std::size_t>(sizes[i] + 1)));
      rest /= static_cast<std::size_t>(sizes[i] + 1);
    }
  }
  std::vector<Cell> cells;
  std::vector<std::size_t> perm(k);
  for (std::size_t id = 0; id < count; ++id) {
    bool corner = true;  // lower corner of a unit cube
    for (std::size_t i = 0; i < k; ++i)
      corner = corner && pts[id][i] < sizes[i];
    if (!corner) continue;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Cell c{static_cast<VertexId>(id)};
      std::size_t v = id;
      for (std::size_t i : perm) {
        v += static_cast<std::size_t>(stride[i]);
        c.push_back(static_cast<VertexId>(v));
      }
      cells.push_back(std::move(c));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return SimplicialComplex::build(k, std::move(pts), std::move(cells), SimplicialComplex::Validation::Structural);
}

AffineMap random_affine(Rng& rng, std::size_t k, std::size_t n, long span, long max_den) {
  RationalMatrix a(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = rng.rational(span, max_den);
  std::vector<Rational> t(n);
  for (auto& x : t) x = rng.rational(4, 3);
  return {std::move(a), std::move(t)};
}

AffineMap random_injective_affine(Rng& rng, std::size_t k, std::size_t n) {
  for (;;) {
    RationalMatrix a(n, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = Rational(rng.uniform(-3, 3));
    if (rank(a) != k) continue;
    const Rational scale(1, rng.uniform(1, 3));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) *= scale;
    std::vector<Rational> t(n);
    for (auto& x : t) x = rng.rational(4, 3);
    return {std::move(a), std::move(t)};
  }
}

SimplicialComplex map_complex(const SimplicialComplex& k, const AffineMap& f) {
  std::vector<Point> pts;
  for (const auto& p : k.vertices()) pts.push_back(f.apply(p));
  return SimplicialComplex::build(f.target_dim(), std::move(pts), k.maximal_cells(),
                                  SimplicialComplex::Validation::Structural);
}

GChain random_chain(Rng& rng, const SimplicialComplex& k, std::size_t m, const NormedGroup& g, double density) {
  GChain s(k, m, g);
  for (const auto& c : k.cells(m))
    if (rng.coin(density)) s.add_term(c, random_element(rng, g));
  return s;
}

SimplicialComplex random_grid_complex(Rng& rng, std::size_t k, std::size_t n, int max_side) {
  std::vector<int> sides(k);
  for (auto& s : sides) s = static_cast<int>(rng.uniform(1, max_side));
  return map_complex(kuhn_grid(sides), random_injective_affine(rng, k, n));
}

NormedGroup random_finite_group(Rng& rng, long max_order) {
  switch (rng.uniform(0, 2)) {
    case 0: return NormedGroup::cyclic(rng.uniform(1, max_order));
    case 1: {
      const long a = rng.uniform(1, 14);
      const long b = rng.uniform(1, std::max(1L, max_order / a));
      return NormedGroup::direct_sum({NormedGroup::cyclic(a), NormedGroup::cyclic(b)});
    }
    default: {
      // Upper-triangular basis with det = p * q <= max_order.
      const long p = rng.uniform(1, 14);
      const long q = rng.uniform(1, std::max(1L, max_order / p));
      const long r = rng.uniform(-q, q);
      return NormedGroup::quotient_lattice(2, IntMatrix{{Integer(p), Integer(r)}, {Integer(0), Integer(q)}});
    }
  }
}

SimplicialComplex mobius_band(std::size_t sections) {
  const double pi = std::acos(-1.0);
  auto q = [](double x) { return Rational(static_cast<long>(std::lround(x * 1000)), 1000); };
  std::vector<Point> pts;
  for (std::size_t i = 0; i < sections; ++i) {
    const double th = 2 * pi * static_cast<double>(i) / static_cast<double>(sections);
    const double c = std::cos(th), s = std::sin(th), ch = std::cos(th / 2), sh = std::sin(th / 2);
    for (double side : {1.0, -1.0}) {
      // center on a circle of radius 4, half-width 1 along the twisting direction
      pts.push_back({q(4 * c + side * ch * c), q(4 * s + side * ch * s), q(side * sh)});
    }
  }
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < sections; ++i) {
    const VertexId a = static_cast<VertexId>(2 * i), b = a + 1;
    VertexId a2 = static_cast<VertexId>(2 * ((i + 1) % sections)), b2 = a2 + 1;
    if (i + 1 == sections) std::swap(a2, b2);  // half twist
    cells.push_back({a, b, b2});
    cells.push_back({a, b2, a2});
  }
  return SimplicialComplex::build(3, std::move(pts), std::move(cells));
}

}  // namespace gmt::verify

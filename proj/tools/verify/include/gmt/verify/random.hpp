#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gmt/gmt.hpp"

namespace gmt::verify {

/// Per-case generator: the stream depends only on (seed, case index, salt),
/// never on which worker runs the case.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0);

  long uniform(long lo, long hi);  // inclusive
  bool coin(double p = 0.5);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[index(v.size())]; }
  /// p/q with |p| <= span and 1 <= q <= max_den.
  Rational rational(long span, long max_den);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Random element of any supported group with small representatives.
GroupElement random_element(Rng& rng, const NormedGroup& g);
GroupElement random_nonzero_element(Rng& rng, const NormedGroup& g);

/// The coefficient groups named in the chain-complex criterion:
/// Z, Z/2, Z/6, Q, Z + Z/2.
std::vector<NormedGroup> chain_test_groups();

/// Kuhn (Freudenthal) triangulation of the box prod [0, sizes_i] with unit
/// cubes split into k! simplices along coordinate permutations.
SimplicialComplex kuhn_grid(const std::vector<int>& sizes);

/// A random injective rational affine map R^k -> R^n (n >= k), built from a
/// small integer matrix of full column rank, scaled by 1/den, plus a shift.
AffineMap random_injective_affine(Rng& rng, std::size_t k, std::size_t n);
/// A random rational affine map R^k -> R^n (any rank).
AffineMap random_affine(Rng& rng, std::size_t k, std::size_t n, long span = 3, long max_den = 3);

/// Image of a complex under an injective affine map (structure preserved).
SimplicialComplex map_complex(const SimplicialComplex& k, const AffineMap& f);

/// Random m-chain: each m-cell kept with probability `density`.
GChain random_chain(Rng& rng, const SimplicialComplex& k, std::size_t m, const NormedGroup& g, double density = 0.6);

/// A random grid complex of dimension k (sides 1..max_side) mapped into R^n.
SimplicialComplex random_grid_complex(Rng& rng, std::size_t k, std::size_t n, int max_side = 2);

/// Finite group of order at most `max_order` as a normed group (cyclic,
/// direct sums of cyclics, or a rank-2 quotient lattice).
NormedGroup random_finite_group(Rng& rng, long max_order);

/// Möbius band in R^3 from `sections` cross-sections of a twisting segment
/// around a circle, coordinates rounded to 1/1000. Every quad between
/// consecutive sections is split into two triangles; the last quad is glued
/// with the half twist.
SimplicialComplex mobius_band(std::size_t sections);

}  // namespace gmt::verify

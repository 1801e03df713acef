#pragma once

#include <string>
#include <vector>

#include "gmt/group/smith.hpp"

namespace gmt {

/// Finitely generated commutative group Z^generators / (row span of relations).
struct Presentation {
  std::size_t generators = 0;
  IntMatrix relations;  // k x generators

  static Presentation free(std::size_t rank);
  /// Z/d_1 + ... + Z/d_k (d_i = 0 gives a free summand).
  static Presentation diagonal(const std::vector<Integer>& factors);

  std::string describe() const;
};

/// Invariant factors of a finitely generated commutative group: torsion
/// factors > 1 in divisibility order, plus the free rank.
struct AbelianInvariants {
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
  std::string describe() const;
};

AbelianInvariants invariants(const Presentation& p);

/// Presentation of A / dA (A tensor Z/dZ): appends d times the identity to the
/// relations and re-reduces through Smith form. The result is diagonal.
/// d = 0 returns the reduced presentation of A itself.
Presentation tensor_mod_d(const Presentation& a, const Integer& d);

/// Homomorphism f : source -> target; column j of `matrix` is the image of
/// source generator j in target generator coordinates.
struct GroupHom {
  Presentation source;
  Presentation target;
  IntMatrix matrix;  // target.generators x source.generators

  /// Relations of the source map into relations of the target.
  bool well_defined() const;
};

struct MonoVerdict {
  Integer d;
  bool univalent = false;
  /// Source coordinates of an element outside dB mapped into dA, when not univalent.
  std::vector<Integer> witness;
};

/// For each d in {0, ..., d_max}, decides whether f_d : B/dB -> A/dA is
/// univalent. d = 0 tests f itself.
std::vector<MonoVerdict> check_mono_condition(const GroupHom& f, unsigned d_max);
MonoVerdict check_mono_at(const GroupHom& f, const Integer& d);

}  // namespace gmt

#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gmt/matrix.hpp"
#include "gmt/numeric.hpp"

namespace gmt {

enum class GroupKind { Integers, Cyclic, Rationals, DirectSum, QuotientLattice };

struct Presentation;

/// Descriptor of a complete normed commutative group. Cheap to copy: the
/// descriptor is immutable and shared.
///
/// Elements are stored as a flat vector of rational "slots"; the layout is
/// fixed by the descriptor (one slot for Z, Z/d and Q, r slots for Z^r/L, and
/// the concatenation of the parts for a direct sum). For finitely generated
/// groups each slot is an integer generator coordinate.
class NormedGroup {
 public:
  static NormedGroup integers();
  /// Z/dZ for d >= 1, with the quotient norm dist(k, dZ).
  static NormedGroup cyclic(const Integer& d);
  static NormedGroup rationals();
  /// Direct sum normed by the sum of the component norms.
  static NormedGroup direct_sum(std::vector<NormedGroup> parts);
  /// Z^rank modulo the lattice spanned by the rows of `generators`, with the
  /// quotient of the l1 norm.
  static NormedGroup quotient_lattice(std::size_t rank, const IntMatrix& generators);

  GroupKind kind() const;
  const Integer& modulus() const;
  std::span<const NormedGroup> parts() const;
  std::size_t lattice_rank() const;
  /// Hermite basis of the relation lattice (QuotientLattice only).
  const IntMatrix& lattice_basis() const;
  /// The generators as supplied.
  const IntMatrix& lattice_generators() const;

  std::size_t width() const;
  bool finitely_generated() const;
  /// Group order for finite groups.
  std::optional<Integer> order() const;
  /// Z^width / relations; throws NotFinitelyGenerated when Q is involved.
  Presentation presentation() const;
  std::string describe() const;

  friend bool operator==(const NormedGroup& a, const NormedGroup& b);

 private:
  struct Rep;
  explicit NormedGroup(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;

  friend class GroupElement;
};

class GroupElement {
 public:
  /// The zero of `group`.
  explicit GroupElement(NormedGroup group);
  /// Canonicalises `slots` (residues in [0, d), Hermite-reduced lattice
  /// representatives); throws GroupMismatch if a slot is off the carrier.
  GroupElement(NormedGroup group, std::vector<Rational> slots);
  /// Convenience for single-slot groups.
  static GroupElement scalar(NormedGroup group, const Rational& value);

  const NormedGroup& group() const { return group_; }
  std::span<const Rational> slots() const { return slots_; }
  bool is_zero() const;

  GroupElement operator-() const;
  GroupElement& operator+=(const GroupElement& other);
  GroupElement& operator-=(const GroupElement& other);
  friend GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
  friend GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
  /// The Z-action k * g.
  GroupElement times(const Integer& k) const;

  /// Group norm. Exact for every supported kind.
  Rational norm() const;

  std::string describe() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);

 private:
  void canonicalize();
  NormedGroup group_;
  std::vector<Rational> slots_;
};

GroupElement add(const GroupElement& a, const GroupElement& b);
Rational norm(const GroupElement& a);

/// dist(g, L) in Z^r under the l1 norm, by enumeration of lattice points in a
/// box whose radius comes from the inverse Gram matrix of the lattice basis.
/// Throws RankTooLarge beyond ambient or lattice rank 4.
Rational quotient_norm(const NormedGroup& group, const GroupElement& g);

}  // namespace gmt

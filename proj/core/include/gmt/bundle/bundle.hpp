#pragma once

#include <utility>

#include "gmt/exterior/multivector.hpp"
#include "gmt/group/normed_group.hpp"

namespace gmt {

/// An unoriented m-plane of n-space, stored by its canonical Plücker vector:
/// primitive integer coefficients whose first nonzero entry (lexicographic
/// blade order) is positive. A nonzero simple vector z determines the plane
/// and an orientation sign relative to that representative.
class OrientedPlane {
 public:
  /// Canonical plane of a nonzero m-vector, with sign(z) relative to it and
  /// the positive factor lambda such that z = sign * lambda * representative.
  struct Canonical;
  static Canonical canonical(const MultiVector& z);

  const MultiVector& representative() const { return rep_; }
  std::size_t ambient() const { return rep_.ambient(); }
  std::size_t degree() const { return rep_.degree(); }
  /// |representative|^2, exact.
  const Rational& norm_squared() const { return norm_sq_; }

  friend bool operator==(const OrientedPlane& a, const OrientedPlane& b) { return a.rep_ == b.rep_; }

 private:
  MultiVector rep_;
  Rational norm_sq_;
};

struct OrientedPlane::Canonical {
  OrientedPlane plane;
  int sign = 1;
  Rational scale;
};

/// Element of G(n,m,G): the class of (z/|z|, g) under (z, g) ~ (-z, -g). The
/// stored coefficient is taken along the canonical representative.
class BundleElement {
 public:
  /// Checks that z is nonzero and simple.
  static BundleElement make(const MultiVector& z, const GroupElement& g);
  /// For vectors simple by construction (span vectors, wedges of vectors).
  static BundleElement make_trusted(const MultiVector& z, const GroupElement& g);
  /// Zero of the fiber over the plane of z.
  static BundleElement zero(const MultiVector& z, const NormedGroup& group);

  const OrientedPlane& plane() const { return plane_; }
  /// Coefficient relative to the canonical representative.
  const GroupElement& coefficient() const { return coefficient_; }
  /// Coefficient relative to the orientation of z, which must span the same
  /// plane (FiberMismatch otherwise).
  GroupElement coefficient_along(const MultiVector& z) const;
  const NormedGroup& group() const { return coefficient_.group(); }
  std::size_t ambient() const { return plane_.ambient(); }
  std::size_t degree() const { return plane_.degree(); }

  bool is_zero() const { return coefficient_.is_zero(); }
  /// |(z, g)| = |g|.
  Rational norm() const { return coefficient_.norm(); }
  std::string describe() const;

  friend bool operator==(const BundleElement& a, const BundleElement& b) {
    return a.plane_ == b.plane_ && a.coefficient_ == b.coefficient_;
  }

 private:
  BundleElement(OrientedPlane plane, GroupElement g) : plane_(std::move(plane)), coefficient_(std::move(g)) {}
  OrientedPlane plane_;
  GroupElement coefficient_;
};

/// p(z, g) + p(z, g') = p(z, g + g'). FiberMismatch across planes.
BundleElement fiber_add(const BundleElement& a, const BundleElement& b);
BundleElement operator-(const BundleElement& a);

/// delta . g for delta in G(n,m,Z): p(z, d) . g = p(z, d g).
BundleElement scale(const BundleElement& delta, const GroupElement& g);

/// h_# gamma: plane carried by the m-th exterior power of h. RankCollapse
/// when that power kills the plane.
BundleElement push(const BundleElement& gamma, const LinearMap& h);

/// gamma | h for h : R^n -> R^k. The base plane is ker(h) on the plane of
/// gamma, oriented by (-1)^k z | (h_1 ^ ... ^ h_k). With this orientation the
/// chain identity d(S | {f > y}) = <S, f, y> + (dS) | {f > y} holds verbatim.
/// CorankCollapse when h restricted to the plane has rank below k.
BundleElement slice(const BundleElement& gamma, const LinearMap& h);
/// The oriented kernel vector (-1)^k z | (h_1 ^ ... ^ h_k) used by slice.
MultiVector slice_vector(const MultiVector& z, const LinearMap& h);

/// delta x gamma in G(n+nu, m+mu, G) for delta over Z: plane
/// P(z) ^ Q(w) with P, Q the two coordinate embeddings, coefficient d g.
BundleElement product(const BundleElement& delta, const BundleElement& gamma);

/// Embeddings of R^n and R^nu into R^(n+nu).
MultiVector embed_first(const MultiVector& z, std::size_t total);
MultiVector embed_second(const MultiVector& w, std::size_t total);

/// Bundle metric min(|z-z'| + |g-g'|, |z+z'| + |g+g'|) on unit
/// representatives, certified by interval arithmetic.
Interval distance(const BundleElement& a, const BundleElement& b);

/// Cosine of the angle between the unit representatives, squared: exact.
Rational cosine_squared(const OrientedPlane& a, const OrientedPlane& b);

/// |alpha(z) - alpha(z')|^2 for the projective embedding alpha(z) = z z^T
/// normed by half the Frobenius form; exact rational.
Rational alpha_distance_squared(const MultiVector& z, const MultiVector& w);
/// |z^ - w^|^2 (1 + z^ . w^) / 2 with z^, w^ the unit vectors, evaluated
/// componentwise in interval arithmetic.
Interval alpha_identity_rhs(const MultiVector& z, const MultiVector& w);

}  // namespace gmt

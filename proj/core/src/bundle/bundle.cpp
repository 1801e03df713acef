#include "gmt/bundle/bundle.hpp"

namespace gmt {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

OrientedPlane::Canonical OrientedPlane::canonical(const MultiVector& z) {
  if (z.is_zero()) fail(ErrorCode::ZeroVector, "plane of the zero vector");
  Integer den = 1;
  for (const auto& [b, c] : z.terms()) den = lcm(den, denominator(c));
  Integer content = 0;
  for (const auto& [b, c] : z.terms()) content = gcd(content, numerator(c * Rational(den)));
  const int s = z.terms().begin()->second.sign();
  Canonical out;
  out.sign = s;
  out.scale = Rational(content, den);  // z = s * scale * rep
  const Rational inv = Rational(den, content) * Rational(s);
  out.plane.rep_ = z;
  out.plane.rep_ *= inv;
  out.plane.norm_sq_ = dot(out.plane.rep_, out.plane.rep_);
  return out;
}

BundleElement BundleElement::make(const MultiVector& z, const GroupElement& g) {
  if (z.is_zero()) fail(ErrorCode::ZeroVector, "bundle element of the zero vector");
  if (!is_simple(z)) fail(ErrorCode::NotSimple, "bundle element of a non-simple vector " + z.describe());
  return make_trusted(z, g);
}

BundleElement BundleElement::make_trusted(const MultiVector& z, const GroupElement& g) {
  auto c = OrientedPlane::canonical(z);
  return BundleElement(std::move(c.plane), c.sign > 0 ? g : -g);
}

BundleElement BundleElement::zero(const MultiVector& z, const NormedGroup& group) {
  return make_trusted(z, GroupElement(group));
}

GroupElement BundleElement::coefficient_along(const MultiVector& z) const {
  auto c = OrientedPlane::canonical(z);
  if (!(c.plane == plane_)) fail(ErrorCode::FiberMismatch, "vector does not span the plane of the element");
  return c.sign > 0 ? coefficient_ : -coefficient_;
}

std::string BundleElement::describe() const {
  return "p(" + plane_.representative().describe() + ", " + coefficient_.describe() + ")";
}

BundleElement fiber_add(const BundleElement& a, const BundleElement& b) {
  if (!(a.plane() == b.plane())) fail(ErrorCode::FiberMismatch, "fiber_add over different planes");
  return BundleElement::make_trusted(a.plane().representative(), a.coefficient() + b.coefficient());
}

BundleElement operator-(const BundleElement& a) {
  return BundleElement::make_trusted(a.plane().representative(), -a.coefficient());
}

BundleElement scale(const BundleElement& delta, const GroupElement& g) {
  if (delta.group().kind() != GroupKind::Integers) fail(ErrorCode::GroupMismatch, "scale needs an integral bundle element");
  const Integer d = numerator(delta.coefficient().slots()[0]);
  return BundleElement::make_trusted(delta.plane().representative(), g.times(d));
}

BundleElement push(const BundleElement& gamma, const LinearMap& h) {
  MultiVector image = push(h, gamma.plane().representative());
  if (image.is_zero()) fail(ErrorCode::RankCollapse, "map collapses the plane");
  return BundleElement::make_trusted(image, gamma.coefficient());
}

MultiVector slice_vector(const MultiVector& z, const LinearMap& h) {
  if (h.source_dim() != z.ambient()) fail(ErrorCode::DimensionMismatch, "slice map source does not match");
  const std::size_t k = h.target_dim();
  if (k > z.degree()) fail(ErrorCode::DegreeError, "slice codimension exceeds plane dimension");
  MultiVector out = interior(z, covector_of_rows(h.matrix));
  if (k % 2) out = -out;
  return out;
}

BundleElement slice(const BundleElement& gamma, const LinearMap& h) {
  MultiVector kernel = slice_vector(gamma.plane().representative(), h);
  if (kernel.is_zero()) fail(ErrorCode::CorankCollapse, "map is degenerate on the plane");
  return BundleElement::make_trusted(kernel, gamma.coefficient());
}

MultiVector embed_first(const MultiVector& z, std::size_t total) {
  MultiVector out(total, z.degree());
  for (const auto& [b, c] : z.terms()) out.set(b, c);
  return out;
}

MultiVector embed_second(const MultiVector& w, std::size_t total) {
  const std::size_t shift = total - w.ambient();
  MultiVector out(total, w.degree());
  for (const auto& [b, c] : w.terms()) out.set(b << shift, c);
  return out;
}

BundleElement product(const BundleElement& delta, const BundleElement& gamma) {
  if (delta.group().kind() != GroupKind::Integers) fail(ErrorCode::GroupMismatch, "product needs an integral left factor");
  const std::size_t total = delta.ambient() + gamma.ambient();
  MultiVector plane = wedge(embed_first(delta.plane().representative(), total),
                            embed_second(gamma.plane().representative(), total));
  const Integer d = numerator(delta.coefficient().slots()[0]);
  return BundleElement::make_trusted(plane, gamma.coefficient().times(d));
}

Rational cosine_squared(const OrientedPlane& a, const OrientedPlane& b) {
  const Rational d = dot(a.representative(), b.representative());
  return d * d / (a.norm_squared() * b.norm_squared());
}

namespace {

Interval norm_interval(const GroupElement& g) { return Interval::enclose(g.norm()); }

}  // namespace

Interval distance(const BundleElement& a, const BundleElement& b) {
  if (a.ambient() != b.ambient() || a.degree() != b.degree())
    fail(ErrorCode::DimensionMismatch, "distance between different Grassmann bundles");
  if (!(a.group() == b.group())) fail(ErrorCode::GroupMismatch, "distance across coefficient groups");
  const Rational d = dot(a.plane().representative(), b.plane().representative());
  const Rational c2 = d * d / (a.plane().norm_squared() * b.plane().norm_squared());
  const Interval same = norm_interval(a.coefficient() - b.coefficient());
  const Interval flip = norm_interval(a.coefficient() + b.coefficient());
  Interval gap_same, gap_flip;  // |z^ - z'^| and |z^ + z'^|
  if (c2 == 1) {
    gap_same = Interval(d.sign() > 0 ? 0.0 : 2.0);
    gap_flip = Interval(d.sign() > 0 ? 2.0 : 0.0);
  } else {
    // c = d / sqrt(|z|^2 |z'|^2); |z^ -+ z'^|^2 = 2 -+ 2c
    const Interval c = Interval::enclose(d) / Interval::sqrt_of(a.plane().norm_squared() * b.plane().norm_squared());
    const Interval two(2.0);
    gap_same = sqrt(two - two * c);
    gap_flip = sqrt(two + two * c);
  }
  return min(gap_same + same, gap_flip + flip);
}

Rational alpha_distance_squared(const MultiVector& z, const MultiVector& w) {
  const auto x = z.dense();
  const auto y = w.dense();
  if (x.size() != y.size()) fail(ErrorCode::DegreeError, "alpha distance across different Grassmannians");
  const Rational nx = dot(z, z), ny = dot(w, w);
  if (nx == 0 || ny == 0) fail(ErrorCode::ZeroVector, "alpha of the zero vector");
  Rational frob = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) {
      const Rational e = x[i] * x[j] / nx - y[i] * y[j] / ny;
      frob += e * e;
    }
  return frob / 2;
}

Interval alpha_identity_rhs(const MultiVector& z, const MultiVector& w) {
  const auto x = z.dense();
  const auto y = w.dense();
  if (x.size() != y.size()) fail(ErrorCode::DegreeError, "alpha identity across different Grassmannians");
  const Interval lx = Interval::sqrt_of(dot(z, z));
  const Interval ly = Interval::sqrt_of(dot(w, w));
  Interval diff_sq(0.0), inner(0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Interval u = Interval::enclose(x[i]) / lx;
    const Interval v = Interval::enclose(y[i]) / ly;
    const Interval e = u - v;
    diff_sq += e * e;
    inner += u * v;
  }
  return diff_sq * (Interval(1.0) + inner) / Interval(2.0);
}

}  // namespace gmt

#include "support.hpp"

namespace gmt::testing {
namespace {

MultiVector e(std::size_t n, std::vector<int> idx) { return MultiVector::basis(n, idx); }
BundleElement p(const MultiVector& z, const GroupElement& g) { return BundleElement::make(z, g); }

TEST(BundleMake, OppositeOrientationNegatesCoefficient) {
  EXPECT_EQ(p(e(2, {1, 2}), el(Z(), 3)), p(-e(2, {1, 2}), el(Z(), -3)));
}

TEST(BundleMake, PositiveScalingIsForgotten) {
  EXPECT_EQ(p(Rational(2) * e(2, {1}), el(Z(), 1)), p(e(2, {1}), el(Z(), 1)));
}

TEST(BundleMake, OrientationIrrelevantModTwo) {
  EXPECT_EQ(p(e(2, {1}), el(Zmod(2), 1)), p(-e(2, {1}), el(Zmod(2), 1)));
}

TEST(BundleMake, RejectsZeroAndNonSimple) {
  EXPECT_GMT_ERROR(p(MultiVector(2, 1), el(Z(), 1)), ErrorCode::ZeroVector);
  EXPECT_GMT_ERROR(p(e(4, {1, 2}) + e(4, {3, 4}), el(Z(), 1)), ErrorCode::NotSimple);
}

TEST(BundleMake, CoefficientAlongEitherOrientation) {
  const auto x = p(e(2, {2, 1}), el(Z(), 4));
  EXPECT_EQ(x.coefficient_along(e(2, {1, 2})), el(Z(), -4));
  EXPECT_EQ(x.coefficient_along(e(2, {2, 1})), el(Z(), 4));
  EXPECT_GMT_ERROR(x.coefficient_along(e(2, {1})), ErrorCode::FiberMismatch);
}

TEST(FiberAdd, SamePlane) {
  EXPECT_EQ(fiber_add(p(e(2, {1}), el(Z(), 2)), p(e(2, {1}), el(Z(), 3))), p(e(2, {1}), el(Z(), 5)));
}

TEST(FiberAdd, OppositeOrientationsCancel) {
  const auto g = el(Zmod(5), 2);
  const auto sum = fiber_add(p(e(2, {1}), g), p(-e(2, {1}), g));
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ(sum, BundleElement::zero(e(2, {1}), Zmod(5)));
}

TEST(FiberAdd, DifferentPlanes) {
  EXPECT_GMT_ERROR(fiber_add(p(e(2, {1}), el(Z(), 1)), p(e(2, {2}), el(Z(), 1))), ErrorCode::FiberMismatch);
}

TEST(Scale, IntegralTimesGroupElement) {
  const auto r = scale(p(e(2, {1}), el(Z(), 2)), el(Zmod(4), 3));
  EXPECT_EQ(r, p(e(2, {1}), el(Zmod(4), 2)));
}

TEST(Scale, UnitDeltaPreservesNorm) {
  const auto g = GroupElement(NormedGroup::direct_sum({Z(), Zmod(6)}), rv({-3, 4}));
  const auto r = scale(p(e(3, {2}), el(Z(), 1)), g);
  EXPECT_EQ(r, p(e(3, {2}), g));
  EXPECT_EQ(r.norm(), g.norm());
}

TEST(Scale, ZeroDeltaGivesFiberZero) { EXPECT_TRUE(scale(p(e(2, {1}), el(Z(), 0)), el(Z(), 9)).is_zero()); }

TEST(BundlePush, Identity) {
  const auto x = p(e(3, {1, 3}), el(Zmod(6), 5));
  EXPECT_EQ(push(x, LinearMap::identity(3)), x);
}

TEST(BundlePush, MinusIdentityFlipsLines) {
  const auto g = el(Z(), 2);
  const LinearMap minus{RationalMatrix{{-1, 0}, {0, -1}}};
  const auto r = push(p(e(2, {1}), g), minus);
  EXPECT_EQ(r, p(-e(2, {1}), g));
  EXPECT_EQ(r, p(e(2, {1}), -g));
  // even degree: the plane keeps its orientation
  EXPECT_EQ(push(p(e(2, {1, 2}), g), minus), p(e(2, {1, 2}), g));
}

TEST(BundlePush, RankCollapse) {
  const LinearMap proj{RationalMatrix{{1, 0}}};
  EXPECT_GMT_ERROR(push(p(e(2, {1, 2}), el(Z(), 1)), proj), ErrorCode::RankCollapse);
}

TEST(BundlePush, NormIsPreserved) {
  const LinearMap h{RationalMatrix{{1, 2, 0}, {0, 1, 5}, {1, 0, 1}}};
  const auto x = p(e(3, {1, 2}) + e(3, {2, 3}), el(Zmod(7), 4));
  EXPECT_EQ(push(x, h).norm(), x.norm());
}

TEST(BundleSlice, PlaneBySecondCoordinate) {
  const auto g = el(Z(), 3);
  const LinearMap h{RationalMatrix{{0, 1}}};
  const auto r = slice(p(e(2, {1, 2}), g), h);
  EXPECT_EQ(r.degree(), 1u);
  EXPECT_EQ(r.plane().representative(), e(2, {1}));
  // (-1)^1 e12 | e^2 = e1
  EXPECT_EQ(slice_vector(e(2, {1, 2}), h), e(2, {1}));
  EXPECT_EQ(r, p(e(2, {1}), g));
  EXPECT_EQ(r.norm(), g.norm());
}

TEST(BundleSlice, FullCorankGivesDegreeZero) {
  const auto g = el(Zmod(9), 4);
  const LinearMap h{RationalMatrix{{1, 1}, {0, 2}}};
  const auto r = slice(p(e(2, {1, 2}), g), h);
  EXPECT_EQ(r.degree(), 0u);
  EXPECT_EQ(r.norm(), g.norm());
}

TEST(BundleSlice, CorankCollapse) {
  const LinearMap h{RationalMatrix{{0, 0, 1}}};
  EXPECT_GMT_ERROR(slice(p(e(3, {1, 2}), el(Z(), 1)), h), ErrorCode::CorankCollapse);
}

TEST(BundleProduct, UnitTimesLine) {
  const auto g = el(Zmod(5), 3);
  const auto r = product(p(e(1, {1}), el(Z(), 1)), p(e(1, {1}), g));
  EXPECT_EQ(r, p(e(2, {1, 2}), g));
}

TEST(BundleProduct, CoefficientsMultiply) {
  const auto r = product(p(e(1, {1}), el(Z(), 2)), p(e(1, {1}), el(Z(), 3)));
  EXPECT_EQ(r.coefficient_along(e(2, {1, 2})), el(Z(), 6));
  EXPECT_EQ(r.norm(), 6);
}

TEST(BundleProduct, TimesFiberZero) {
  const auto r = product(p(e(2, {1}), el(Z(), 7)), BundleElement::zero(e(1, {1}), Zmod(3)));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(r.ambient(), 3u);
}

TEST(BundleDistance, IdentityOfIndiscernibles) {
  const auto x = p(e(3, {1, 2}) + e(3, {1, 3}), el(Z(), 4));
  EXPECT_TRUE(distance(x, x).contains(0.0));
  EXPECT_LT(distance(x, x).hi(), 1e-12);
}

TEST(BundleDistance, OppositeLinesSameCoefficient) {
  // min(|e1 - (-e1)| + 0, |e1 + (-e1)| + |1 + 1|) = min(2, 2)
  const auto d = distance(p(e(2, {1}), el(Z(), 1)), p(-e(2, {1}), el(Z(), 1)));
  EXPECT_TRUE(d.contains(2.0));
  EXPECT_LT(d.width(), 1e-12);
}

TEST(Alpha, OrthogonalUnitPlanes) {
  EXPECT_EQ(alpha_distance_squared(e(2, {1}), e(2, {2})), 1);
  const auto rhs = alpha_identity_rhs(e(2, {1}), e(2, {2}));
  EXPECT_TRUE(rhs.contains(1.0));
  EXPECT_LT(rhs.width(), 1e-10);
}

TEST(Alpha, IgnoresOrientationAndScale) {
  EXPECT_EQ(alpha_distance_squared(e(3, {1, 2}), Rational(-5) * e(3, {1, 2})), 0);
}

}  // namespace
}  // namespace gmt::testing

#include "support.hpp"

namespace gmt::testing {
namespace {

MultiVector e(std::size_t n, std::vector<int> idx) { return MultiVector::basis(n, idx); }
CoVector ec(std::size_t n, std::vector<int> idx) { return CoVector::basis(n, idx); }

TEST(Wedge, BasisVectors) {
  EXPECT_EQ(wedge(e(2, {1}), e(2, {2})), e(2, {1, 2}));
  EXPECT_EQ(wedge(e(2, {2}), e(2, {1})), -e(2, {1, 2}));
  EXPECT_TRUE(wedge(e(2, {1}), e(2, {1})).is_zero());
}

TEST(Wedge, ExpandsBilinearly) {
  const auto a = MultiVector::vector(rv({1, 1}));
  const auto b = MultiVector::vector(rv({1, -1}));
  // e1^e1 - e1^e2 + e2^e1 - e2^e2
  EXPECT_EQ(wedge(a, b), Rational(-2) * e(2, {1, 2}));
}

TEST(Wedge, UnsortedBasisCarriesSign) {
  EXPECT_EQ(e(3, {3, 1, 2}), e(3, {1, 2, 3}));
  EXPECT_EQ(e(3, {2, 1, 3}), -e(3, {1, 2, 3}));
}

TEST(Push, IdentityFixesEverything) {
  const MultiVector a = Rational(3) * e(3, {1, 2}) - e(3, {2, 3});
  EXPECT_EQ(push(LinearMap::identity(3), a), a);
}

TEST(Push, DiagonalScalesByDeterminant) {
  const LinearMap l{RationalMatrix{{2, 0}, {0, 3}}};
  EXPECT_EQ(push(l, e(2, {1, 2})), Rational(6) * e(2, {1, 2}));
}

TEST(Push, ProjectionKillsTopVector) {
  const LinearMap l{RationalMatrix{{1, 0}}};
  const auto out = push(l, e(2, {1, 2}));
  EXPECT_TRUE(out.is_zero());
  EXPECT_EQ(out.ambient(), 1u);
  EXPECT_EQ(out.degree(), 2u);
}

TEST(Push, IsFunctorial) {
  const LinearMap a{RationalMatrix{{1, 2, 0}, {0, 1, -1}, {3, 0, 1}}};
  const LinearMap b{RationalMatrix{{2, 1, 1}, {1, 0, 4}}};
  const MultiVector z = e(3, {1, 2}) + Rational(2) * e(3, {2, 3});
  EXPECT_EQ(push(b.after(a), z), push(b, push(a, z)));
}

TEST(Interior, SliceOfAPlaneByOneCoordinate) {
  // e12 | e^1 = e2 under the left contraction convention
  EXPECT_EQ(interior(e(2, {1, 2}), ec(2, {1})), e(2, {2}));
  EXPECT_EQ(interior(e(2, {1, 2}), ec(2, {2})), -e(2, {1}));
}

TEST(Interior, ScalarCovectorIsTheUnit) {
  const MultiVector a = e(3, {1, 3}) + Rational(5) * e(3, {2, 3});
  EXPECT_EQ(interior(a, CoVector::scalar(3, 1)), a);
}

TEST(Interior, TopVectorByTwoCovector) {
  const auto out = interior(e(3, {1, 2, 3}), ec(3, {1, 2}));
  EXPECT_EQ(out, e(3, {3}));
  EXPECT_EQ(norm_squared(out), 1);
}

TEST(Interior, AdjointToWedge) {
  // (a | w) . b = a . (w^# ^ b) over every basis pair in R^4
  const std::size_t n = 4;
  for (Blade i : blades_of_degree(n, 3))
    for (Blade j : blades_of_degree(n, 1))
      for (Blade k : blades_of_degree(n, 2)) {
        MultiVector a(n, 3), b(n, 2), wv(n, 1);
        CoVector w(n, 1);
        a.set(i, 1);
        b.set(k, 1);
        w.set(j, 1);
        wv.set(j, 1);
        EXPECT_EQ(dot(interior(a, w), b), dot(a, wedge(wv, b)));
      }
}

TEST(Interior, DegreeTooHigh) {
  EXPECT_GMT_ERROR(interior(e(3, {1}), ec(3, {1, 2})), ErrorCode::DegreeError);
}

TEST(Dot, OrthonormalBasis) {
  EXPECT_EQ(dot(e(3, {1, 2}), e(3, {1, 2})), 1);
  EXPECT_EQ(dot(e(3, {1, 2}), e(3, {1, 3})), 0);
  const MultiVector a = Rational(2) * e(3, {1, 2}) + e(3, {1, 3});
  const MultiVector b = e(3, {1, 2}) - e(3, {1, 3});
  EXPECT_EQ(dot(a, b), 1);
}

TEST(Dot, DegreeMismatch) { EXPECT_GMT_ERROR(dot(e(3, {1}), e(3, {1, 2})), ErrorCode::DegreeError); }

TEST(SpanVector, UnitTriangle) {
  EXPECT_EQ(span_vector({pt({0, 0}), pt({1, 0}), pt({0, 1})}), e(2, {1, 2}));
}

TEST(SpanVector, CollinearIsZero) {
  const auto z = span_vector({pt({0, 0}), pt({1, 1}), pt({3, 3})});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), 2u);
}

TEST(SpanVector, TriangleInSpace) {
  EXPECT_EQ(span_vector({pt({0, 0, 0}), pt({1, 0, 0}), pt({1, 1, 0})}), e(3, {1, 2}));
}

TEST(Simplicity, DecomposableAndNot) {
  EXPECT_TRUE(is_simple(e(4, {1, 2}) + e(4, {1, 3})));
  // e12 + e34 is the standard non-decomposable 2-vector
  EXPECT_FALSE(is_simple(e(4, {1, 2}) + e(4, {3, 4})));
  EXPECT_TRUE(is_simple(wedge(MultiVector::vector(rv({1, 2, 0, 1})), MultiVector::vector(rv({0, 1, 1, 3})))));
  // degree 2 in R^5: wedge of three vectors is simple, sum of two disjoint planes is not
  const auto x = wedge(wedge(MultiVector::vector(rv({1, 0, 2, 0, 1})), MultiVector::vector(rv({0, 1, 1, 0, 0}))),
                       MultiVector::vector(rv({1, 1, 0, 1, 0})));
  EXPECT_TRUE(is_simple(x));
  EXPECT_FALSE(is_simple(e(5, {1, 2}) + e(5, {3, 4})));
}

TEST(Simplicity, PlaneBasisSpansThePlane) {
  const auto z = wedge(MultiVector::vector(rv({1, 2, 0})), MultiVector::vector(rv({0, 1, 1})));
  const auto basis = plane_basis(z);
  ASSERT_EQ(basis.size(), 2u);
  const auto w = wedge(MultiVector::vector(basis[0]), MultiVector::vector(basis[1]));
  // same plane: proportional, nonzero
  EXPECT_FALSE(w.is_zero());
  EXPECT_EQ(dot(w, z) * dot(w, z), norm_squared(w) * norm_squared(z));
}

TEST(Alternating, DegreeAboveAmbientIsZeroSpace) {
  const MultiVector z(2, 3);
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.dense().empty());
}

}  // namespace
}  // namespace gmt::testing

#include "support.hpp"

namespace gmt::testing {
namespace {

SimplicialComplex triangle() { return SimplicialComplex::build(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})}, {{0, 1, 2}}); }

TEST(ChainAlgebra, InverseCancels) {
  auto s = square_chain(Z(), el(Z(), 3));
  EXPECT_TRUE((s + (-s)).is_zero());
}

TEST(ChainAlgebra, CyclicCoefficientsWrap) {
  GChain a(triangle(), 1, Zmod(3)), b(triangle(), 1, Zmod(3));
  a.add_term({0, 1}, el(Zmod(3), 2));
  b.add_term({0, 1}, el(Zmod(3), 2));
  EXPECT_EQ((a + b).coefficient({0, 1}), el(Zmod(3), 1));
}

TEST(ChainAlgebra, ReversedCellNegates) {
  GChain a(triangle(), 1, Z());
  a.add_term({1, 0}, el(Z(), 4));
  EXPECT_EQ(a.coefficient({0, 1}), el(Z(), -4));
}

TEST(ChainAlgebra, DisjointSupportsAddMasses) {
  GChain a(triangle(), 1, Z()), b(triangle(), 1, Z());
  a.add_term({0, 1}, el(Z(), 2));
  b.add_term({0, 2}, el(Z(), 5));
  const auto sum = a + b;
  EXPECT_EQ(sum.size(), 2u);
  EXPECT_DOUBLE_EQ(mass(sum).value, mass(a).value + mass(b).value);
  EXPECT_DOUBLE_EQ(mass(sum).value, 7.0);
}

TEST(ChainAlgebra, CellOutsideComplex) {
  GChain a(triangle(), 2, Z());
  EXPECT_GMT_ERROR(a.add_term({0, 1}, el(Z(), 1)), ErrorCode::DimensionMismatch);
  GChain b(unit_square(), 2, Z());
  EXPECT_GMT_ERROR(b.add_term({1, 2, 3}, el(Z(), 1)), ErrorCode::CarrierMismatch);
}

TEST(Boundary, Triangle) {
  const auto g = el(Zmod(6), 5);
  GChain s(triangle(), 2, Zmod(6));
  s.add_term({0, 1, 2}, g);
  GChain want(triangle(), 1, Zmod(6));
  want.add_term({1, 2}, g);
  want.add_term({0, 2}, -g);
  want.add_term({0, 1}, g);
  EXPECT_EQ(boundary(s), want);
  EXPECT_TRUE(boundary(boundary(s)).is_zero());
}

TEST(Boundary, ClosedSquareLoop) {
  const auto k = unit_square();
  GChain loop(k, 1, Z());
  for (Cell c : {Cell{0, 1}, Cell{1, 3}, Cell{3, 2}, Cell{2, 0}}) loop.add_term(c, el(Z(), 7));
  EXPECT_TRUE(boundary(loop).is_zero());
  EXPECT_EQ(boundary(square_chain(Z(), el(Z(), 7))), loop);
}

TEST(Boundary, PointsHaveNoBoundary) {
  GChain s(triangle(), 0, Z());
  s.add_term({0}, el(Z(), 1));
  EXPECT_GMT_ERROR(boundary(s), ErrorCode::DimensionZero);
}

TEST(RhoScale, ZeroAndTorsion) {
  GChain s(triangle(), 1, Z());
  s.add_term({0, 1}, el(Z(), 2));
  s.add_term({1, 2}, el(Z(), 1));
  EXPECT_TRUE(rho_scale(s, el(Zmod(5), 0)).is_zero());
  const auto r = rho_scale(s, el(Zmod(4), 2));
  // 2 * 2 = 0 mod 4 is pruned
  EXPECT_EQ(r.size(), 1u);
  EXPECT_EQ(r.coefficient({1, 2}), el(Zmod(4), 2));
}

TEST(RhoScale, CommutesWithBoundary) {
  GChain s(triangle(), 2, Z());
  s.add_term({0, 2, 1}, el(Z(), 3));
  const auto g = GroupElement(NormedGroup::direct_sum({Z(), Zmod(2)}), rv({-1, 1}));
  EXPECT_EQ(boundary(rho_scale(s, g)), rho_scale(boundary(s), g));
}

TEST(RhoMono, TorsionFreeTermIsNonzero) {
  GChain s(triangle(), 1, Z());
  s.add_term({0, 1}, el(Z(), 1));
  const auto v = rho_mono_check({{s, el(Z(), 3)}}, Z());
  EXPECT_FALSE(v.chain_zero);
  EXPECT_FALSE(v.tensor_zero);
}

TEST(RhoMono, EvenChainTimesTwoTorsion) {
  GChain s(triangle(), 1, Z());
  s.add_term({0, 1}, el(Z(), 2));
  const auto v = rho_mono_check({{s, el(Zmod(2), 1)}}, Zmod(2));
  EXPECT_TRUE(v.chain_zero);
  EXPECT_TRUE(v.tensor_zero);
  EXPECT_FALSE(v.violation());
}

TEST(Restrict, FullEmptyAndDisjointUnion) {
  const auto s = square_chain(Zmod(7), el(Zmod(7), 3));
  EXPECT_EQ(restrict(s, s.complex()), s);
  EXPECT_TRUE(restrict(s, [](const Cell&) { return false; }).is_zero());
  auto in_a = [](const Cell& c) { return c == Cell{0, 1, 3}; };
  auto in_b = [](const Cell& c) { return c == Cell{0, 2, 3}; };
  EXPECT_EQ(restrict(s, in_a) + restrict(s, in_b), restrict(s, [&](const Cell& c) { return in_a(c) || in_b(c); }));
}

TEST(Restrict, ToSubcomplexByPoints) {
  const auto s = square_chain(Z(), el(Z(), 1));
  const auto lower = SimplicialComplex::build(2, {pt({0, 0}), pt({1, 0}), pt({1, 1})}, {{0, 1, 2}});
  const auto r = restrict(s, lower);
  EXPECT_EQ(r.size(), 1u);
  EXPECT_EQ(r.coefficient({0, 1, 3}), el(Z(), 1));
}

TEST(Cut, SegmentAtOne) {
  GChain s(segment_complex(0, 2), 1, Z());
  s.add_term({0, 1}, el(Z(), 1));
  const auto c = cut(s, AffineMap::functional(rv({1})), 1);
  EXPECT_EQ(c.refined.size(), 2u);
  // the oriented segment from 1 to 2
  GeometricChain want(1, 1, Z());
  want.add_term({pt({1}), pt({2})}, el(Z(), 1));
  EXPECT_EQ(GeometricChain(c.upper), want);
}

TEST(Cut, LevelBelowEverything) {
  GChain s(segment_complex(0, 2), 1, Z());
  s.add_term({0, 1}, el(Z(), 1));
  const auto c = cut(s, AffineMap::functional(rv({1})), -1);
  EXPECT_EQ(GeometricChain(c.upper), GeometricChain(s));
  EXPECT_EQ(c.cut.refined.vertices().size(), 2u);
}

TEST(Cut, TriangleAreaIsPreserved) {
  GChain s(triangle(), 2, Z());
  s.add_term({0, 1, 2}, el(Z(), 1));
  const auto c = cut(s, AffineMap::functional(rv({1, 0})), q("1/2"));
  EXPECT_EQ(c.refined.size(), 3u);
  Rational area = 0;
  for (const auto& [cell, g] : c.refined.terms())
    area += abs(c.refined.complex().span(cell).coefficient(0b11)) / 2;
  EXPECT_EQ(area, q("1/2"));
  EXPECT_TRUE(mass(c.refined).total.contains(q("1/2")));
}

TEST(Cut, RegularValueRequired) {
  GChain s(segment_complex(0, 2), 1, Z());
  s.add_term({0, 1}, el(Z(), 1));
  EXPECT_GMT_ERROR(cut(s, AffineMap::functional(rv({1})), 2), ErrorCode::NonRegularValue);
}

TEST(Slice, SegmentGivesSignedPoint) {
  const auto g = el(Zmod(5), 2);
  GChain s(segment_complex(0, 2), 1, Zmod(5));
  s.add_term({0, 1}, g);
  const auto f = AffineMap::functional(rv({1}));
  const auto sl = slice(s, f, 1);
  ASSERT_EQ(sl.size(), 1u);
  const auto& [cell, coef] = *sl.terms().begin();
  EXPECT_EQ(sl.complex().points(cell), (std::vector<Point>{pt({1})}));
  // d([1,2] g) = {2} g - {1} g and the boundary term contributes {2} g
  EXPECT_EQ(coef, -g);
  const auto c = cut(s, f, 1);
  EXPECT_EQ(GeometricChain(boundary(c.upper)), GeometricChain(sl) + GeometricChain(upper_part(refine(boundary(s), c.cut), c.cut)));
}

TEST(Slice, OutsideRangeIsEmpty) {
  GChain s(segment_complex(0, 2), 1, Z());
  s.add_term({0, 1}, el(Z(), 1));
  EXPECT_TRUE(slice(s, AffineMap::functional(rv({1})), 5).is_zero());
}

TEST(Slice, UnitSquareAtHalf) {
  const auto g = el(Z(), -4);
  const auto s = square_chain(Z(), g);
  const auto sl = slice(s, AffineMap::functional(rv({1, 0})), q("1/2"));
  EXPECT_EQ(sl.dimension(), 1u);
  EXPECT_NEAR(mass(sl).value, 4.0, 1e-12);
  for (const auto& [cell, c] : sl.terms())
    for (const auto& p : sl.complex().points(cell)) EXPECT_EQ(p[0], q("1/2"));
}

TEST(PushForward, TranslationIsCongruent) {
  const auto s = square_chain(Z(), el(Z(), 2));
  const auto moved = push_forward(s, AffineMap::translation_by({q("1/3"), q("-2")}));
  EXPECT_EQ(moved.size(), 2u);
  EXPECT_NEAR(mass(moved).value, mass(s).value, 1e-12);
  EXPECT_EQ(boundary(moved).size(), 4u);
}

TEST(PushForward, FoldCancelsCoherentSegments) {
  const auto k = SimplicialComplex::build(1, {pt({-1}), pt({0}), pt({1})}, {{0, 1}, {1, 2}});
  GChain s(k, 1, Z());
  s.add_term({0, 1}, el(Z(), 3));
  s.add_term({1, 2}, el(Z(), 3));
  const std::vector<Point> fold{pt({1}), pt({0}), pt({1})};
  EXPECT_TRUE(push_forward(s, fold).is_zero());
  GChain t(k, 1, Z());
  t.add_term({1, 0}, el(Z(), 3));
  t.add_term({1, 2}, el(Z(), 3));
  const auto r = push_forward(t, fold);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.terms().begin()->second.norm(), 6);
}

TEST(PushForward, ProjectionOfSurfaceVanishes) {
  PushReport report;
  const auto r = push_forward(square_chain(Z(), el(Z(), 1)), AffineMap{RationalMatrix{{1, 0}}, rv({0})},
                              std::nullopt, &report);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(report.dropped, 2u);
}

TEST(Product, PointTimesChainIsACopy) {
  const auto point = SimplicialComplex::build(1, {pt({5})}, {{0}});
  GChain p(point, 0, Z());
  p.add_term({0}, el(Z(), 1));
  const auto s = square_chain(Zmod(3), el(Zmod(3), 2));
  const auto r = product(p, s);
  EXPECT_EQ(r.dimension(), 2u);
  EXPECT_EQ(r.size(), s.size());
  EXPECT_NEAR(mass(r).value, mass(s).value, 1e-12);
}

TEST(Product, SegmentTimesSegment) {
  GChain a(segment_complex(0, 1), 1, Z()), b(segment_complex(0, 1), 1, Z());
  a.add_term({0, 1}, el(Z(), 1));
  b.add_term({0, 1}, el(Z(), 5));
  const auto r = product(a, b);
  EXPECT_EQ(r.size(), 2u);
  EXPECT_TRUE(mass(r).total.contains(Rational(5)));
  // d(a x b) = da x b - a x db for m = 1
  EXPECT_EQ(GeometricChain(boundary(r)),
            GeometricChain(product(boundary(a), b)) - GeometricChain(product(a, boundary(b))));
}

TEST(Homotopy, EqualMapsGiveZero) {
  GChain s(segment_complex(0, 1), 1, Z());
  s.add_term({0, 1}, el(Z(), 1));
  const auto f = AffineMap{RationalMatrix{{2}, {1}}, rv({0, 0})};
  EXPECT_TRUE(homotopy_fill(f, f, s, 1).is_zero());
}

TEST(Homotopy, ZeroTimeGivesZero) {
  GChain s(segment_complex(0, 1), 1, Z());
  s.add_term({0, 1}, el(Z(), 1));
  const auto f = AffineMap::identity(1);
  EXPECT_TRUE(homotopy_fill(f, AffineMap::translation_by({Rational(3)}), s, 0).is_zero());
}

TEST(Homotopy, TranslatedSegmentSweepsAParallelogram) {
  const auto k = SimplicialComplex::build(2, {pt({0, 0}), pt({1, 0})}, {{0, 1}});
  GChain s(k, 1, Z());
  s.add_term({0, 1}, el(Z(), 2));
  const auto f = AffineMap::identity(2);
  const auto g = AffineMap::translation_by(rv({1, 1}));
  const auto h = homotopy_fill(f, g, s, 1);
  EXPECT_EQ(h.dimension(), 2u);
  // base 1, height 1, coefficient 2
  EXPECT_TRUE(mass(h).total.contains(Rational(2)));
  const auto lhs = GeometricChain(push_forward(s, g)) - GeometricChain(push_forward(s, f));
  const auto rhs = GeometricChain(boundary(h)) + GeometricChain(homotopy_fill(f, g, boundary(s), 1));
  EXPECT_EQ(lhs, rhs);
}

TEST(ModD, MultiplesOfDVanish) {
  GChain s(triangle(), 1, Z());
  s.add_term({0, 1}, el(Z(), 6));
  s.add_term({1, 2}, el(Z(), 7));
  const auto r = mod_d_reduce(s, 3);
  EXPECT_EQ(r.size(), 1u);
  EXPECT_EQ(r.coefficient({1, 2}), el(Zmod(3), 1));
  EXPECT_EQ(boundary(r), mod_d_reduce(boundary(s), 3));
}

TEST(Constancy, SquareRecoversCoefficient) {
  const auto g = el(Zmod(6), 5);
  const auto k = unit_square();
  const auto m = orient_manifold(k.cells(2));
  const auto t = square_chain(Zmod(6), g);
  const auto r = constancy_solve(t, m);
  ASSERT_TRUE(r.consistent);
  // the fundamental chain follows the orientation of the first cell
  EXPECT_EQ(fundamental_chain(k, m, *r.value), t);
}

TEST(Constancy, PerturbedTriangleIsFlaggedOnTheDiagonal) {
  const auto g = el(Z(), 1);
  GChain t(unit_square(), 2, Z());
  t.add_term({0, 1, 3}, g);
  t.add_term({0, 3, 2}, g.times(2));
  const auto r = constancy_solve(t, orient_manifold(unit_square().cells(2)));
  EXPECT_FALSE(r.consistent);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, (Cell{0, 3}));
}

SimplicialComplex cube_surface() {
  std::vector<Point> v;
  for (long x = 0; x <= 1; ++x)
    for (long y = 0; y <= 1; ++y)
      for (long z = 0; z <= 1; ++z) v.push_back(pt({x, y, z}));
  auto id = [](long x, long y, long z) { return static_cast<VertexId>(4 * x + 2 * y + z); };
  std::vector<Cell> cells;
  auto quad = [&](VertexId a, VertexId b, VertexId c, VertexId d) {
    cells.push_back({a, b, c});
    cells.push_back({a, c, d});
  };
  quad(id(0, 0, 0), id(1, 0, 0), id(1, 1, 0), id(0, 1, 0));
  quad(id(0, 0, 1), id(1, 0, 1), id(1, 1, 1), id(0, 1, 1));
  quad(id(0, 0, 0), id(1, 0, 0), id(1, 0, 1), id(0, 0, 1));
  quad(id(0, 1, 0), id(1, 1, 0), id(1, 1, 1), id(0, 1, 1));
  quad(id(0, 0, 0), id(0, 1, 0), id(0, 1, 1), id(0, 0, 1));
  quad(id(1, 0, 0), id(1, 1, 0), id(1, 1, 1), id(1, 0, 1));
  return SimplicialComplex::build(3, v, cells);
}

TEST(Constancy, ClosedCubeSurface) {
  const auto k = cube_surface();
  const auto m = orient_manifold(k.cells(2));
  const auto g = el(Z(), -3);
  const auto t = fundamental_chain(k, m, g);
  EXPECT_EQ(t.size(), 12u);
  EXPECT_TRUE(boundary(t).is_zero());
  const auto r = constancy_solve(t, m);
  ASSERT_TRUE(r.consistent);
  EXPECT_EQ(*r.value, g);
}

TEST(Constancy, BadManifolds) {
  // two triangles meeting in a vertex only
  EXPECT_GMT_ERROR(orient_manifold({{0, 1, 2}, {2, 3, 4}}), ErrorCode::NotConnected);
  // three triangles on one edge
  EXPECT_GMT_ERROR(orient_manifold({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}), ErrorCode::NotManifold);
}

TEST(Mass, Examples) {
  GChain s(segment_complex(0, 1), 1, Z());
  s.add_term({0, 1}, el(Z(), 3));
  EXPECT_TRUE(mass(s).total.contains(Rational(3)));
  EXPECT_TRUE(mass(square_chain(Zmod(7), el(Zmod(7), 5))).total.contains(Rational(2)));
  EXPECT_EQ(mass(GChain(triangle(), 1, Z())).value, 0.0);
}

TEST(Mass, IrrationalLengthIsEnclosed) {
  GChain s(triangle(), 1, Z());
  s.add_term({1, 2}, el(Z(), 1));
  const auto m = mass(s);
  EXPECT_TRUE(m.total.contains(std::sqrt(2.0)));
  EXPECT_LT(m.total.width(), 1e-14);
  ASSERT_EQ(m.gram.size(), 1u);
  EXPECT_EQ(m.gram[0].second, 2);
}

}  // namespace
}  // namespace gmt::testing

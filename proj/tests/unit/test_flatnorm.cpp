#include <limits>

#include "support.hpp"

namespace gmt::testing {
namespace {

GChain square_loop(const NormedGroup& g) { return boundary(square_chain(g, el(g, 1))); }

void expect_exact_decomposition(const GChain& s, const FlatDecomposition& d) {
  EXPECT_EQ(d.q + boundary(d.r), s);
  EXPECT_NEAR(d.value, mass(d.q).value + mass(d.r).value, 1e-9);
  EXPECT_LE(d.certificate.max_violation, 1e-9);
  EXPECT_NEAR(d.certificate.dual_objective, d.value, 1e-9);
}

TEST(FlatNorm, UnitSquareLoopIsFilled) {
  const auto s = square_loop(Q());
  const auto d = flat_norm(s);
  EXPECT_NEAR(d.value, 1.0, 1e-9);
  EXPECT_TRUE(d.q.is_zero());
  EXPECT_EQ(d.r, square_chain(Q(), el(Q(), 1)));
  expect_exact_decomposition(s, d);
}

TEST(FlatNorm, UnitSquareLoopAgainstFillScan) {
  // mass(S - dR) + mass(R) over R = a [0,1,3] + b [0,3,2] on a 1/8 grid
  const auto s = square_loop(Q());
  double best = std::numeric_limits<double>::infinity();
  for (int i = -16; i <= 16; ++i)
    for (int j = -16; j <= 16; ++j) {
      GChain r(s.complex(), 2, Q());
      r.add_term({0, 1, 3}, Rational(i, 8));
      r.add_term({0, 3, 2}, Rational(j, 8));
      best = std::min(best, mass(s - boundary(r)).value + mass(r).value);
    }
  EXPECT_NEAR(best, 1.0, 1e-12);
  EXPECT_NEAR(flat_norm(s).value, best, 1e-9);
}

TEST(FlatNorm, SegmentWithoutFillIsItsMass) {
  GChain s(segment_complex(0, 1), 1, Q());
  s.add_term({0, 1}, Rational(1));
  const auto d = flat_norm(s);
  EXPECT_NEAR(d.value, 1.0, 1e-12);
  EXPECT_TRUE(d.r.is_zero());
  expect_exact_decomposition(s, d);
}

TEST(FlatNorm, ZeroChain) {
  const GChain s(unit_square(), 1, Q());
  const auto d = flat_norm(s);
  EXPECT_EQ(d.value, 0.0);
  EXPECT_TRUE(d.q.is_zero());
  EXPECT_TRUE(d.r.is_zero());
}

TEST(FlatNorm, NeverExceedsMass) {
  auto s = square_loop(Q());
  s.add_term({0, 3}, q("5/2"));
  const auto d = flat_norm(s);
  EXPECT_LE(d.value, mass(s).value + 1e-9);
  expect_exact_decomposition(s, d);
}

TEST(FlatNorm, IntegralChainsAreReadAsRational) {
  const auto d = flat_norm(square_loop(Z()));
  EXPECT_NEAR(d.value, 1.0, 1e-9);
  EXPECT_EQ(d.q.group(), Q());
}

TEST(FlatNorm, WeightsOverrideVolumes) {
  FlatNormProblem p{square_loop(Q()), {{{0, 1, 3}, 10.0}, {{0, 2, 3}, 10.0}}};
  // filling now costs 20, so the loop keeps its perimeter
  EXPECT_NEAR(flat_norm(p).value, 4.0, 1e-9);
  EXPECT_EQ(cell_weight(p.chain.complex(), {0, 1, 3}, p.weights), 10.0);
  EXPECT_NEAR(cell_weight(p.chain.complex(), {0, 1, 3}, {}), 0.5, 1e-15);
}

TEST(FlatDistance, SelfDistanceIsZero) {
  const auto s = square_loop(Q());
  EXPECT_EQ(flat_distance(s, s), 0.0);
}

TEST(FlatDistance, OppositeEdgesOfAStrip) {
  // 1 x 1/4 rectangle; S top and T bottom, both left to right. S - T plus the
  // two sides bounds the rectangle, so the optimum is min(2, 3/4): the fill
  // costs its area 1/4 plus the two sides 1/2.
  const auto k = SimplicialComplex::build(2, {pt({0, 0}), pt({1, 0}), Point{0, q("1/4")}, Point{1, q("1/4")}},
                                          {{0, 1, 3}, {0, 2, 3}});
  GChain s(k, 1, Q()), t(k, 1, Q());
  s.add_term({2, 3}, Rational(1));
  t.add_term({0, 1}, Rational(1));
  EXPECT_NEAR(flat_distance(s, t), 0.75, 1e-9);
  EXPECT_NEAR(flat_distance(s, t), flat_distance(t, s), 1e-12);
}

// Square annulus [0,3]^2 minus (1,2)^2, every unit square split on its
// diagonal.
SimplicialComplex annulus() {
  std::vector<Point> v;
  for (long y = 0; y <= 3; ++y)
    for (long x = 0; x <= 3; ++x) v.push_back(pt({x, y}));
  auto id = [](long x, long y) { return static_cast<VertexId>(4 * y + x); };
  std::vector<Cell> cells;
  for (long y = 0; y < 3; ++y)
    for (long x = 0; x < 3; ++x) {
      if (x == 1 && y == 1) continue;
      cells.push_back({id(x, y), id(x + 1, y), id(x + 1, y + 1)});
      cells.push_back({id(x, y), id(x, y + 1), id(x + 1, y + 1)});
    }
  return SimplicialComplex::build(2, v, cells);
}

TEST(FlatDistance, LoopAroundTheHoleStaysAway) {
  const auto k = annulus();
  auto id = [](long x, long y) { return static_cast<VertexId>(4 * y + x); };
  GChain inner(k, 1, Q());
  inner.add_term({id(1, 1), id(2, 1)}, Rational(1));
  inner.add_term({id(2, 1), id(2, 2)}, Rational(1));
  inner.add_term({id(2, 2), id(1, 2)}, Rational(1));
  inner.add_term({id(1, 2), id(1, 1)}, Rational(1));
  ASSERT_TRUE(boundary(inner).is_zero());
  const GChain zero(k, 1, Q());
  const double d = flat_distance(inner, zero);
  EXPECT_GT(d, 0.0);
  // sweeping outward trades 4 for 12 plus area 8: keeping the loop is optimal
  EXPECT_NEAR(d, 4.0, 1e-9);
  expect_exact_decomposition(inner, flat_norm(inner));
}

TEST(FlatDistance, TriangleInequality) {
  const auto k = unit_square();
  GChain a(k, 1, Q()), b(k, 1, Q()), c(k, 1, Q());
  a.add_term({0, 1}, Rational(1));
  b.add_term({2, 3}, Rational(1));
  c.add_term({0, 3}, q("1/2"));
  EXPECT_LE(flat_distance(a, c), flat_distance(a, b) + flat_distance(b, c) + 1e-9);
  EXPECT_LE(flat_distance(a, b), flat_distance(a, c) + flat_distance(c, b) + 1e-9);
}

TEST(IntegralFlatNorm, UnitSquareLoop) {
  const auto s = square_loop(Z());
  const auto d = integral_flat_norm(s);
  EXPECT_NEAR(d.value, 1.0, 1e-9);
  EXPECT_EQ(d.q + boundary(d.r), s);
  EXPECT_EQ(d.r.group(), Z());
}

TEST(IntegralFlatNorm, NeverBeatsTheRationalNorm) {
  auto s = square_loop(Z());
  s.add_term({0, 3}, el(Z(), 2));
  const auto d = integral_flat_norm(s);
  EXPECT_GE(d.value + 1e-9, flat_norm(s).value);
  EXPECT_EQ(d.q + boundary(d.r), s);
}

TEST(IntegralFlatNorm, RefusesRationalChains) {
  EXPECT_GMT_ERROR(integral_flat_norm(square_loop(Q())), ErrorCode::GroupMismatch);
}

}  // namespace
}  // namespace gmt::testing

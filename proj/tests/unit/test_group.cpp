#include <numeric>

#include "support.hpp"

namespace gmt::testing {
namespace {

TEST(GroupArithmetic, CyclicWrapsAround) {
  const auto g = Zmod(4);
  EXPECT_EQ(el(g, 3) + el(g, 3), el(g, 2));
  EXPECT_EQ(el(g, 3).norm(), 1);
  EXPECT_EQ(el(g, -1), el(g, 3));
}

TEST(GroupArithmetic, IntegersHaveInverses) {
  EXPECT_TRUE((el(Z(), 5) + el(Z(), -5)).is_zero());
  EXPECT_EQ(el(Z(), -7).norm(), 7);
}

TEST(GroupArithmetic, DirectSumIsComponentwise) {
  const auto g = NormedGroup::direct_sum({Z(), Zmod(2)});
  const GroupElement a(g, rv({1, 1})), b(g, rv({2, 1}));
  EXPECT_EQ(a + b, GroupElement(g, rv({3, 0})));
}

TEST(GroupNorm, DirectSumAddsComponentNorms) {
  const auto g = NormedGroup::direct_sum({Z(), Zmod(3)});
  // 2 + min(2, 1)
  EXPECT_EQ(GroupElement(g, rv({2, 2})).norm(), 3);
}

TEST(GroupNorm, ZeroHasNormZero) {
  for (const auto& g : {Z(), Zmod(5), Q(), NormedGroup::direct_sum({Z(), Zmod(2)})})
    EXPECT_EQ(GroupElement(g).norm(), 0) << g.describe();
}

TEST(GroupNorm, RationalsUseAbsoluteValue) {
  EXPECT_EQ(GroupElement::scalar(Q(), q("-3/7")).norm(), q("3/7"));
}

TEST(GroupNorm, QuotientLatticeTranslates) {
  const auto g = NormedGroup::quotient_lattice(2, IntMatrix{{2, 0}});
  const GroupElement v(g, rv({3, 0}));
  // min over j of |3 - 2j| + 0
  Rational best = 100;
  for (long j = -5; j <= 5; ++j) best = std::min(best, Rational(std::abs(3 - 2 * j)));
  EXPECT_EQ(v.norm(), best);
  EXPECT_EQ(quotient_norm(g, v), 1);
}

TEST(GroupNorm, OneGeneratorLatticeMatchesCyclic) {
  for (long d = 1; d <= 12; ++d) {
    const auto lattice = NormedGroup::quotient_lattice(1, IntMatrix{{Integer(d)}});
    for (long k = -2 * d; k <= 2 * d; ++k)
      EXPECT_EQ(GroupElement(lattice, {Rational(k)}).norm(), el(Zmod(d), k).norm()) << d << " " << k;
  }
}

TEST(GroupNorm, MixedGroupsRefuseAddition) {
  EXPECT_GMT_ERROR(el(Z(), 1) + el(Zmod(2), 1), ErrorCode::GroupMismatch);
}

// gcd of all k x k minors of a 2 x 2 matrix, for k = 1, 2.
std::pair<long, long> determinantal_divisors(long a, long b, long c, long d) {
  const long g1 = std::gcd(std::gcd(a, b), std::gcd(c, d));
  return {g1, std::abs(a * d - b * c)};
}

TEST(Smith, TwoByTwoMatchesDeterminantalDivisors) {
  const IntMatrix m{{2, 4}, {6, 8}};
  const auto s = smith_normal_form(m);
  EXPECT_EQ(s.U * m * s.V, s.D);
  const auto [d1, d12] = determinantal_divisors(2, 4, 6, 8);
  EXPECT_EQ(s.diagonal(), (std::vector<Integer>{d1, d12 / d1}));
  EXPECT_EQ(s.diagonal(), (std::vector<Integer>{2, 4}));
}

TEST(Smith, IdentityIsAlreadyDiagonal) {
  const auto s = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(s.diagonal(), (std::vector<Integer>{1, 1, 1}));
  EXPECT_EQ(s.rank(), 3u);
}

TEST(Smith, ZeroMatrix) {
  const auto s = smith_normal_form(IntMatrix{{0}});
  EXPECT_EQ(s.diagonal(), (std::vector<Integer>{0}));
  EXPECT_EQ(s.rank(), 0u);
}

TEST(Smith, UnimodularFactors) {
  const IntMatrix m{{3, 1, 4}, {1, 5, 9}, {2, 6, 5}, {3, 5, 8}};
  const auto s = smith_normal_form(m);
  EXPECT_EQ(s.U * m * s.V, s.D);
  EXPECT_EQ(abs(integer_determinant(s.U)), 1);
  EXPECT_EQ(abs(integer_determinant(s.V)), 1);
  const auto d = s.diagonal();
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] != 0) EXPECT_EQ(d[i] % d[i - 1], 0);
}

TEST(Tensor, IntegersModTwo) {
  const auto inv = invariants(tensor_mod_d(Presentation::free(1), 2));
  EXPECT_EQ(inv.torsion, (std::vector<Integer>{2}));
  EXPECT_EQ(inv.free_rank, 0u);
}

TEST(Tensor, CyclicSixModFour) {
  const auto inv = invariants(tensor_mod_d(Presentation::diagonal({6}), 4));
  EXPECT_EQ(inv.torsion, (std::vector<Integer>{2}));
}

TEST(Tensor, IntegersPlusCyclicThreeModThree) {
  const auto inv = invariants(tensor_mod_d(Presentation::diagonal({0, 3}), 3));
  EXPECT_EQ(inv.torsion, (std::vector<Integer>{3, 3}));
  EXPECT_EQ(inv.free_rank, 0u);
}

TEST(Tensor, ZeroDKeepsTheGroup) {
  const auto inv = invariants(tensor_mod_d(Presentation::diagonal({0, 4, 6}), 0));
  EXPECT_EQ(inv.torsion, (std::vector<Integer>{2, 12}));
  EXPECT_EQ(inv.free_rank, 1u);
}

GroupHom multiplication(long k) {
  return {Presentation::free(1), Presentation::free(1), IntMatrix{{Integer(k)}}};
}

TEST(Univalence, InclusionOfEvenIntegersFailsModTwo) {
  const auto v = check_mono_at(multiplication(2), 2);
  EXPECT_FALSE(v.univalent);
  ASSERT_EQ(v.witness.size(), 1u);
  // the witness is odd (outside 2B) and its image 2w lies in 2A
  EXPECT_NE(v.witness[0] % 2, 0);
}

TEST(Univalence, IdentityIsUnivalentForEveryD) {
  for (const auto& v : check_mono_condition(multiplication(1), 12)) EXPECT_TRUE(v.univalent) << v.d;
}

TEST(Univalence, TimesThreeFailsModThree) {
  EXPECT_FALSE(check_mono_at(multiplication(3), 3).univalent);
  EXPECT_TRUE(check_mono_at(multiplication(3), 2).univalent);
  EXPECT_TRUE(check_mono_at(multiplication(3), 0).univalent);
}

TEST(Univalence, IllDefinedHomIsRejected) {
  // Z/2 -> Z/3 sending 1 to 1 does not respect 2 = 0
  const GroupHom f{Presentation::diagonal({2}), Presentation::diagonal({3}), IntMatrix{{1}}};
  EXPECT_FALSE(f.well_defined());
}

}  // namespace
}  // namespace gmt::testing

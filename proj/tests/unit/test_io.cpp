#include <filesystem>
#include <fstream>
#include <sstream>

#include "gmt/io/documents.hpp"
#include "support.hpp"

namespace gmt::testing {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> fixtures() {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(GMT_FIXTURE_DIR))
    if (entry.path().extension() == ".json") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ChainDocument, FixturesRoundTripByteForByte) {
  const auto files = fixtures();
  ASSERT_GE(files.size(), 5u);
  for (const auto& f : files) {
    const std::string text = slurp(f);
    const GChain s = io::chain_from(io::parse(text));
    EXPECT_EQ(io::chain_json(s).dump(2) + "\n", text) << f;
  }
}

TEST(ChainDocument, UnitSquareLoopFixtureIsTheBoundaryOfTheSquare) {
  const auto sq = io::chain_from(io::parse(slurp(fs::path(GMT_FIXTURE_DIR) / "unit_square.json")));
  const auto loop = io::chain_from(io::parse(slurp(fs::path(GMT_FIXTURE_DIR) / "unit_square_loop.json")));
  EXPECT_EQ(to_rational(boundary(sq)), loop);
}

TEST(ChainDocument, RationalsAreStrings) {
  const auto k = SimplicialComplex::build(1, {Point{q("-1/3")}, Point{q("7/2")}}, {{0, 1}});
  GChain s(k, 1, Q());
  s.add_term({0, 1}, q("-22/7"));
  const auto j = io::chain_json(s);
  EXPECT_EQ(j["complex"]["vertices"][0][0], "-1/3");
  EXPECT_EQ(j["chain"]["cells"][0]["coefficient"], "-22/7");
  EXPECT_EQ(io::chain_from(j), s);
}

TEST(ChainDocument, ParseErrors) {
  EXPECT_GMT_ERROR(io::parse("{\"schema\": "), ErrorCode::ParseError);
  EXPECT_GMT_ERROR(parse_rational("1/0"), ErrorCode::ParseError);
  EXPECT_GMT_ERROR(parse_rational("x"), ErrorCode::ParseError);
  auto j = io::chain_json(square_chain(Z(), el(Z(), 1)));
  j["chain"]["cells"][0]["coefficient"] = "1/2";
  EXPECT_GMT_ERROR(io::chain_from(j), ErrorCode::ParseError);
  j = io::chain_json(square_chain(Z(), el(Z(), 1)));
  j["group"] = {{"kind", "klein"}};
  EXPECT_GMT_ERROR(io::chain_from(j), ErrorCode::ParseError);
  j = io::chain_json(square_chain(Z(), el(Z(), 1)));
  j["complex"]["vertices"][0] = io::json::array({"0"});
  EXPECT_GMT_ERROR(io::chain_from(j), ErrorCode::ParseError);
}

TEST(ChainDocument, InvalidComplexIsAPreconditionError) {
  auto j = io::chain_json(square_chain(Z(), el(Z(), 1)));
  // move vertex 3 onto vertex 0
  j["complex"]["vertices"][3] = io::json::array({"0", "0"});
  EXPECT_GMT_ERROR(io::chain_from(j), ErrorCode::InvalidComplex);
}

TEST(GroupDocument, AllKindsRoundTrip) {
  const std::vector<NormedGroup> groups{
      Z(), Q(), Zmod(12), NormedGroup::direct_sum({Z(), Zmod(2), Q()}),
      NormedGroup::quotient_lattice(2, IntMatrix{{2, 4}, {0, 3}})};
  for (const auto& g : groups) EXPECT_EQ(io::group_from(io::group_json(g)), g) << g.describe();
}

TEST(AffineDocument, RoundTrip) {
  const AffineMap f{RationalMatrix{{q("1/2"), 0}, {3, -1}}, {q("5/3"), 0}};
  const auto back = io::affine_from(io::affine_json(f));
  EXPECT_EQ(back.apply(pt({2, 7})), f.apply(pt({2, 7})));
  EXPECT_EQ(io::affine_json(back), io::affine_json(f));
}

TEST(Numbers, TwelveSignificantDigits) {
  EXPECT_EQ(io::format_double(1.0), "1");
  EXPECT_EQ(io::format_double(2.0 / 3.0), "0.666666666667");
}

}  // namespace
}  // namespace gmt::testing

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "gmt/gmt.hpp"

namespace gmt::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

inline std::vector<Rational> rv(std::initializer_list<long> xs) { return pt(xs); }

inline NormedGroup Z() { return NormedGroup::integers(); }
inline NormedGroup Zmod(long d) { return NormedGroup::cyclic(d); }
inline NormedGroup Q() { return NormedGroup::rationals(); }

inline GroupElement el(const NormedGroup& g, long v) { return GroupElement::scalar(g, Rational(v)); }

/// Unit square [0,1]^2 split along the diagonal 0-3:
/// 0=(0,0) 1=(1,0) 2=(0,1) 3=(1,1), triangles {0,1,3} and {0,2,3}.
inline SimplicialComplex unit_square() {
  return SimplicialComplex::build(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})}, {{0, 1, 3}, {0, 2, 3}});
}

/// Counter-clockwise 2-chain on unit_square(): [0,1,3] is positive and
/// [0,2,3] is negative in the plane.
inline GChain square_chain(const NormedGroup& g, const GroupElement& c) {
  GChain s(unit_square(), 2, g);
  s.add_term({0, 1, 3}, c);
  s.add_term({0, 3, 2}, c);
  return s;
}

inline SimplicialComplex segment_complex(long a, long b) {
  return SimplicialComplex::build(1, {pt({a}), pt({b})}, {{0, 1}});
}

/// Expects `expr` to throw gmt::Error with the given code.
#define EXPECT_GMT_ERROR(expr, err_code)                                   \
  do {                                                                     \
    try {                                                                  \
      (void)(expr);                                                        \
      ADD_FAILURE() << "expected " << ::gmt::to_string(err_code);          \
    } catch (const ::gmt::Error& e) {                                      \
      EXPECT_EQ(e.code(), err_code) << e.what();                           \
    }                                                                      \
  } while (0)

}  // namespace gmt::testing

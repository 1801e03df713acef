#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace gmt {

// Expression templates off: results are plain values, safe with auto and ?:.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// A point of rational n-space.
using Point = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q". Throws Error(ParseError) on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" (q > 0, lowest terms) otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

double to_double(const Rational& q);

/// Exact rational closest-below/above representation of a finite double.
Rational from_double(double x);

Integer floor_div(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
/// floor(sqrt(z)) for z >= 0.
Integer isqrt(const Integer& z);
Integer lcm(const Integer& a, const Integer& b);

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline int sign(const Rational& q) { return q.sign(); }

/// Closed interval of doubles with outward rounding. Each operation evaluates
/// in round-to-nearest and then widens by one ulp on each side, which encloses
/// the exact result of the operation on any enclosed arguments.
class Interval {
 public:
  Interval() = default;
  explicit Interval(double point) : lo_(point), hi_(point) {}
  Interval(double lo, double hi);

  static Interval enclose(const Rational& q);
  /// Encloses sqrt(q) for q >= 0; exact perfect squares collapse to a point.
  static Interval sqrt_of(const Rational& q);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  double width() const { return hi_ - lo_; }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Rational& q) const;

  Interval operator-() const { return Interval(-hi_, -lo_); }
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval& operator+=(const Interval& b) { return *this = *this + b; }

  friend Interval sqrt(const Interval& a);
  friend Interval hull(const Interval& a, const Interval& b);
  friend Interval min(const Interval& a, const Interval& b);

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

}  // namespace gmt

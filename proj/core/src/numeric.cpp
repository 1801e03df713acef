#include "gmt/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "gmt/error.hpp"

namespace gmt {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::NotFinitelyGenerated: return "NotFinitelyGenerated";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegreeError: return "DegreeError";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::FiberMismatch: return "FiberMismatch";
    case ErrorCode::RankCollapse: return "RankCollapse";
    case ErrorCode::CorankCollapse: return "CorankCollapse";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::DimensionZero: return "DimensionZero";
    case ErrorCode::NonRegularValue: return "NonRegularValue";
    case ErrorCode::OverlayUnsupported: return "OverlayUnsupported";
    case ErrorCode::NotManifold: return "NotManifold";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::SolverStall: return "SolverStall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  auto s = trim(text);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) fail(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return Integer(buf);
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  std::string_view den_text = trim(s.substr(slash + 1));
  if (!all_digits(den_text)) fail(ErrorCode::ParseError, "bad denominator in '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const auto& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational from_double(double x) { return Rational(x); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer floor(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

Integer ceil(const Rational& q) { return -floor(-q); }

Integer isqrt(const Integer& z) {
  if (z <= 0) return Integer(0);
  return boost::multiprecision::sqrt(z);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return Integer(0);
  return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

// --- Interval ---------------------------------------------------------------

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo <= hi)) throw std::invalid_argument("Interval: lo > hi");
}

bool Interval::contains(const Rational& q) const {
  return Rational(lo_) <= q && q <= Rational(hi_);
}

Interval Interval::enclose(const Rational& q) {
  double d = to_double(q);
  if (Rational(d) == q) return Interval(d);
  return Interval(down(d), up(d));
}

Interval Interval::sqrt_of(const Rational& q) {
  if (q < 0) throw std::domain_error("sqrt_of: negative argument");
  if (q == 0) return Interval(0.0);
  double s = std::sqrt(to_double(q));
  if (Rational(s) * Rational(s) == q) return Interval(s);
  double lo = down(down(s));
  double hi = up(up(s));
  // Certify against the exact square; widen until both bounds hold.
  while (lo > 0 && Rational(lo) * Rational(lo) > q) lo = down(lo);
  if (lo < 0) lo = 0;
  while (Rational(hi) * Rational(hi) < q) hi = up(hi);
  return Interval(lo, hi);
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(down(a.lo_ + b.lo_), up(a.hi_ + b.hi_));
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(down(a.lo_ - b.hi_), up(a.hi_ - b.lo_));
}

Interval operator*(const Interval& a, const Interval& b) {
  double p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return Interval(down(*mn), up(*mx));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo_ <= 0.0 && b.hi_ >= 0.0) return Interval(-kInf, kInf);
  double p[4] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
  auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return Interval(down(*mn), up(*mx));
}

Interval sqrt(const Interval& a) {
  if (a.hi_ < 0.0) throw std::domain_error("sqrt of a negative interval");
  double lo = a.lo_ <= 0.0 ? 0.0 : down(std::sqrt(a.lo_));
  return Interval(std::max(0.0, lo), up(std::sqrt(a.hi_)));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

Interval min(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo_, b.lo_), std::min(a.hi_, b.hi_));
}

}  // namespace gmt

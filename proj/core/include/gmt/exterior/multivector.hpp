#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "gmt/error.hpp"
#include "gmt/matrix.hpp"
#include "gmt/numeric.hpp"

namespace gmt {

/// Basis blade as a bitmask: bit i set means e_{i+1} participates.
using Blade = std::uint32_t;

inline constexpr std::size_t kMaxAmbient = 31;

inline int blade_degree(Blade b) { return std::popcount(b); }

/// Lexicographic order of increasing index tuples, degree first.
struct BladeLess {
  bool operator()(Blade a, Blade b) const {
    const int da = blade_degree(a), db = blade_degree(b);
    if (da != db) return da < db;
    const Blade x = a ^ b;
    if (!x) return false;
    return (a & (x & (~x + 1))) != 0;
  }
};

/// Sign of e_a ^ e_b for disjoint blades (0 when they overlap).
int wedge_sign(Blade a, Blade b);
/// 1-based index tuple of a blade.
std::vector<int> blade_indices(Blade b);
Blade blade_from_indices(const std::vector<int>& one_based);
/// All degree-m blades of n-space in lexicographic order.
std::vector<Blade> blades_of_degree(std::size_t n, std::size_t m);

struct VectorTag {};
struct CovectorTag {};

/// Sparse alternating tensor of fixed degree over Q^n. Zero coefficients are
/// never stored. MultiVector and CoVector share the representation but are
/// distinct types so that the contraction cannot be applied the wrong way.
template <class Tag>
class Alternating {
 public:
  using Terms = std::map<Blade, Rational, BladeLess>;

  Alternating() = default;
  /// degree > n is allowed and stands for the zero space.
  Alternating(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {
    if (n > kMaxAmbient) fail(ErrorCode::DimensionMismatch, "ambient dimension above 31");
  }

  static Alternating scalar(std::size_t n, const Rational& value) {
    Alternating a(n, 0);
    a.set(0, value);
    return a;
  }
  static Alternating basis(std::size_t n, const std::vector<int>& one_based) {
    Alternating a(n, one_based.size());
    Blade b = blade_from_indices(one_based);
    if (static_cast<std::size_t>(blade_degree(b)) != one_based.size() || (n < 32 && (b >> n)))
      fail(ErrorCode::DegreeError, "basis indices must be distinct and within range");
    // unsorted indices carry the permutation sign
    int s = 1;
    for (std::size_t i = 0; i < one_based.size(); ++i)
      for (std::size_t j = i + 1; j < one_based.size(); ++j)
        if (one_based[i] > one_based[j]) s = -s;
    a.set(b, Rational(s));
    return a;
  }
  static Alternating vector(const std::vector<Rational>& coords) {
    Alternating a(coords.size(), 1);
    for (std::size_t i = 0; i < coords.size(); ++i) a.set(Blade(1) << i, coords[i]);
    return a;
  }

  std::size_t ambient() const { return n_; }
  std::size_t degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  /// Dense coefficients in the lexicographic basis of degree-m blades.
  std::vector<Rational> dense() const {
    std::vector<Rational> out;
    for (Blade b : blades_of_degree(n_, degree_)) out.push_back(coefficient(b));
    return out;
  }

  void set(Blade b, const Rational& value) {
    if (value == 0) terms_.erase(b);
    else terms_[b] = value;
  }
  void accumulate(Blade b, const Rational& value) {
    if (value == 0) return;
    auto [it, fresh] = terms_.try_emplace(b, value);
    if (!fresh) {
      it->second += value;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Alternating& operator+=(const Alternating& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_) accumulate(b, c);
    return *this;
  }
  Alternating& operator-=(const Alternating& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_) accumulate(b, -c);
    return *this;
  }
  Alternating& operator*=(const Rational& k) {
    if (k == 0) terms_.clear();
    for (auto& [b, c] : terms_) c *= k;
    return *this;
  }
  friend Alternating operator+(Alternating a, const Alternating& b) { return a += b; }
  friend Alternating operator-(Alternating a, const Alternating& b) { return a -= b; }
  friend Alternating operator*(const Rational& k, Alternating a) { return a *= k; }
  Alternating operator-() const {
    Alternating a = *this;
    for (auto& [b, c] : a.terms_) c = -c;
    return a;
  }
  friend bool operator==(const Alternating& a, const Alternating& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string describe() const {
    if (terms_.empty()) return "0";
    std::string out;
    const char* letter = std::is_same_v<Tag, CovectorTag> ? "e^" : "e";
    for (const auto& [b, c] : terms_) {
      if (!out.empty()) out += " + ";
      if (b == 0) {
        out += to_string(c);
        continue;
      }
      if (c == -1) out += "-";
      else if (c != 1) out += to_string(c) + "*";
      out += letter;
      const auto idx = blade_indices(b);
      if (n_ < 10) {
        for (int i : idx) out += std::to_string(i);
      } else {
        out += "{";
        for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i]);
        out += "}";
      }
    }
    return out;
  }

  void check_same(const Alternating& o) const {
    if (o.n_ != n_) fail(ErrorCode::DimensionMismatch, "ambient dimensions differ");
    if (o.degree_ != degree_) fail(ErrorCode::DegreeError, "degrees differ");
  }

 private:
  std::size_t n_ = 0;
  std::size_t degree_ = 0;
  Terms terms_;
};

using MultiVector = Alternating<VectorTag>;
using CoVector = Alternating<CovectorTag>;

/// Linear map Q^n -> Q^nu given by its nu x n matrix.
struct LinearMap {
  RationalMatrix matrix;

  std::size_t source_dim() const { return matrix.cols(); }
  std::size_t target_dim() const { return matrix.rows(); }
  static LinearMap identity(std::size_t n) { return {RationalMatrix::identity(n)}; }
  /// (*this) after `inner`.
  LinearMap after(const LinearMap& inner) const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;
};

template <class Tag>
Alternating<Tag> wedge(const Alternating<Tag>& a, const Alternating<Tag>& b) {
  if (a.ambient() != b.ambient()) fail(ErrorCode::DimensionMismatch, "wedge: ambient dimensions differ");
  Alternating<Tag> out(a.ambient(), a.degree() + b.degree());
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      const int s = wedge_sign(x, y);
      if (s) out.accumulate(x | y, s > 0 ? cx * cy : -(cx * cy));
    }
  return out;
}

/// The induced map on m-vectors.
MultiVector push(const LinearMap& l, const MultiVector& a);

/// h_1 ^ ... ^ h_k for the rows h_i of a k x n matrix.
CoVector covector_of_rows(const RationalMatrix& rows);

/// Left contraction: e_I | e^J = sign(J, I\J) e_{I\J} when J is contained in
/// I, else 0; extended bilinearly. It is adjoint to left wedge
/// multiplication: (a | w) . b = a . (w# ^ b).
MultiVector interior(const MultiVector& a, const CoVector& w);

/// Euclidean pairing of coefficients in the lexicographic basis.
Rational dot(const MultiVector& a, const MultiVector& b);
inline Rational norm_squared(const MultiVector& a) { return dot(a, a); }

/// (v_1 - v_0) ^ ... ^ (v_m - v_0).
MultiVector span_vector(const std::vector<Point>& vertices);

/// Decides decomposability in any degree: a nonzero m-vector z is simple iff
/// the linear map v -> v ^ z on Q^n has a kernel of dimension m.
bool is_simple(const MultiVector& a);

/// A basis of the plane of a nonzero simple m-vector (its annihilator under
/// v -> v ^ z).
std::vector<std::vector<Rational>> plane_basis(const MultiVector& a);

}  // namespace gmt

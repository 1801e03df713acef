#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gmt/chains/complex.hpp"
#include "gmt/group/normed_group.hpp"

namespace gmt {

/// Finitely supported map from m-cells of a complex to a coefficient group.
/// Coefficients are taken along the sorted orientation of each cell: adding
/// (cell in another vertex order, g) stores (sorted cell, parity * g), which
/// is the identification (-cell, g) = (cell, -g). Zero terms are pruned.
class GChain {
 public:
  using Terms = std::map<Cell, GroupElement>;

  GChain(SimplicialComplex complex, std::size_t dimension, NormedGroup group);

  const SimplicialComplex& complex() const { return complex_; }
  std::size_t dimension() const { return m_; }
  const NormedGroup& group() const { return group_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient along the sorted orientation (zero when absent).
  GroupElement coefficient(const Cell& sorted) const;

  /// Adds g on the oriented simplex `vertices` (any order). The simplex must
  /// be an m-cell of the complex (CarrierMismatch otherwise).
  GChain& add_term(Cell vertices, const GroupElement& g);
  /// Convenience for single-slot groups.
  GChain& add_term(Cell vertices, const Rational& value);

  GChain& operator+=(const GChain& other);
  GChain& operator-=(const GChain& other);
  GChain operator-() const;
  friend GChain operator+(GChain a, const GChain& b) { return a += b; }
  friend GChain operator-(GChain a, const GChain& b) { return a -= b; }

  /// Same complex (by content), dimension, group and terms.
  friend bool operator==(const GChain& a, const GChain& b);

  /// Vertices of the support cells.
  std::vector<VertexId> support_vertices() const;
  std::string describe() const;

 private:
  void require_compatible(const GChain& other, const char* op) const;
  SimplicialComplex complex_;
  std::size_t m_;
  NormedGroup group_;
  Terms terms_;
};

GChain add(const GChain& s, const GChain& t);

/// Alternating face sum. DimensionZero for 0-chains.
GChain boundary(const GChain& s);

/// S . g for an integral chain S: each cell coefficient d becomes d g.
GChain rho_scale(const GChain& s, const GroupElement& g);

/// Keeps the cells accepted by `keep`.
GChain restrict(const GChain& s, const std::function<bool(const Cell&)>& keep);
/// Keeps the cells whose points form a cell of `sub`.
GChain restrict(const GChain& s, const SimplicialComplex& sub);

/// Reduction of an integral chain modulo d.
GChain mod_d_reduce(const GChain& s, const Integer& d);

/// Coefficient group change along the inclusion Z -> Q (integral or rational
/// chains only).
GChain to_rational(const GChain& s);

struct MassReport {
  /// Exact squared Gram determinant |span|^2 of every support cell.
  std::vector<std::pair<Cell, Rational>> gram;
  /// Certified enclosure of sum |g| sqrt(gram) / m!.
  Interval total;
  double value = 0.0;
};

/// m-volume of a cell: sqrt(Gram) / m!.
Interval cell_volume(const SimplicialComplex& k, const Cell& c);
MassReport mass(const GChain& s);

/// Verdict of the two-route comparison behind the univalence of rho.
struct RhoMonoVerdict {
  /// sum S_t . h_t vanishes as a G chain (group arithmetic).
  bool chain_zero = false;
  /// sum S_t (x) h_t vanishes in C_m (x) G (lattice membership via Smith form).
  bool tensor_zero = false;
  bool violation() const { return chain_zero && !tensor_zero; }
};

RhoMonoVerdict rho_mono_check(const std::vector<std::pair<GChain, GroupElement>>& terms, const NormedGroup& group);

/// Chain keyed by the points of each simplex instead of vertex ids, so that
/// chains on differently labelled complexes compare by geometry.
class GeometricChain {
 public:
  using Key = std::vector<Point>;  // sorted points
  GeometricChain(std::size_t ambient, std::size_t dimension, NormedGroup group);
  explicit GeometricChain(const GChain& s);

  void add_term(std::vector<Point> points, const GroupElement& g);
  GeometricChain& operator+=(const GeometricChain& other);
  GeometricChain& operator-=(const GeometricChain& other);
  GeometricChain operator-() const;
  friend GeometricChain operator+(GeometricChain a, const GeometricChain& b) { return a += b; }
  friend GeometricChain operator-(GeometricChain a, const GeometricChain& b) { return a -= b; }
  friend bool operator==(const GeometricChain& a, const GeometricChain& b);

  const std::map<Key, GroupElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t dimension() const { return m_; }
  std::string describe() const;

 private:
  std::size_t n_;
  std::size_t m_;
  NormedGroup group_;
  std::map<Key, GroupElement> terms_;
};

}  // namespace gmt

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gmt/exterior/multivector.hpp"
#include "gmt/numeric.hpp"

namespace gmt {

using VertexId = std::uint32_t;
/// A simplex as its strictly increasing vertex ids.
using Cell = std::vector<VertexId>;

/// Sorts `vertices` in place and returns the parity (+1 / -1) of the sorting
/// permutation; 0 when a vertex repeats.
int sort_with_parity(Cell& vertices);

/// Finite simplicial complex with exact rational vertices. Cheap to copy:
/// the data is immutable and shared.
class SimplicialComplex {
 public:
  enum class Validation {
    /// Exact checks: distinct vertices, affinely independent cells, and
    /// pairwise intersections of maximal cells are common faces.
    Full,
    /// Combinatorial checks only; for complexes built by this library.
    Structural,
  };

  SimplicialComplex();
  /// Builds the closure of `cells` (any dimensions, any vertex order).
  static SimplicialComplex build(std::size_t ambient, std::vector<Point> vertices, std::vector<Cell> cells,
                                 Validation validation = Validation::Full);

  std::size_t ambient() const;
  const std::vector<Point>& vertices() const;
  const Point& vertex(VertexId v) const { return vertices()[v]; }
  /// Largest cell dimension, or -1 when empty.
  int dimension() const;
  /// Sorted cells of dimension m.
  const std::vector<Cell>& cells(std::size_t m) const;
  /// Cells not contained in a larger cell.
  const std::vector<Cell>& maximal_cells() const;
  bool contains(const Cell& sorted) const;
  std::optional<std::size_t> index_of(const Cell& sorted) const;
  std::optional<VertexId> find_vertex(const Point& p) const;

  std::vector<Point> points(const Cell& c) const;
  /// Span vector of the cell in its sorted vertex order.
  MultiVector span(const Cell& c) const;

  /// Same vertices (in order) and the same cells.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);
  bool same_object(const SimplicialComplex& other) const { return data_ == other.data_; }

  struct Data;

 private:
  explicit SimplicialComplex(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// Decides whether conv(a) and conv(b) meet exactly in conv(a and b) for
/// affinely independent point sets, by an exact linear program.
bool proper_intersection(const std::vector<Point>& a, const std::vector<Point>& b,
                         const std::vector<bool>& a_shared);

/// x -> A x + t between rational spaces.
struct AffineMap {
  RationalMatrix linear;
  std::vector<Rational> translation;

  static AffineMap identity(std::size_t n);
  /// The functional x -> coeffs . x + c.
  static AffineMap functional(std::vector<Rational> coeffs, const Rational& c = 0);
  static AffineMap translation_by(const std::vector<Rational>& t);

  std::size_t source_dim() const { return linear.cols(); }
  std::size_t target_dim() const { return linear.rows(); }
  Point apply(const Point& x) const;
  /// (*this) after `inner`.
  AffineMap after(const AffineMap& inner) const;
};

}  // namespace gmt

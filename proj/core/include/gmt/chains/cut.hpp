#pragma once

#include <map>

#include "gmt/chains/chain.hpp"

namespace gmt {

/// Refinement of a complex along the level set {f = y} of an affine function.
/// Every cell without a vertex on the level is kept; cells crossing the level
/// are split into their two sides, each triangulated by pulling vertices in
/// id order (old vertices first, then one new vertex per crossed edge in
/// edge order). Pulling with a global order is consistent on shared faces,
/// so the pieces form a complex.
struct LevelCut {
  SimplicialComplex source;
  SimplicialComplex refined;
  AffineMap f;
  Rational y;
  /// Per refined vertex: -1 below the level, 0 on it, +1 above.
  std::vector<int> side;
  /// Top-dimensional pieces of every source cell off the level.
  std::map<Cell, std::vector<Cell>> pieces;
  /// New vertex on each crossed edge (p < q).
  std::map<std::pair<VertexId, VertexId>, VertexId> crossing;
};

LevelCut make_level_cut(const SimplicialComplex& k, const AffineMap& f, const Rational& y);

/// Throws NonRegularValue if f(v) = y at a support vertex of s.
void require_regular_value(const GChain& s, const AffineMap& f, const Rational& y);

/// The same formal sum on the refined complex.
GChain refine(const GChain& s, const LevelCut& cut);
/// Cells of a refined chain lying above the level.
GChain upper_part(const GChain& refined, const LevelCut& cut);
/// <S, f, y> on the refined complex: for each upper cell and each of its
/// facets on the level, the bundle slice of the cell coefficient by df.
GChain slice(const GChain& s, const LevelCut& cut);

struct CutResult {
  LevelCut cut;
  GChain refined;
  GChain upper;
};

CutResult cut(const GChain& s, const AffineMap& f, const Rational& y);
GChain slice(const GChain& s, const AffineMap& f, const Rational& y);

}  // namespace gmt

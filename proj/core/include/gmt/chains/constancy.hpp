#pragma once

#include <optional>

#include "gmt/chains/chain.hpp"

namespace gmt {

/// An oriented combinatorial m-manifold inside a complex: top cells with a
/// sign each, relative to their sorted orientation.
struct OrientedManifold {
  std::vector<Cell> cells;
  std::vector<int> orientation;
};

/// Orients the m-cells coherently across every face shared by two of them.
/// NotManifold if a face lies in more than two cells or no coherent
/// orientation exists; NotConnected if the dual graph falls apart.
OrientedManifold orient_manifold(const std::vector<Cell>& cells);

/// Sum of orientation(c) * g * c.
GChain fundamental_chain(const SimplicialComplex& k, const OrientedManifold& m, const GroupElement& g);

struct ConstancyResult {
  bool consistent = false;
  /// T = (fundamental chain) . g when consistent.
  std::optional<GroupElement> value;
  /// An interior face where dT does not vanish, when inconsistent.
  std::optional<Cell> witness;
};

/// Decides whether T is a constant multiple of the fundamental chain of M by
/// propagating coefficients across interior faces of the dual graph.
/// Throws NotManifold / NotConnected for bad M and CarrierMismatch when T
/// has support outside M.
ConstancyResult constancy_solve(const GChain& t, const OrientedManifold& m);

}  // namespace gmt

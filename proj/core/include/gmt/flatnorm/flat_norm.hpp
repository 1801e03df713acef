#pragma once

#include <map>
#include <optional>

#include "gmt/chains/chain.hpp"

namespace gmt {

struct FlatNormProblem {
  /// Rational (or integral, read as rational) m-chain.
  GChain chain;
  /// Optional per-cell weights replacing the m- and (m+1)-volumes.
  std::map<Cell, double> weights;
  std::size_t iteration_cap = 200000;
};

/// Dual feasible point y on m-cells: |y_s| <= w_s and |(d^T y)_t| <= w_t.
struct FlatCertificate {
  std::vector<double> y;
  double dual_objective = 0.0;
  /// Largest violation of the dual constraints (0 when feasible).
  double max_violation = 0.0;
};

struct FlatDecomposition {
  GChain q;
  GChain r;
  /// mass(Q) + mass(R) under the cell weights.
  double value = 0.0;
  std::size_t iterations = 0;
  /// True when the floating optimal basis re-solved exactly to a feasible
  /// point; false when the exact fallback solver produced the decomposition.
  bool basis_exact = true;
  FlatCertificate certificate;
};

/// min over R of mass(S - dR) + mass(R) on the complex of S, by the simplex
/// method with Bland's rule. Q and R satisfy S = Q + dR exactly.
FlatDecomposition flat_norm(const FlatNormProblem& problem);
FlatDecomposition flat_norm(const GChain& s);

/// flat_norm(S - T).
double flat_distance(const GChain& s, const GChain& t);

/// Integral flat norm of an integral chain by branch and bound over integer
/// fills. TooLarge beyond 12 cells of dimension m+1; SolverStall past the
/// node budget.
FlatDecomposition integral_flat_norm(const GChain& s, const std::map<Cell, double>& weights = {},
                                     std::size_t node_cap = 5'000'000);

/// Weight of a cell: the override if present, else its volume.
double cell_weight(const SimplicialComplex& k, const Cell& c, const std::map<Cell, double>& overrides);

}  // namespace gmt

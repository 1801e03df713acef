#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gmt/matrix.hpp"

namespace gmt {

/// U * M * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... and
/// every d_i >= 0. Zero diagonal entries come last.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::vector<Integer> diagonal() const;
  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form: nonzero rows only, echelon with positive
/// pivots and entries above each pivot reduced into [0, pivot). Spans the same
/// row lattice as the input.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Integer determinant by fraction-free (Bareiss) elimination.
Integer integer_determinant(const IntMatrix& m);

/// Z-basis of {x in Z^cols : M x = 0}, one vector per entry.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m);

/// Decides whether x lies in the Z-span of the rows of `rows`. On success the
/// optional output receives integer coefficients y with y^T rows = x^T.
bool in_row_lattice(const IntMatrix& rows, std::span<const Integer> x,
                    std::vector<Integer>* coefficients = nullptr);

}  // namespace gmt

#pragma once

#include "gmt/chains/chain.hpp"

namespace gmt {

/// K1 x K2 triangulated by staircases: vertex (p_i, q_j) gets id
/// i |V2| + j and each product of maximal cells splits into the simplices
/// of the monotone lattice paths through its vertex grid.
SimplicialComplex product_complex(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// The staircase simplices of a x b, each in increasing id order.
std::vector<Cell> staircase(const Cell& a, const Cell& b, std::size_t second_vertex_count);

/// S x T for an integral chain S: coefficients from the bundle product.
GChain product(const GChain& s, const GChain& t);

/// h_#([0, t] x S) for the straight-line homotopy
/// h(s, x) = (1 - s/t) f(x) + (s/t) g(x), pushed forward simplexwise on the
/// staircase triangulation of the prism. t = 0 gives the zero chain.
GChain homotopy_fill(const AffineMap& f, const AffineMap& g, const GChain& s, const Rational& t);

}  // namespace gmt

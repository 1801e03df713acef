#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "gmt/gmt.hpp"

// Brute-force reference computations. None of these call into the routines
// they are used to check (Smith form, Hermite form, the simplex solver,
// interior products).

namespace gmt::verify {

/// Determinant by permutation expansion (n <= 7).
Rational leibniz_determinant(const RationalMatrix& m);

/// For A = Z/a_1 + ... + Z/a_k (all a_i >= 1) and d >= 0, returns for every
/// k in [1, limit] the number of x in A/dA with k x = 0, by enumerating A.
std::vector<std::uint64_t> quotient_torsion_counts(const std::vector<long>& factors, long d, long limit);

/// The same counts read off invariant factors e_j: prod_j gcd(k, e_j).
std::vector<std::uint64_t> torsion_counts_of(const std::vector<Integer>& invariants, long limit);

/// The subgroup of (Z/N)^w generated by the rows of `gens`, by closure.
class ResidueLattice {
 public:
  ResidueLattice(const IntMatrix& gens, std::size_t width, long modulus);
  bool contains(const std::vector<Integer>& x) const;
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<long> reduce(const std::vector<Integer>& x) const;
  std::size_t width_;
  long n_;
  std::set<std::vector<long>> members_;
};

/// Whether f_d : B/dB -> A/dA is univalent, by enumerating B/dB over the box
/// [0, N_B)^b where N_B Z^b lies in L_B + dZ^b (N_B = d, or a multiple of
/// the order of a finite B when d = 0). Returns a kernel witness if not.
struct BruteMono {
  bool univalent = true;
  std::vector<Integer> witness;
};
BruteMono brute_mono(const GroupHom& f, long d, long n_source, long n_target);

/// min over w in L of |v - w|_1 for a full-rank lattice spanned by the rows
/// of `basis` (square), by scanning residues z with |z|_1 <= |v|_1.
Integer brute_quotient_norm(const IntMatrix& basis, const std::vector<Integer>& v);

/// Minimum of sum_s w_s |S_s - (D R)_s| + sum_t u_t |R_t| over R in Q^k,
/// by evaluating every vertex of the breakpoint hyperplane arrangement.
/// `incidence` is (#m-cells x k) with entries in {-1, 0, 1}.
double flat_norm_by_vertices(const std::vector<Rational>& s, const std::vector<double>& w,
                             const std::vector<std::vector<int>>& incidence, const std::vector<double>& u);

/// |P a|^2 for the orthogonal projection P onto the column span of E.
Rational projected_norm_squared(const RationalMatrix& edges, const std::vector<Rational>& a);

/// flat_norm_by_vertices on the complex of a rational chain, with the cell
/// volumes as weights.
double flat_norm_oracle(const GChain& s);

}  // namespace gmt::verify

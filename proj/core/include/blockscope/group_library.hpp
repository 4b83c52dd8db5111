#pragma once

#include "blockscope/permgroup.hpp"

#include <vector>

namespace blockscope {

PermGroup cyclic_group(unsigned n);

/// Direct product of cyclic groups of the given orders.
PermGroup abelian_group(const std::vector<unsigned>& factors);

/// Order 2n on n points, n >= 3.
PermGroup dihedral_group(unsigned n);

/// Dicyclic group of order 4n (n >= 2) in its regular representation;
/// n = 2 is the quaternion group.
PermGroup dicyclic_group(unsigned n);

PermGroup symmetric_group(unsigned n);
PermGroup alternating_group(unsigned n);

/// C_m x| C_k with the action x -> a*x mod m; requires a^k = 1 (mod m) and
/// gcd(a, m) = 1.  Degree m + k.
PermGroup metacyclic_group(unsigned m, unsigned k, unsigned a);

PermGroup direct_product(const PermGroup& A, const PermGroup& B);

/// Extraspecial group of order 27 and exponent 3 on 9 points.
PermGroup heisenberg3();

/// PSL(2,7) acting on the projective line over F_7 (8 points).
PermGroup psl_2_7();

/// The catalog group 216.158: (C3 x C3 x| C8) x| C3 data, frozen as explicit
/// permutation generators.  See tools/corpusgen for the construction.
PermGroup smallgroup_216_158();

/// An automorphism of A encoded as a permutation of A's sorted element list:
/// entry i is the index of the image of element i.
using ElementMap = std::vector<int>;

/// Brute-force automorphism group of a small group (|A| <= 200): candidate
/// generator images filtered by order, extended over the Cayley graph and
/// checked edge by edge.
std::vector<ElementMap> all_automorphisms(const PermGroup& A);

/// Split extension A x| B.  A acts on its own elements by right translation;
/// the i-th generator of B acts by the i-th supplied automorphism.  The
/// resulting degree is |A| + degree(B).  Throws domain_error unless the data
/// defines a group of order |A| * |B|.
PermGroup semidirect_product(const PermGroup& A, const PermGroup& B,
                             const std::vector<ElementMap>& action_of_b_gens);

} // namespace blockscope

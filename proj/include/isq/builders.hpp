#ifndef ISQ_BUILDERS_HPP_
#define ISQ_BUILDERS_HPP_

#include "isq/semigroup.hpp"

namespace isq {

// The symmetric inverse monoid I_n: all partial bijections of degree n.
// Capped at n = 5 (1546 elements).
FiniteInvSemigroup symmetric_inverse_monoid(int n);

// The six-element inverse subsemigroup of I_4 spanned by
// {id_{1,3}, id_{1}, id_{2}, f, f^{-1}, 0} where f maps 1 to 2.
FiniteInvSemigroup example_S6();

// The inverse subsemigroup of I_4 generated by {id_{1,3}, id_{2,4}, f, g}
// where f maps 1 to 2 and g maps 3 to 4.
FiniteInvSemigroup example_T();

// T x G with componentwise product; G must be a group.
// Element ids: (t, g) -> t * |G| + g.
FiniteInvSemigroup direct_product_with_group(const FiniteInvSemigroup& T,
                                             const FiniteInvSemigroup& G);

// Combinatorial Brandt semigroup over the index set {0..max_index}:
// elements 0 and (i,j), with (i,j)(k,l) = (i,l) if j = k, else 0.
// Element ids: 0 -> 0, (i,j) -> 1 + i*(max_index+1) + j.
FiniteInvSemigroup brandt_semigroup(int max_index);

// The cyclic group Z_n as an inverse semigroup (ids = residues).
FiniteInvSemigroup cyclic_group(int n);

// Chain semilattice e_0 < e_1 < ... < e_{n-1} (mul = min).
FiniteInvSemigroup chain_semilattice(int n);

}  // namespace isq

#endif  // ISQ_BUILDERS_HPP_

#ifndef EQOS_HOMOLOGY_HPP
#define EQOS_HOMOLOGY_HPP

#include <cstddef>
#include <vector>

#include "eqos/salvetti.hpp"

namespace eqos {

/// Rank over GF(2) of a matrix given as columns of sorted row indices
/// (left-to-right column reduction; suited to boundary-type sparsity).
std::size_t sparse_gf2_rank(const std::vector<std::vector<std::int32_t>>& columns);

/// Betti numbers over GF(2) of the simplicial complex, degrees 0..top
/// (top defaults to the complex dimension; higher entries are zero).
std::vector<std::size_t> homology_gf2(const OrderComplex& cx, int top = -1);

/// Simplicial Euler characteristic from face counts.
long euler_characteristic(const OrderComplex& cx);

/// The involution on simplices induced by a vertex permutation; entry
/// [q][i] is the index of the image of simplex i in dimension q.  Throws
/// if the permutation does not map chains to chains.
std::vector<std::vector<std::int32_t>> simplex_involution(
    const OrderComplex& cx, const std::vector<std::size_t>& vertex_involution);

/// Cohomology dimensions of the homotopy quotient, computed from the
/// truncated periodic resolution of the two-element group over GF(2): the
/// double complex has the simplicial coboundary in one direction and
/// 1 + tau in the other (the two periodic differentials coincide mod 2).
/// Twist degrees run 0..twist_bound; the returned dims (degrees
/// 0..twist_bound-1) agree with the Borel construction in that range.
std::vector<std::size_t> equivariant_cohomology_gf2(
    const OrderComplex& cx, const std::vector<std::size_t>& vertex_involution,
    unsigned twist_bound);

}  // namespace eqos

#endif

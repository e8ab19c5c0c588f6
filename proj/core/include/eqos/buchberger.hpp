#ifndef EQOS_BUCHBERGER_HPP
#define EQOS_BUCHBERGER_HPP

#include <vector>

#include "eqos/gf2_poly.hpp"

namespace eqos {

/// Full remainder of f modulo `basis` (leading and lower terms reduced).
/// Works against any polynomial list; the result is the unique normal
/// form when the list is a Groebner basis.
Gf2Poly normal_form(const Gf2Poly& f, const std::vector<Gf2Poly>& basis);

/// Buchberger's algorithm with the product (coprime leading monomial)
/// criterion and normal pair selection: smallest lcm degree first, ties
/// broken by the monomial order on the lcm.  Returns the reduced Groebner
/// basis, sorted by leading monomial, which is unique for the fixed
/// global order.
std::vector<Gf2Poly> buchberger(const std::vector<Gf2Poly>& gens);

/// Interreduce a basis already known to be a Groebner basis and sort it
/// canonically (exposed for reuse; buchberger() calls it).
std::vector<Gf2Poly> reduce_basis(std::vector<Gf2Poly> basis);

/// Equality of the generated ideals, decided by comparing reduced bases.
bool ideal_equal(const std::vector<Gf2Poly>& gens1, const std::vector<Gf2Poly>& gens2);

}  // namespace eqos

#endif

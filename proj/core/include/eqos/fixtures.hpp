#ifndef EQOS_FIXTURES_HPP
#define EQOS_FIXTURES_HPP

#include <string_view>

#include "eqos/arrangement.hpp"
#include "eqos/presentations.hpp"

namespace eqos::fixtures {

/// The two rank-2 line arrangements of the non-isomorphism example, read
/// off the printed defining equations (coorientations as written; the
/// assignment matching the published ideal is found by search, not
/// assumed).
extern const std::string_view kFalkArrangementA;
extern const std::string_view kFalkArrangementAPrime;

/// The published equivariant ideals of the two rank-2 arrangements.
extern const std::string_view kFalkIdealJ;
extern const std::string_view kFalkIdealJPrime;

/// The flip example: only ideals are published for these two
/// arrangements, so the corpus carries no arrangement files for them.
extern const std::string_view kVerticalIdealA;
extern const std::string_view kVerticalIdealAPrime;

Arrangement falk_arrangement_a();
Arrangement falk_arrangement_a_prime();
IdealPresentation falk_ideal_j();
IdealPresentation falk_ideal_j_prime();
IdealPresentation vertical_ideal_a();
IdealPresentation vertical_ideal_a_prime();

}  // namespace eqos::fixtures

#endif

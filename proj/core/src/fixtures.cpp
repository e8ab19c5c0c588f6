#include "eqos/fixtures.hpp"

#include <sstream>

namespace eqos::fixtures {

// Keep these byte-identical to the files under fixtures/; a test checks.

const std::string_view kFalkArrangementA =
    "# five lines: x+1, x-1, y, y+x, y-x\n"
    "2 5\n"
    "1 0 1\n"
    "1 0 -1\n"
    "0 1 0\n"
    "1 1 0\n"
    "-1 1 0\n";

const std::string_view kFalkArrangementAPrime =
    "# five lines: 2x+y-1, 2x-y+1, x, x-y, x+y\n"
    "2 5\n"
    "2 1 -1\n"
    "2 -1 1\n"
    "1 0 0\n"
    "1 -1 0\n"
    "1 1 0\n";

const std::string_view kFalkIdealJ =
    "n 5 x 1\n"
    "e1*(x-e1)\n"
    "e2*(x-e2)\n"
    "e3*(x-e3)\n"
    "e4*(x-e4)\n"
    "e5*(x-e5)\n"
    "e1*e2\n"
    "e1*(x-e3)*e4\n"
    "e1*e3*e5\n"
    "e1*e4*e5\n"
    "e2*e3*(x-e4)\n"
    "e2*(x-e4)*(x-e5)\n"
    "e2*(x-e3)*(x-e5)\n"
    "e3*e4+e3*e5+e4*e5+e4*x\n";

const std::string_view kFalkIdealJPrime =
    "n 5 x 1\n"
    "e1*(x-e1)\n"
    "e2*(x-e2)\n"
    "e3*(x-e3)\n"
    "e4*(x-e4)\n"
    "e5*(x-e5)\n"
    "e1*e2*e4\n"
    "e1*e2*e5\n"
    "e1*e3*e4\n"
    "e1*e3*e5\n"
    "e1*e4*(x-e5)\n"
    "e2*(x-e3)*e4\n"
    "e2*(x-e3)*e5\n"
    "e2*(x-e4)*e5\n"
    "e1*e2+e1*e3+e2*e3+e2*x\n"
    "e3*e4+e3*e5+e4*e5+e4*x\n";

const std::string_view kVerticalIdealA =
    "n 5 x 1\n"
    "e1*(x-e1)\n"
    "e2*(x-e2)\n"
    "e3*(x-e3)\n"
    "e4*(x-e4)\n"
    "e5*(x-e5)\n"
    "e2*e3\n"
    "(x-e1)*e5\n"
    "e1*(x-e2)*e4\n"
    "e1*e3*e4\n"
    "(x-e2)*e4*e5\n"
    "e3*e4*e5\n";

const std::string_view kVerticalIdealAPrime =
    "n 5 x 1\n"
    "e1*(x-e1)\n"
    "e2*(x-e2)\n"
    "e3*(x-e3)\n"
    "e4*(x-e4)\n"
    "e5*(x-e5)\n"
    "e2*e3\n"
    "(x-e1)*e5\n"
    "(x-e1)*e2*(x-e4)\n"
    "e1*e3*e4\n"
    "(x-e2)*e4*e5\n"
    "e3*e4*e5\n";

namespace {

Arrangement arrangement_from(std::string_view text) {
  return parse_arrangement(std::string(text));
}

IdealPresentation ideal_from(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_ideal_file(in);
}

}  // namespace

Arrangement falk_arrangement_a() { return arrangement_from(kFalkArrangementA); }
Arrangement falk_arrangement_a_prime() { return arrangement_from(kFalkArrangementAPrime); }
IdealPresentation falk_ideal_j() { return ideal_from(kFalkIdealJ); }
IdealPresentation falk_ideal_j_prime() { return ideal_from(kFalkIdealJPrime); }
IdealPresentation vertical_ideal_a() { return ideal_from(kVerticalIdealA); }
IdealPresentation vertical_ideal_a_prime() { return ideal_from(kVerticalIdealAPrime); }

}  // namespace eqos::fixtures

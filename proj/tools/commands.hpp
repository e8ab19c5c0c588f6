#ifndef EQOS_TOOLS_COMMANDS_HPP
#define EQOS_TOOLS_COMMANDS_HPP

#include <string>

#include <eqos/report.hpp>

namespace eqos::cli {

/// Ring presentation report: generators with provenance, reduced basis,
/// Hilbert data.  ring is "os", "eq", or "vg"; degree -1 picks the
/// default (rank + 2).
Report cmd_presentation(const std::string& file, const std::string& ring, int degree);

/// Compare two arrangements (through their equivariant rings) or two
/// ideal files.  degree -1 picks 4 for n in {5, 6}, rank + 2 otherwise
/// (4 for ideal inputs).
Report cmd_compare_files(const std::string& file_a, const std::string& file_b, int degree);
Report cmd_compare_ideals(const std::string& ideal_a, const std::string& ideal_b, int degree);

/// Salvetti pipeline: counts, fixed points, Betti numbers, optional
/// truncated Borel dims, and agreement verdicts against the algebraic
/// side.  Affine inputs are coned with a notice.
Report cmd_salvetti(const std::string& file, int degree, bool equivariant);

/// Same combinatorics from abstract oriented-matroid data (full covector
/// list plus the tope list it must contain); no algebraic comparison.
Report cmd_salvetti_abstract(const std::string& topes_file, const std::string& covectors_file,
                             int degree, bool equivariant);

/// Scripted reproduction of the published examples: "falk", "vertical",
/// or "cone".  Prints one PASS/FAIL line per acceptance item.
Report cmd_reproduce(const std::string& example);

}  // namespace eqos::cli

#endif

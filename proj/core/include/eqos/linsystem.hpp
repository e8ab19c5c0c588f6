#ifndef EQOS_LINSYSTEM_HPP
#define EQOS_LINSYSTEM_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "eqos/rational.hpp"

namespace eqos {

/// One affine row: value(p) = coeffs . p + constant.
struct LinearConstraint {
  QVector coeffs;
  Rational constant;

  Rational value_at(const QVector& point) const;
};

/// Mixed system of equalities (value = 0) and strict inequalities
/// (value > 0) over num_vars rational unknowns.
struct LinSystem {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> strict_inequalities;

  void add_equality(QVector coeffs, Rational constant);
  void add_strict(QVector coeffs, Rational constant);
};

/// Nonnegative combination of the strict rows plus an arbitrary-sign
/// combination of the equality rows whose linear part cancels and whose
/// constant makes the system impossible (0 > c with c >= 0, or 0 = c with
/// c != 0 when only equalities are used).
struct FmRefutation {
  QVector equality_multipliers;
  QVector inequality_multipliers;
};

struct FmResult {
  bool feasible = false;
  QVector witness;          // meaningful iff feasible
  FmRefutation refutation;  // meaningful iff infeasible
};

/// Thrown when Fourier-Motzkin elimination exceeds the intermediate-row
/// cap (the method is exponential in the worst case).
class FmBlowupError : public std::runtime_error {
 public:
  explicit FmBlowupError(std::size_t rows);
};

/// Row cap used when none is passed explicitly: EQOS_MAX_FM_ROWS from the
/// environment, else 50000.
std::size_t fm_default_max_rows();

/// Decide strict feasibility exactly.  Equalities are eliminated by
/// substitution first, then Fourier-Motzkin elimination with strictness
/// preserved.  Always returns a certificate: a rational witness point when
/// feasible, a refutation combination when not.
FmResult fm_feasible(const LinSystem& sys, std::size_t max_rows = fm_default_max_rows());

/// Exact check that `point` satisfies every row of `sys`.
bool verify_witness(const LinSystem& sys, const QVector& point);

/// Independent check of a refutation (recombines the original rows; does
/// not share code with the elimination path).
bool verify_refutation(const LinSystem& sys, const FmRefutation& ref);

}  // namespace eqos

#endif

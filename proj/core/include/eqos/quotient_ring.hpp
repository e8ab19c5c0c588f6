#ifndef EQOS_QUOTIENT_RING_HPP
#define EQOS_QUOTIENT_RING_HPP

#include <vector>

#include "eqos/buchberger.hpp"
#include "eqos/gf2_matrix.hpp"
#include "eqos/gf2_poly.hpp"

namespace eqos {

/// Quotient of GF(2)[e_1..e_n] or GF(2)[e_1..e_n, x] by an ideal, held as
/// a reduced Groebner basis plus the standard monomials of each degree up
/// to a stated bound.  Immutable after construction; all queries are
/// read-only and safe to run concurrently.
class QuotientRing {
 public:
  /// Computes the reduced basis of `gens` and tabulates standard
  /// monomials for degrees 0..degree_bound.  `has_x` controls whether x
  /// counts as a variable of the ambient ring (generators must not
  /// involve x when it is false).
  QuotientRing(std::size_t e_vars, bool has_x, const std::vector<Gf2Poly>& gens,
               unsigned degree_bound);

  std::size_t e_vars() const { return e_vars_; }
  bool has_x() const { return has_x_; }
  unsigned degree_bound() const { return degree_bound_; }
  std::size_t variable_count() const { return e_vars_ + (has_x_ ? 1 : 0); }

  const std::vector<Gf2Poly>& groebner() const { return gb_; }
  const std::vector<Monomial>& standard_monomials(unsigned degree) const;

  Gf2Poly normal_form(const Gf2Poly& f) const { return eqos::normal_form(f, gb_); }

  /// dim over GF(2) of each graded piece, degrees 0..d.
  std::vector<std::size_t> hilbert_function(unsigned d) const;

  /// Total dimension up to the degree bound (the whole quotient when the
  /// standard monomials are exhausted below the bound).
  std::size_t total_dimension() const;

  /// Matrix of multiplication by a degree-1 form from the degree-k
  /// standard basis to the degree-(k+1) one.  Throws
  /// std::invalid_argument unless deg(ell) == 1 and k+1 <= degree_bound.
  Gf2Matrix multiplication_matrix(const Gf2Poly& ell, unsigned k) const;

  /// Express a normal form in the standard-monomial basis of one degree;
  /// throws std::logic_error if the polynomial leaves that graded piece.
  Gf2Vector coordinates(const Gf2Poly& nf, unsigned degree) const;

  /// Nonzero degree-1 forms of the ambient ring, in the canonical
  /// bitmask order over (e_1, ..., e_n[, x]).
  std::vector<Gf2Poly> all_linear_forms() const;

 private:
  std::size_t e_vars_;
  bool has_x_;
  unsigned degree_bound_;
  std::vector<Gf2Poly> gb_;
  std::vector<std::vector<Monomial>> std_monomials_;  // per degree
};

/// All monomials of the given total degree in the ambient variables,
/// sorted descending under the global order.
std::vector<Monomial> monomials_of_degree(std::size_t e_vars, bool has_x, unsigned degree);

}  // namespace eqos

#endif

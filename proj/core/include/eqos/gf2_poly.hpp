#ifndef EQOS_GF2_POLY_HPP
#define EQOS_GF2_POLY_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "eqos/monomial.hpp"

namespace eqos {

/// Polynomial over GF(2) in e_1..e_n, x.  Terms are stored leading-first
/// (descending in the global monomial order), without duplicates, so the
/// representation is canonical and p + p = 0 holds by construction.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  explicit Gf2Poly(std::size_t e_vars) : e_vars_(e_vars) {}

  static Gf2Poly zero(std::size_t e_vars) { return Gf2Poly(e_vars); }
  static Gf2Poly one(std::size_t e_vars) { return from_monomial(Monomial::one(e_vars)); }
  static Gf2Poly e(std::size_t e_vars, int i) { return from_monomial(Monomial::e(e_vars, i)); }
  static Gf2Poly x(std::size_t e_vars) { return from_monomial(Monomial::x(e_vars)); }
  static Gf2Poly from_monomial(Monomial m);
  static Gf2Poly from_terms(std::size_t e_vars, std::vector<Monomial> terms);

  std::size_t e_vars() const { return e_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Monomial>& terms() const { return terms_; }

  /// Leading term under the global order; polynomial must be nonzero.
  const Monomial& leading() const;
  /// Total degree (of the leading term since the order is
  /// degree-compatible); -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// True if x divides every term.
  bool divisible_by_x() const;
  /// True if no term involves x.
  bool x_free() const;

  Gf2Poly operator+(const Gf2Poly& other) const;
  Gf2Poly& operator+=(const Gf2Poly& other);
  Gf2Poly operator*(const Gf2Poly& other) const;
  Gf2Poly times_monomial(const Monomial& m) const;
  Gf2Poly pow(unsigned k) const;

  /// Exact division by x; throws std::invalid_argument when some term has
  /// no x factor.
  Gf2Poly divide_by_x() const;

  /// Substitute x := 0 or x := 1 (the two fibers of the deformation).
  Gf2Poly substitute_x(int value) const;

  /// Substitute e_i := x + e_i (the coorientation reversal; x - e_i in
  /// characteristic 2).
  Gf2Poly substitute_e_flip(int i) const;

  /// General substitution: slot k (e_1..e_n then x) maps to images[k].
  Gf2Poly substitute(const std::vector<Gf2Poly>& images) const;

  bool operator==(const Gf2Poly&) const = default;
  bool operator<(const Gf2Poly& other) const;  // canonical order for sorting lists

  std::string to_string() const;  // "e3*e4+e3*e5+e4*e5+e4*x", "0", "1"

 private:
  std::size_t e_vars_ = 0;
  std::vector<Monomial> terms_;
};

/// Parse the polynomial text syntax: terms joined by '+' or '-' (equal in
/// characteristic 2); a term is a '*'-joined product of factors e<i>, x,
/// (x+e<i>), (x-e<i>), 1, or 0, each with an optional '^<power>'.
Gf2Poly parse_poly(std::string_view text, std::size_t e_vars);

/// Product of e_i over s (1-based indices).
Gf2Poly e_monomial(std::size_t e_vars, const std::vector<int>& s);

/// Product of (x + e_j) over s.
Gf2Poly x_minus_e_product(std::size_t e_vars, const std::vector<int>& s);

}  // namespace eqos

#endif

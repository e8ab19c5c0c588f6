#ifndef EQOS_MONOMIAL_HPP
#define EQOS_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace eqos {

/// Power product in GF(2)[e_1..e_n, x].  The x slot is always present;
/// polynomials that live in the e-subring simply keep it at zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t e_vars) : exp_(e_vars + 1, 0) {}

  static Monomial one(std::size_t e_vars) { return Monomial(e_vars); }
  static Monomial e(std::size_t e_vars, int i, unsigned power = 1);  // 1-based i
  static Monomial x(std::size_t e_vars, unsigned power = 1);

  std::size_t e_vars() const { return exp_.size() - 1; }
  unsigned exp_e(int i) const { return exp_[i - 1]; }
  unsigned exp_x() const { return exp_.back(); }
  unsigned exp_slot(std::size_t k) const { return exp_[k]; }  // 0..n, x last
  std::size_t slots() const { return exp_.size(); }

  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  bool e_part_squarefree() const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// other / this; caller must ensure divisibility.
  Monomial divide_into(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Monomial with the x exponent forced to zero (used by specialization).
  Monomial without_x() const;

  bool operator==(const Monomial&) const = default;

  std::string to_string() const;  // "e3*e4", "e1^2*x", "1"

 private:
  std::vector<std::uint16_t> exp_;
};

/// The one monomial order used everywhere: degree first, then graded
/// reverse lexicographic with precedence e_1 > e_2 > ... > e_n > x.
/// Degree-compatible and multiplicative; e_i^2 > e_i*x.
struct MonomialOrder {
  bool less(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }
};

inline constexpr MonomialOrder kOrder{};

bool mono_less(const Monomial& a, const Monomial& b);

}  // namespace eqos

#endif

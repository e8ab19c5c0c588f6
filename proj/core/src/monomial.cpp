#include "eqos/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eqos {

Monomial Monomial::e(std::size_t e_vars, int i, unsigned power) {
  if (i < 1 || static_cast<std::size_t>(i) > e_vars)
    throw std::invalid_argument("e index out of range: " + std::to_string(i));
  Monomial m(e_vars);
  m.exp_[i - 1] = static_cast<std::uint16_t>(power);
  return m;
}

Monomial Monomial::x(std::size_t e_vars, unsigned power) {
  Monomial m(e_vars);
  m.exp_.back() = static_cast<std::uint16_t>(power);
  return m;
}

unsigned Monomial::degree() const {
  return std::accumulate(exp_.begin(), exp_.end(), 0u);
}

bool Monomial::e_part_squarefree() const {
  for (std::size_t k = 0; k + 1 < exp_.size(); ++k)
    if (exp_[k] > 1) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t k = 0; k < exp_.size(); ++k)
    out.exp_[k] = static_cast<std::uint16_t>(out.exp_[k] + other.exp_[k]);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t k = 0; k < exp_.size(); ++k)
    if (exp_[k] > other.exp_[k]) return false;
  return true;
}

Monomial Monomial::divide_into(const Monomial& other) const {
  Monomial out = other;
  for (std::size_t k = 0; k < exp_.size(); ++k)
    out.exp_[k] = static_cast<std::uint16_t>(out.exp_[k] - exp_[k]);
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t k = 0; k < exp_.size(); ++k)
    out.exp_[k] = std::max(out.exp_[k], other.exp_[k]);
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t k = 0; k < exp_.size(); ++k)
    if (exp_[k] && other.exp_[k]) return false;
  return true;
}

Monomial Monomial::without_x() const {
  Monomial out = *this;
  out.exp_.back() = 0;
  return out;
}

std::string Monomial::to_string() const {
  std::string s;
  auto emit = [&](const std::string& var, unsigned p) {
    if (p == 0) return;
    if (!s.empty()) s += '*';
    s += var;
    if (p > 1) s += '^' + std::to_string(p);
  };
  for (std::size_t k = 0; k + 1 < exp_.size(); ++k)
    emit("e" + std::to_string(k + 1), exp_[k]);
  emit("x", exp_.back());
  return s.empty() ? "1" : s;
}

bool mono_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // grevlex: larger monomial has the negative last nonzero exponent
  // difference, scanning (e_1, ..., e_n, x) from the end
  for (std::size_t k = a.slots(); k-- > 0;) {
    int d = static_cast<int>(a.exp_slot(k)) - static_cast<int>(b.exp_slot(k));
    if (d != 0) return d > 0;
  }
  return false;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const { return mono_less(a, b); }

}  // namespace eqos

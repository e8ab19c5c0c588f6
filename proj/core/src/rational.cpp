#include "eqos/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace eqos {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  // cpp_rational's (num, den) constructor does not accept negative
  // denominators; division normalizes.
  return Rational(num) / Rational(den);
}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    return std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  };
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(text)) throw bad();
    return Rational(BigInt(std::string(text)));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) throw bad();
  if (!den.empty() && (den[0] == '-' || den[0] == '+')) throw bad();
  BigInt d{std::string(den)};
  if (d == 0) throw bad();
  return make_rational(BigInt(std::string(num)), d);
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

}  // namespace eqos

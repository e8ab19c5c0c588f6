#ifndef EQOS_SIGN_VECTOR_HPP
#define EQOS_SIGN_VECTOR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqos {

/// One sign per hyperplane: +1, 0, or -1.
using Sign = std::int8_t;
using SignVector = std::vector<Sign>;

inline char sign_to_char(Sign s) { return s > 0 ? '+' : (s < 0 ? '-' : '0'); }

inline Sign sign_from_char(char c) {
  switch (c) {
    case '+': return 1;
    case '-': return -1;
    case '0': return 0;
    default: throw std::invalid_argument(std::string("bad sign character '") + c + "'");
  }
}

inline std::string sign_vector_to_string(const SignVector& sv) {
  std::string s;
  s.reserve(sv.size());
  for (Sign x : sv) s.push_back(sign_to_char(x));
  return s;
}

inline SignVector sign_vector_from_string(const std::string& s) {
  SignVector sv;
  sv.reserve(s.size());
  for (char c : s) sv.push_back(sign_from_char(c));
  return sv;
}

inline bool is_tope(const SignVector& sv) {
  for (Sign s : sv)
    if (s == 0) return false;
  return true;
}

inline SignVector negated(const SignVector& sv) {
  SignVector out(sv.size());
  for (std::size_t i = 0; i < sv.size(); ++i) out[i] = -sv[i];
  return out;
}

/// Covector composition F o G: signs of F where nonzero, else of G.
inline SignVector compose(const SignVector& f, const SignVector& g) {
  SignVector out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] != 0 ? f[i] : g[i];
  return out;
}

/// Disjoint pair of index sets (1-based hyperplane indices, kept sorted).
struct SignPair {
  std::vector<int> plus;
  std::vector<int> minus;

  SignPair() = default;
  SignPair(std::vector<int> p, std::vector<int> m);

  std::vector<int> support() const;  // plus union minus, sorted
  SignPair swapped() const { return SignPair(minus, plus); }

  bool operator==(const SignPair&) const = default;
  std::string to_string() const;
};

}  // namespace eqos

#endif

#include "eqos/gf2_poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace eqos {

namespace {

bool desc(const Monomial& a, const Monomial& b) { return mono_less(b, a); }

// sort descending and cancel duplicate pairs (coefficients are mod 2)
void canonicalize(std::vector<Monomial>& terms) {
  std::sort(terms.begin(), terms.end(), desc);
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2) out.push_back(std::move(terms[i]));
    i = j;
  }
  terms = std::move(out);
}

}  // namespace

Gf2Poly Gf2Poly::from_monomial(Monomial m) {
  Gf2Poly p(m.e_vars());
  p.terms_.push_back(std::move(m));
  return p;
}

Gf2Poly Gf2Poly::from_terms(std::size_t e_vars, std::vector<Monomial> terms) {
  Gf2Poly p(e_vars);
  for (const Monomial& m : terms)
    if (m.e_vars() != e_vars) throw std::invalid_argument("term arity mismatch");
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

const Monomial& Gf2Poly::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

int Gf2Poly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().degree());
}

bool Gf2Poly::is_homogeneous() const {
  for (const Monomial& m : terms_)
    if (m.degree() != terms_.front().degree()) return false;
  return true;
}

bool Gf2Poly::divisible_by_x() const {
  for (const Monomial& m : terms_)
    if (m.exp_x() == 0) return false;
  return true;
}

bool Gf2Poly::x_free() const {
  for (const Monomial& m : terms_)
    if (m.exp_x() != 0) return false;
  return true;
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& other) const {
  if (e_vars_ != other.e_vars_) throw std::invalid_argument("polynomial arity mismatch");
  Gf2Poly out(e_vars_);
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(out.terms_), desc);
  return out;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
  *this = *this + other;
  return *this;
}

Gf2Poly Gf2Poly::times_monomial(const Monomial& m) const {
  Gf2Poly out(e_vars_);
  out.terms_.reserve(terms_.size());
  // multiplication by a fixed monomial preserves the term order
  for (const Monomial& t : terms_) out.terms_.push_back(t * m);
  return out;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& other) const {
  if (e_vars_ != other.e_vars_) throw std::invalid_argument("polynomial arity mismatch");
  std::vector<Monomial> prods;
  prods.reserve(terms_.size() * other.terms_.size());
  for (const Monomial& a : terms_)
    for (const Monomial& b : other.terms_) prods.push_back(a * b);
  canonicalize(prods);
  Gf2Poly out(e_vars_);
  out.terms_ = std::move(prods);
  return out;
}

Gf2Poly Gf2Poly::pow(unsigned k) const {
  Gf2Poly out = Gf2Poly::one(e_vars_);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

Gf2Poly Gf2Poly::divide_by_x() const {
  Gf2Poly out(e_vars_);
  const Monomial x = Monomial::x(e_vars_);
  out.terms_.reserve(terms_.size());
  for (const Monomial& m : terms_) {
    if (m.exp_x() == 0)
      throw std::invalid_argument("polynomial not divisible by x: " + to_string());
    out.terms_.push_back(x.divide_into(m));
  }
  // dividing every term by x preserves the relative order
  return out;
}

Gf2Poly Gf2Poly::substitute_x(int value) const {
  if (value != 0 && value != 1) throw std::invalid_argument("x can only specialize to 0 or 1");
  std::vector<Monomial> terms;
  for (const Monomial& m : terms_) {
    if (m.exp_x() > 0 && value == 0) continue;
    terms.push_back(m.without_x());
  }
  canonicalize(terms);
  Gf2Poly out(e_vars_);
  out.terms_ = std::move(terms);
  return out;
}

Gf2Poly Gf2Poly::substitute_e_flip(int i) const {
  std::vector<Gf2Poly> images;
  images.reserve(e_vars_ + 1);
  for (std::size_t k = 1; k <= e_vars_; ++k)
    images.push_back(static_cast<int>(k) == i ? Gf2Poly::x(e_vars_) + Gf2Poly::e(e_vars_, i)
                                              : Gf2Poly::e(e_vars_, static_cast<int>(k)));
  images.push_back(Gf2Poly::x(e_vars_));
  return substitute(images);
}

Gf2Poly Gf2Poly::substitute(const std::vector<Gf2Poly>& images) const {
  if (images.size() != e_vars_ + 1) throw std::invalid_argument("need one image per variable");
  Gf2Poly acc = Gf2Poly::zero(e_vars_);
  for (const Monomial& m : terms_) {
    Gf2Poly term = Gf2Poly::one(e_vars_);
    for (std::size_t k = 0; k < m.slots(); ++k)
      if (m.exp_slot(k) > 0) term = term * images[k].pow(m.exp_slot(k));
    acc += term;
  }
  return acc;
}

bool Gf2Poly::operator<(const Gf2Poly& other) const {
  // compare term lists lexicographically under the monomial order
  std::size_t k = 0;
  for (; k < terms_.size() && k < other.terms_.size(); ++k) {
    if (terms_[k] == other.terms_[k]) continue;
    return mono_less(terms_[k], other.terms_[k]);
  }
  return terms_.size() < other.terms_.size();
}

std::string Gf2Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += '+';
    s += terms_[i].to_string();
  }
  return s;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t e_vars) : text_(text), n_(e_vars) {}

  Gf2Poly parse() {
    Gf2Poly acc = parse_term();
    skip_ws();
    while (!eof() && (peek() == '+' || peek() == '-')) {
      get();  // '-' means '+' in characteristic 2
      acc += parse_term();
      skip_ws();
    }
    skip_ws();
    if (!eof()) fail("unexpected character");
    return acc;
  }

 private:
  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("polynomial syntax error at offset " + std::to_string(pos_) +
                                " of \"" + std::string(text_) + "\": " + why);
  }
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  unsigned parse_uint() {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    unsigned v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
      v = v * 10 + static_cast<unsigned>(get() - '0');
    return v;
  }

  Gf2Poly parse_term() {
    Gf2Poly term = parse_factor();
    skip_ws();
    while (!eof() && peek() == '*') {
      get();
      term = term * parse_factor();
      skip_ws();
    }
    return term;
  }

  Gf2Poly parse_factor() {
    Gf2Poly base = parse_atom();
    skip_ws();
    if (!eof() && peek() == '^') {
      get();
      base = base.pow(parse_uint());
    }
    return base;
  }

  Gf2Poly parse_atom() {
    skip_ws();
    if (eof()) fail("expected factor");
    char c = peek();
    if (c == 'e') {
      get();
      return Gf2Poly::e(n_, static_cast<int>(parse_e_index()));
    }
    if (c == 'x') {
      get();
      return Gf2Poly::x(n_);
    }
    if (c == '1') {
      get();
      return Gf2Poly::one(n_);
    }
    if (c == '0') {
      get();
      return Gf2Poly::zero(n_);
    }
    if (c == '(') {
      get();
      skip_ws();
      if (eof() || get() != 'x') fail("parenthesized factor must be (x+e<i>) or (x-e<i>)");
      skip_ws();
      if (eof() || (peek() != '+' && peek() != '-')) fail("expected '+' or '-' after x");
      get();
      skip_ws();
      if (eof() || get() != 'e') fail("expected e<i>");
      Gf2Poly p = Gf2Poly::x(n_) + Gf2Poly::e(n_, static_cast<int>(parse_e_index()));
      skip_ws();
      if (eof() || get() != ')') fail("expected ')'");
      return p;
    }
    fail("expected factor");
  }

  unsigned parse_e_index() {
    unsigned i = parse_uint();
    if (i < 1 || i > n_)
      fail("variable e" + std::to_string(i) + " out of range for n=" + std::to_string(n_));
    return i;
  }
};

}  // namespace

Gf2Poly parse_poly(std::string_view text, std::size_t e_vars) {
  return PolyParser(text, e_vars).parse();
}

Gf2Poly e_monomial(std::size_t e_vars, const std::vector<int>& s) {
  Monomial m = Monomial::one(e_vars);
  for (int i : s) m = m * Monomial::e(e_vars, i);
  return Gf2Poly::from_monomial(m);
}

Gf2Poly x_minus_e_product(std::size_t e_vars, const std::vector<int>& s) {
  Gf2Poly p = Gf2Poly::one(e_vars);
  for (int j : s) p = p * (Gf2Poly::x(e_vars) + Gf2Poly::e(e_vars, j));
  return p;
}

}  // namespace eqos

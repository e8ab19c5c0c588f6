#include "eqos/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "eqos/sign_vector.hpp"

namespace eqos {

SignPair::SignPair(std::vector<int> p, std::vector<int> m)
    : plus(std::move(p)), minus(std::move(m)) {
  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());
  for (int i : plus)
    if (std::binary_search(minus.begin(), minus.end(), i))
      throw std::invalid_argument("SignPair sets must be disjoint");
}

std::vector<int> SignPair::support() const {
  std::vector<int> s;
  std::merge(plus.begin(), plus.end(), minus.begin(), minus.end(), std::back_inserter(s));
  return s;
}

std::string SignPair::to_string() const {
  auto join = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + "}";
  };
  return "S+=" + join(plus) + " S-=" + join(minus);
}

namespace {

// canonical scaling of (a, b): divide by the first nonzero coefficient,
// so proportional forms (same hyperplane) collide
std::string hyperplane_key(const AffineForm& f) {
  Rational lead = 0;
  for (const Rational& c : f.normal)
    if (c != 0) {
      lead = c;
      break;
    }
  std::string key;
  for (const Rational& c : f.normal) key += to_string(c / lead) + " ";
  key += to_string(f.offset / lead);
  return key;
}

}  // namespace

Arrangement::Arrangement(std::size_t dim, std::vector<AffineForm> forms, bool allow_repeats)
    : dim_(dim), forms_(std::move(forms)) {
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    const AffineForm& f = forms_[i];
    if (f.normal.size() != dim_)
      throw std::invalid_argument("form " + std::to_string(i + 1) + " has wrong dimension");
    bool zero = std::all_of(f.normal.begin(), f.normal.end(),
                            [](const Rational& c) { return c == 0; });
    if (zero)
      throw std::invalid_argument("form " + std::to_string(i + 1) + " has zero normal vector");
    keys.push_back(hyperplane_key(f));
  }
  if (!allow_repeats) {
    for (std::size_t i = 0; i < keys.size(); ++i)
      for (std::size_t j = i + 1; j < keys.size(); ++j)
        if (keys[i] == keys[j])
          throw std::invalid_argument("hyperplanes " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) +
                                      " coincide (pass allow_repeats to permit)");
  }
}

std::size_t Arrangement::rank() const {
  QMatrix m(forms_.size(), dim_);
  for (std::size_t r = 0; r < forms_.size(); ++r)
    for (std::size_t c = 0; c < dim_; ++c) m.at(r, c) = forms_[r].normal[c];
  return qrank(m);
}

bool Arrangement::is_central() const {
  return std::all_of(forms_.begin(), forms_.end(),
                     [](const AffineForm& f) { return f.offset == 0; });
}

Arrangement Arrangement::with_flipped(int i) const {
  std::vector<bool> flips(size(), false);
  flips.at(i - 1) = true;
  return with_coorientation(flips);
}

Arrangement Arrangement::with_coorientation(const std::vector<bool>& flips) const {
  if (flips.size() != size()) throw std::invalid_argument("flip vector has wrong length");
  std::vector<AffineForm> fs = forms_;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!flips[i]) continue;
    for (Rational& c : fs[i].normal) c = -c;
    fs[i].offset = -fs[i].offset;
  }
  return Arrangement(dim_, std::move(fs), true);  // same hyperplane set, already validated
}

Arrangement parse_arrangement(std::istream& in, bool allow_repeats) {
  std::string line;
  std::size_t lineno = 0;
  auto next_payload_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream probe(line);
      std::string tok;
      if (probe >> tok) {
        out = line;
        return true;
      }
    }
    return false;
  };

  std::string header;
  if (!next_payload_line(header)) throw ParseError("empty arrangement file");
  std::istringstream hs(header);
  long d = -1, n = -1;
  if (!(hs >> d >> n) || d < 0 || n < 0)
    throw ParseError("line " + std::to_string(lineno) + ": expected header \"d n\"");
  std::string extra;
  if (hs >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens in header");

  std::vector<AffineForm> forms;
  for (long row = 0; row < n; ++row) {
    std::string payload;
    if (!next_payload_line(payload))
      throw ParseError("expected " + std::to_string(n) + " forms, got " + std::to_string(row));
    std::istringstream ls(payload);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.size() != static_cast<std::size_t>(d) + 1)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(d + 1) +
                       " rationals, got " + std::to_string(toks.size()));
    AffineForm f;
    try {
      for (long c = 0; c < d; ++c) f.normal.push_back(parse_rational(toks[c]));
      f.offset = parse_rational(toks[d]);
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    bool zero = std::all_of(f.normal.begin(), f.normal.end(),
                            [](const Rational& c) { return c == 0; });
    if (zero) throw ParseError("line " + std::to_string(lineno) + ": zero normal vector");
    forms.push_back(std::move(f));
  }
  std::string rest;
  if (next_payload_line(rest))
    throw ParseError("line " + std::to_string(lineno) + ": trailing content after " +
                     std::to_string(n) + " forms");
  try {
    return Arrangement(static_cast<std::size_t>(d), std::move(forms), allow_repeats);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Arrangement parse_arrangement(const std::string& text, bool allow_repeats) {
  std::istringstream in(text);
  return parse_arrangement(in, allow_repeats);
}

Arrangement load_arrangement(const std::string& path, bool allow_repeats) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open arrangement file: " + path);
  try {
    return parse_arrangement(in, allow_repeats);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_arrangement(const Arrangement& a) {
  std::ostringstream os;
  os << a.dim() << ' ' << a.size() << '\n';
  for (const AffineForm& f : a.forms()) {
    for (const Rational& c : f.normal) os << to_string(c) << ' ';
    os << to_string(f.offset) << '\n';
  }
  return os.str();
}

Arrangement cone(const Arrangement& a) {
  std::vector<AffineForm> forms;
  for (const AffineForm& f : a.forms()) {
    AffineForm g;
    g.normal = f.normal;
    g.normal.push_back(f.offset);  // b becomes the z coefficient
    g.offset = 0;
    forms.push_back(std::move(g));
  }
  AffineForm infinity;
  infinity.normal.assign(a.dim() + 1, Rational(0));
  infinity.normal.back() = 1;
  infinity.offset = 0;
  forms.push_back(std::move(infinity));
  // two affine forms may cone to the same central hyperplane only if they
  // were already proportional, so the repeat check stays valid
  return Arrangement(a.dim() + 1, std::move(forms));
}

bool intersection_empty(const Arrangement& a, const std::vector<int>& s) {
  if (s.empty()) return false;
  QMatrix hom(s.size(), a.dim());
  QMatrix aug(s.size(), a.dim() + 1);
  for (std::size_t r = 0; r < s.size(); ++r) {
    const AffineForm& f = a.form(s[r]);
    for (std::size_t c = 0; c < a.dim(); ++c) {
      hom.at(r, c) = f.normal[c];
      aug.at(r, c) = f.normal[c];
    }
    aug.at(r, a.dim()) = -f.offset;  // a.p = -b
  }
  return qrank(hom) < qrank(aug);
}

bool excess_codim(const Arrangement& a, const std::vector<int>& s) {
  if (intersection_empty(a, s))
    throw std::invalid_argument("excess_codim called on an empty intersection");
  QMatrix hom(s.size(), a.dim());
  for (std::size_t r = 0; r < s.size(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) hom.at(r, c) = a.form(s[r]).normal[c];
  return qrank(hom) < s.size();
}

bool sign_region_empty(const Arrangement& a, const SignPair& sp) {
  LinSystem sys;
  sys.num_vars = a.dim();
  for (int i : sp.plus) sys.add_strict(a.form(i).normal, a.form(i).offset);
  for (int j : sp.minus) {
    QVector neg = a.form(j).normal;
    for (Rational& c : neg) c = -c;
    sys.add_strict(std::move(neg), -a.form(j).offset);
  }
  return !fm_feasible(sys).feasible;
}

LinSystem face_system(const Arrangement& a, const SignVector& sigma) {
  LinSystem sys;
  sys.num_vars = a.dim();
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const AffineForm& f = a.form(static_cast<int>(i) + 1);
    if (sigma[i] == 0) {
      sys.add_equality(f.normal, f.offset);
    } else if (sigma[i] > 0) {
      sys.add_strict(f.normal, f.offset);
    } else {
      QVector neg = f.normal;
      for (Rational& c : neg) c = -c;
      sys.add_strict(std::move(neg), -f.offset);
    }
  }
  return sys;
}

std::vector<SignVector> enumerate_faces(const Arrangement& a) {
  std::vector<SignVector> out;
  SignVector partial;
  partial.reserve(a.size());

  std::function<void()> extend = [&] {
    if (!fm_feasible(face_system(a, partial)).feasible) return;
    if (partial.size() == a.size()) {
      out.push_back(partial);
      return;
    }
    for (Sign s : {Sign(1), Sign(-1), Sign(0)}) {
      partial.push_back(s);
      extend();
      partial.pop_back();
    }
  };
  extend();
  return out;
}

std::vector<SignVector> chambers(const Arrangement& a) {
  std::vector<SignVector> out;
  for (SignVector& f : enumerate_faces(a))
    if (is_tope(f)) out.push_back(std::move(f));
  return out;
}

}  // namespace eqos

#include "eqos/salvetti.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eqos/arrangement.hpp"

namespace eqos {

bool FacePoset::below(const SignVector& f, const SignVector& g) {
  // f <= g iff zero(f) is contained in zero(g) and g agrees with f where
  // g is nonzero
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0 && g[i] != 0) return false;
    if (f[i] != 0 && g[i] != 0 && f[i] != g[i]) return false;
  }
  return true;
}

std::vector<SignVector> FacePoset::chamber_list() const {
  std::vector<SignVector> out;
  for (const SignVector& f : faces)
    if (is_tope(f)) out.push_back(f);
  return out;
}

std::string SalvettiElement::to_string() const {
  return "(" + sign_vector_to_string(face) + ", " + sign_vector_to_string(chamber) + ")";
}

SalvettiPoset::SalvettiPoset(FacePoset faces) : faces_(std::move(faces)) {
  std::vector<SignVector> chs = faces_.chamber_list();
  chamber_count_ = chs.size();
  for (const SignVector& f : faces_.faces)
    for (const SignVector& c : chs)
      if (FacePoset::below(c, f)) elements_.push_back({f, c});
}

bool SalvettiPoset::below(std::size_t a, std::size_t b) const {
  const SalvettiElement& lo = elements_[a];
  const SalvettiElement& hi = elements_[b];
  if (!FacePoset::below(lo.face, hi.face)) return false;
  return lo.chamber == compose(lo.face, hi.chamber);
}

std::vector<std::size_t> SalvettiPoset::involution() const {
  std::vector<std::size_t> perm(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const SalvettiElement& el = elements_[i];
    SignVector reflected = el.chamber;
    for (std::size_t k = 0; k < el.face.size(); ++k)
      if (el.face[k] == 0) reflected[k] = -reflected[k];
    SalvettiElement image{el.face, reflected};
    auto it = std::find(elements_.begin(), elements_.end(), image);
    if (it == elements_.end())
      throw std::runtime_error("involution leaves the poset at " + el.to_string() +
                               ": reflected chamber " + sign_vector_to_string(reflected) +
                               " is not adjacent");
    perm[i] = static_cast<std::size_t>(it - elements_.begin());
  }
  return perm;
}

SalvettiPoset build_salvetti(const std::vector<SignVector>& faces) {
  if (faces.empty()) throw std::invalid_argument("empty face list");
  const std::size_t n = faces[0].size();
  std::set<SignVector> seen;
  for (const SignVector& f : faces) {
    if (f.size() != n) throw std::invalid_argument("face list has mixed lengths");
    if (!seen.insert(f).second)
      throw std::invalid_argument("duplicate covector " + sign_vector_to_string(f));
  }

  std::vector<SignVector> chs;
  for (const SignVector& f : faces)
    if (is_tope(f)) chs.push_back(f);
  if (chs.empty()) throw std::invalid_argument("face list contains no chamber");

  // central symmetry: needed for the conjugation action to stay inside
  for (const SignVector& f : faces)
    if (!seen.count(negated(f)))
      throw std::invalid_argument("covector set is not symmetric: missing -" +
                                  sign_vector_to_string(f));

  // composition closure on chambers: F o C must be a chamber of the list
  std::set<SignVector> chamber_set(chs.begin(), chs.end());
  for (const SignVector& f : faces) {
    for (const SignVector& c : chs) {
      SignVector fc = compose(f, c);
      if (!chamber_set.count(fc))
        throw std::invalid_argument("composition " + sign_vector_to_string(f) + " o " +
                                    sign_vector_to_string(c) + " = " + sign_vector_to_string(fc) +
                                    " is not a chamber of the input");
    }
  }

  FacePoset fp;
  fp.n = n;
  fp.faces = faces;
  return SalvettiPoset(std::move(fp));
}

std::size_t OrderComplex::simplex_count() const {
  std::size_t total = 0;
  for (const auto& dim : simplices) total += dim.size();
  return total;
}

OrderComplex order_complex(const SalvettiPoset& sal) {
  const std::size_t m = sal.size();

  // strict order closure as adjacency lists (the order is transitive, so
  // chains are exactly the totally ordered tuples)
  std::vector<std::vector<std::int32_t>> above(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b && sal.below(a, b)) above[a].push_back(static_cast<std::int32_t>(b));

  OrderComplex cx;
  cx.vertex_count = m;
  cx.simplices.emplace_back();
  for (std::size_t v = 0; v < m; ++v)
    cx.simplices[0].push_back({static_cast<std::int32_t>(v)});

  // extend chains upward; every chain is recorded once, ordered by the
  // poset, which makes the representation canonical
  std::size_t dim = 0;
  while (!cx.simplices[dim].empty()) {
    std::vector<std::vector<std::int32_t>> next;
    for (const auto& chain : cx.simplices[dim]) {
      for (std::int32_t b : above[chain.back()]) {
        std::vector<std::int32_t> extended = chain;
        extended.push_back(b);
        next.push_back(std::move(extended));
      }
    }
    if (next.empty()) break;
    cx.simplices.push_back(std::move(next));
    ++dim;
  }
  return cx;
}

std::vector<SignVector> parse_sign_vector_file(std::istream& in, bool topes_only) {
  std::string line;
  std::size_t lineno = 0;
  auto next_payload = [&](std::string& out) {
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
  if (!next_payload(header)) throw ParseError("empty sign-vector file");
  std::istringstream hs(header);
  long n = -1, count = -1;
  if (!(hs >> n >> count) || n < 0 || count < 0)
    throw ParseError("line " + std::to_string(lineno) + ": expected header \"n count\"");

  std::vector<SignVector> out;
  for (long row = 0; row < count; ++row) {
    std::string payload;
    if (!next_payload(payload))
      throw ParseError("expected " + std::to_string(count) + " sign vectors, got " +
                       std::to_string(row));
    std::istringstream ls(payload);
    std::string word;
    ls >> word;
    std::string extra;
    if (ls >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
    if (word.size() != static_cast<std::size_t>(n))
      throw ParseError("line " + std::to_string(lineno) + ": sign string has length " +
                       std::to_string(word.size()) + ", expected " + std::to_string(n));
    SignVector sv;
    try {
      sv = sign_vector_from_string(word);
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (topes_only && !is_tope(sv))
      throw ParseError("line " + std::to_string(lineno) + ": tope contains '0'");
    out.push_back(std::move(sv));
  }
  return out;
}

std::vector<SignVector> load_sign_vector_file(const std::string& path, bool topes_only) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sign-vector file: " + path);
  try {
    return parse_sign_vector_file(in, topes_only);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_sign_vector_file(const std::vector<SignVector>& vectors) {
  std::ostringstream os;
  os << (vectors.empty() ? 0 : vectors[0].size()) << ' ' << vectors.size() << '\n';
  for (const SignVector& v : vectors) os << sign_vector_to_string(v) << '\n';
  return os.str();
}

}  // namespace eqos

#include "eqos/presentations.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eqos {

std::string GeneratorProvenance::to_string() const {
  switch (family) {
    case 1: return "family 1, i=" + std::to_string(pair.plus.empty() ? 0 : pair.plus[0]);
    case 2: return "family 2, " + pair.to_string();
    case 3: return "family 3, " + pair.to_string();
    default: return "file";
  }
}

Gf2Poly os_boundary(std::size_t e_vars, const std::vector<int>& s) {
  if (s.empty()) throw std::invalid_argument("os_boundary of the empty set");
  Gf2Poly acc = Gf2Poly::zero(e_vars);
  for (std::size_t j = 0; j < s.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != j) rest.push_back(s[i]);
    acc += e_monomial(e_vars, rest);
  }
  return acc;
}

namespace {

struct Candidate {
  Gf2Poly poly;
  GeneratorProvenance prov;
};

// Keep candidates that are not monomial multiples of earlier-retained
// ones.  Sorting by degree first makes "earlier" mean "smaller", so the
// pruned list generates the same ideal (tests assert this through
// ideal_equal against the unpruned list).
std::vector<Candidate> prune_monomial_multiples(std::vector<Candidate> cands, bool prune) {
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return a.poly < b.poly;
  });
  std::vector<Candidate> kept;
  for (Candidate& c : cands) {
    bool drop = false;
    for (const Candidate& k : kept) {
      if (c.poly == k.poly) {
        drop = true;  // exact duplicate (e.g. a symmetric family-3 pair)
        break;
      }
      if (!prune) continue;
      if (k.poly.leading().divides(c.poly.leading())) {
        Monomial q = k.poly.leading().divide_into(c.poly.leading());
        if (k.poly.times_monomial(q) == c.poly) {
          drop = true;
          break;
        }
      }
    }
    if (!drop) kept.push_back(std::move(c));
  }
  return kept;
}

// all subsets of {1..n} with 1 <= size <= max_size, in mask order
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t max_size, Fn&& fn) {
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_size) continue;
    std::vector<int> s;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (std::size_t{1} << b)) s.push_back(static_cast<int>(b) + 1);
    fn(s);
  }
}

IdealPresentation finish(std::size_t n, bool has_x, std::vector<Candidate> cands, bool prune) {
  cands = prune_monomial_multiples(std::move(cands), prune);
  IdealPresentation p;
  p.n = n;
  p.has_x = has_x;
  for (Candidate& c : cands) {
    p.generators.push_back(std::move(c.poly));
    p.provenance.push_back(std::move(c.prov));
  }
  return p;
}

}  // namespace

IdealPresentation os_ideal(const Arrangement& a) { return os_ideal(a, true); }

IdealPresentation os_ideal(const Arrangement& a, bool prune) {
  const std::size_t n = a.size();
  std::vector<Candidate> cands;

  for (int i = 1; i <= static_cast<int>(n); ++i)
    cands.push_back({Gf2Poly::from_monomial(Monomial::e(n, i, 2)), {1, SignPair({i}, {})}});

  const std::size_t max_size = a.rank() + 1;
  for_each_subset(n, max_size, [&](const std::vector<int>& s) {
    if (intersection_empty(a, s)) {
      cands.push_back({e_monomial(n, s), {2, SignPair(s, {})}});
    } else if (excess_codim(a, s)) {
      cands.push_back({os_boundary(n, s), {3, SignPair(s, {})}});
    }
  });

  return finish(n, false, std::move(cands), prune);
}

IdealPresentation eq_ideal(const Arrangement& a) { return eq_ideal(a, true); }

IdealPresentation eq_ideal(const Arrangement& a, bool prune) {
  const std::size_t n = a.size();
  std::vector<Candidate> cands;

  for (int i = 1; i <= static_cast<int>(n); ++i) {
    // e_i(x - e_i) = e_i^2 + e_i x
    Gf2Poly g = Gf2Poly::e(n, i) * (Gf2Poly::x(n) + Gf2Poly::e(n, i));
    cands.push_back({std::move(g), {1, SignPair({i}, {})}});
  }

  const std::size_t max_size = a.rank() + 1;
  for_each_subset(n, max_size, [&](const std::vector<int>& s) {
    const std::size_t k = s.size();
    // split s into S+ / S- in all 2^k ways
    for (std::size_t split = 0; split < (std::size_t{1} << k); ++split) {
      std::vector<int> plus, minus;
      for (std::size_t b = 0; b < k; ++b)
        (split & (std::size_t{1} << b) ? minus : plus).push_back(s[b]);
      SignPair sp(plus, minus);
      if (!sign_region_empty(a, sp)) continue;

      Gf2Poly front = e_monomial(n, sp.plus) * x_minus_e_product(n, sp.minus);
      cands.push_back({front, {2, sp}});

      if (!intersection_empty(a, s)) {
        Gf2Poly back = x_minus_e_product(n, sp.plus) * e_monomial(n, sp.minus);
        Gf2Poly numerator = front + back;
        Gf2Poly quotient;
        try {
          quotient = numerator.divide_by_x();
        } catch (const std::invalid_argument&) {
          // the theorem guarantees the x cancels; reaching this means the
          // construction itself is broken
          throw std::logic_error("family-3 numerator not divisible by x for " + sp.to_string());
        }
        cands.push_back({std::move(quotient), {3, sp}});
      }
    }
  });

  return finish(n, true, std::move(cands), prune);
}

IdealPresentation specialize(const IdealPresentation& p, int x_value) {
  if (!p.has_x) throw std::invalid_argument("specialize needs a presentation with x");
  if (x_value != 0 && x_value != 1) throw std::invalid_argument("x specializes to 0 or 1 only");
  IdealPresentation out;
  out.n = p.n;
  out.has_x = false;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    Gf2Poly g = p.generators[i].substitute_x(x_value);
    if (g.is_zero()) continue;
    out.generators.push_back(std::move(g));
    out.provenance.push_back(p.provenance[i]);
  }
  return out;
}

IdealPresentation flip_coorientation(const IdealPresentation& p, int i) {
  if (!p.has_x) throw std::invalid_argument("flip_coorientation needs a presentation with x");
  if (i < 1 || static_cast<std::size_t>(i) > p.n)
    throw std::invalid_argument("flip index out of range");
  IdealPresentation out = p;
  for (Gf2Poly& g : out.generators) g = g.substitute_e_flip(i);
  return out;
}

bool psi_check(const Arrangement& a) {
  return ideal_equal(specialize(eq_ideal(a), 0).generators, os_ideal(a).generators);
}

QuotientRing quotient_ring(const IdealPresentation& p, unsigned degree_bound) {
  return QuotientRing(p.n, p.has_x, p.generators, degree_bound);
}

std::size_t vg_dimension(const IdealPresentation& eq_presentation) {
  IdealPresentation vg = specialize(eq_presentation, 1);
  // the x=1 ideal is not graded, but its standard monomials are
  // squarefree, so degree n exhausts them
  QuotientRing q(vg.n, false, vg.generators, static_cast<unsigned>(vg.n));
  return q.total_dimension();
}

RingHilbertData ring_hilbert_data(const Arrangement& a, unsigned degree_bound) {
  RingHilbertData data;
  data.degree_bound = degree_bound;
  IdealPresentation eqp = eq_ideal(a);
  data.eq_hf = quotient_ring(eqp, degree_bound).hilbert_function(degree_bound);
  data.os_hf = quotient_ring(os_ideal(a), degree_bound).hilbert_function(degree_bound);
  data.vg_dimension = vg_dimension(eqp);
  return data;
}

namespace {

bool freeness_from_hf(const std::vector<std::size_t>& eq_hf, const std::vector<std::size_t>& os_hf,
                      unsigned rank, unsigned degree_bound) {
  if (eq_hf[0] != 1 || os_hf[0] != 1) return false;
  for (unsigned k = 1; k <= degree_bound; ++k) {
    if (eq_hf[k] < eq_hf[k - 1]) return false;
    if (eq_hf[k] - eq_hf[k - 1] != os_hf[k]) return false;
  }
  for (unsigned k = rank + 1; k <= degree_bound; ++k)
    if (os_hf[k] != 0) return false;
  return true;
}

}  // namespace

bool freeness_check(const Arrangement& a, unsigned degree_bound) {
  unsigned rank = static_cast<unsigned>(a.rank());
  if (degree_bound < rank + 1)
    throw std::invalid_argument("freeness check needs degree bound >= rank + 1");
  RingHilbertData data = ring_hilbert_data(a, degree_bound);
  return freeness_from_hf(data.eq_hf, data.os_hf, rank, degree_bound);
}

bool freeness_check_ideals(const IdealPresentation& eq, unsigned rank, unsigned degree_bound) {
  std::vector<std::size_t> eq_hf = quotient_ring(eq, degree_bound).hilbert_function(degree_bound);
  std::vector<std::size_t> os_hf =
      quotient_ring(specialize(eq, 0), degree_bound).hilbert_function(degree_bound);
  return freeness_from_hf(eq_hf, os_hf, rank, degree_bound);
}

bool vg_chamber_model(const Arrangement& a) {
  std::vector<SignVector> chs = chambers(a);
  IdealPresentation eqp = eq_ideal(a);
  IdealPresentation vg = specialize(eqp, 1);

  // e_i evaluates to the Heaviside indicator of the positive side
  for (const Gf2Poly& g : vg.generators) {
    for (const SignVector& ch : chs) {
      bool value = false;
      for (const Monomial& t : g.terms()) {
        bool term = true;
        for (std::size_t i = 1; i <= vg.n && term; ++i)
          if (t.exp_e(static_cast<int>(i)) > 0 && ch[i - 1] < 0) term = false;
        value ^= term;
      }
      if (value) return false;  // a relation fails to vanish on a chamber
    }
  }
  return vg_dimension(eqp) == chs.size();
}

bool cone_formula_check(const Arrangement& a, unsigned degree_bound) {
  std::vector<std::size_t> hf_a =
      quotient_ring(eq_ideal(a), degree_bound).hilbert_function(degree_bound);
  std::vector<std::size_t> hf_cone =
      quotient_ring(eq_ideal(cone(a)), degree_bound).hilbert_function(degree_bound);
  if (hf_cone[0] != hf_a[0]) return false;
  for (unsigned k = 1; k <= degree_bound; ++k)
    if (hf_cone[k] != hf_a[k] + hf_a[k - 1]) return false;
  return true;
}

std::optional<std::vector<bool>> match_paper_ideal(const Arrangement& a,
                                                   const std::vector<Gf2Poly>& target) {
  std::vector<Gf2Poly> target_basis = buchberger(target);
  const std::size_t n = a.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> flips(n);
    for (std::size_t b = 0; b < n; ++b) flips[b] = (mask >> b) & 1;
    Arrangement b = a.with_coorientation(flips);
    if (buchberger(eq_ideal(b).generators) == target_basis) return flips;
  }
  return std::nullopt;
}

IdealPresentation parse_ideal_file(std::istream& in) {
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
  if (!next_payload(header)) throw ParseError("empty ideal file");
  std::istringstream hs(header);
  std::string n_kw, x_kw;
  long n = -1, x_flag = -1;
  if (!(hs >> n_kw >> n >> x_kw >> x_flag) || n_kw != "n" || x_kw != "x" || n < 0 ||
      (x_flag != 0 && x_flag != 1))
    throw ParseError("line " + std::to_string(lineno) + ": expected header \"n <count> x <0|1>\"");

  IdealPresentation p;
  p.n = static_cast<std::size_t>(n);
  p.has_x = x_flag == 1;
  std::string payload;
  while (next_payload(payload)) {
    try {
      Gf2Poly g = parse_poly(payload, p.n);
      if (!p.has_x && !g.x_free())
        throw std::invalid_argument("polynomial uses x but the header says x 0");
      p.generators.push_back(std::move(g));
      p.provenance.push_back({0, {}});
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return p;
}

IdealPresentation load_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open ideal file: " + path);
  try {
    return parse_ideal_file(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_ideal_file(const IdealPresentation& p) {
  std::ostringstream os;
  os << "n " << p.n << " x " << (p.has_x ? 1 : 0) << '\n';
  for (const Gf2Poly& g : p.generators) os << g.to_string() << '\n';
  return os.str();
}

}  // namespace eqos

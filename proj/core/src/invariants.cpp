#include "eqos/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace eqos {

namespace {

std::string dims_to_string(const std::vector<std::size_t>& dims) {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + ")";
}

}  // namespace

std::string Fingerprint::to_string() const {
  // multiset with multiplicities, already sorted
  std::map<std::vector<std::size_t>, std::size_t> counts;
  for (const auto& p : profiles) ++counts[p];
  std::string s = "{";
  bool first = true;
  for (const auto& [dims, count] : counts) {
    if (!first) s += ", ";
    first = false;
    s += dims_to_string(dims) + "x" + std::to_string(count);
  }
  return s + "}";
}

AnnProfile ann_profile(const QuotientRing& q, const Gf2Poly& ell, unsigned D) {
  if (ell.is_zero() || ell.degree() != 1)
    throw std::invalid_argument("annihilator profile needs a nonzero degree-1 form");
  if (D + 1 > q.degree_bound())
    throw std::invalid_argument("annihilator profile to degree " + std::to_string(D) +
                                " needs ring degree bound " + std::to_string(D + 1));
  AnnProfile p;
  p.form = ell;
  for (unsigned k = 1; k <= D; ++k)
    p.kernel_dims.push_back(q.multiplication_matrix(ell, k).nullity());
  return p;
}

bool ann_generated_by(const QuotientRing& q, const Gf2Poly& ell,
                      const std::vector<Gf2Poly>& gens, unsigned D) {
  if (ell.is_zero() || ell.degree() != 1)
    throw std::invalid_argument("ann_generated_by needs a nonzero degree-1 form");
  if (D + 1 > q.degree_bound())
    throw std::invalid_argument("ann_generated_by beyond the ring degree bound");

  // the candidate generators must annihilate ell at all, otherwise the
  // generated ideal cannot sit inside the kernel
  for (const Gf2Poly& g : gens)
    if (!q.normal_form(ell * g).is_zero()) return false;

  std::vector<Gf2Poly> enlarged = q.groebner();
  for (const Gf2Poly& g : gens)
    if (!g.is_zero()) enlarged.push_back(g);
  QuotientRing q2(q.e_vars(), q.has_x(), enlarged, D);

  std::vector<std::size_t> hf1 = q.hilbert_function(D);
  std::vector<std::size_t> hf2 = q2.hilbert_function(D);
  for (unsigned k = 1; k <= D; ++k) {
    std::size_t ideal_dim = hf1[k] - hf2[k];
    std::size_t kernel_dim = q.multiplication_matrix(ell, k).nullity();
    if (ideal_dim != kernel_dim) return false;
  }
  return true;
}

Fingerprint fingerprint(const QuotientRing& q, unsigned D) {
  if (D + 1 > q.degree_bound())
    throw std::invalid_argument("fingerprint to degree " + std::to_string(D) +
                                " needs ring degree bound " + std::to_string(D + 1));
  Fingerprint fp;
  fp.degree_horizon = D;
  for (const Gf2Poly& ell : q.all_linear_forms())
    fp.profiles.push_back(ann_profile(q, ell, D).kernel_dims);
  std::sort(fp.profiles.begin(), fp.profiles.end());
  return fp;
}

LinearAnnWitness find_linear_annihilator_pair(const QuotientRing& q, const Gf2Poly& ell,
                                              unsigned D) {
  LinearAnnWitness w;
  w.form = ell;

  // candidate generators live in the degree-1 kernel of the form; two
  // distinct nonzero GF(2) forms are automatically independent
  Gf2Matrix m1 = q.multiplication_matrix(ell, 1);
  std::vector<Gf2Vector> kernel = gf2_kernel_basis(m1);
  const std::vector<Monomial>& basis = q.standard_monomials(1);

  std::vector<Gf2Poly> elems;
  for (std::size_t mask = 1; mask < (std::size_t{1} << kernel.size()); ++mask) {
    Gf2Vector v(m1.cols());
    for (std::size_t b = 0; b < kernel.size(); ++b)
      if (mask & (std::size_t{1} << b)) v ^= kernel[b];
    std::vector<Monomial> terms;
    for (std::size_t c = 0; c < basis.size(); ++c)
      if (v.get(c)) terms.push_back(basis[c]);
    elems.push_back(Gf2Poly::from_terms(q.e_vars(), std::move(terms)));
  }

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      std::vector<Gf2Poly> gens = {elems[i], elems[j]};
      if (ann_generated_by(q, ell, gens, D)) {
        w.found = true;
        w.gens = std::move(gens);
        return w;
      }
    }
  }
  return w;
}

std::size_t linear_annihilator_pair_count(const QuotientRing& q, unsigned D) {
  std::size_t count = 0;
  for (const Gf2Poly& ell : q.all_linear_forms())
    if (find_linear_annihilator_pair(q, ell, D).found) ++count;
  return count;
}

DistinguishResult distinguish(const QuotientRing& q1, const QuotientRing& q2, unsigned D) {
  if (q1.variable_count() != q2.variable_count())
    throw std::invalid_argument("distinguish needs rings with the same variable count");

  DistinguishResult r;

  std::vector<std::size_t> hf1 = q1.hilbert_function(D);
  std::vector<std::size_t> hf2 = q2.hilbert_function(D);
  if (hf1 != hf2) {
    r.verdict = Verdict::kDistinguished;
    r.certificate_kind = "hilbert-function";
    r.certificate = dims_to_string(hf1) + " vs " + dims_to_string(hf2);
    return r;
  }

  Fingerprint f1 = fingerprint(q1, D);
  Fingerprint f2 = fingerprint(q2, D);
  if (!(f1 == f2)) {
    // name one profile whose multiplicity differs
    std::map<std::vector<std::size_t>, long> delta;
    for (const auto& p : f1.profiles) ++delta[p];
    for (const auto& p : f2.profiles) --delta[p];
    std::string witness;
    for (const auto& [dims, d] : delta) {
      if (d != 0) {
        witness = dims_to_string(dims) + " occurs " + std::to_string(d > 0 ? d : -d) +
                  " more time(s) in the " + (d > 0 ? "first" : "second") + " ring";
        break;
      }
    }
    r.verdict = Verdict::kDistinguished;
    r.certificate_kind = "fingerprint";
    r.certificate = witness;
    return r;
  }

  std::size_t c1 = linear_annihilator_pair_count(q1, D);
  std::size_t c2 = linear_annihilator_pair_count(q2, D);
  if (c1 != c2) {
    r.verdict = Verdict::kDistinguished;
    r.certificate_kind = "linear-annihilator";
    r.certificate = std::to_string(c1) + " vs " + std::to_string(c2) +
                    " linear forms with pair-generated annihilators";
    return r;
  }

  r.verdict = Verdict::kNotDistinguished;
  r.certificate_kind = "none";
  r.certificate = "no implemented invariant separates these rings";
  return r;
}

}  // namespace eqos

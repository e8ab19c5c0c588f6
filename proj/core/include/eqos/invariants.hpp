#ifndef EQOS_INVARIANTS_HPP
#define EQOS_INVARIANTS_HPP

#include <string>
#include <vector>

#include "eqos/gf2_poly.hpp"
#include "eqos/quotient_ring.hpp"

namespace eqos {

/// Degreewise annihilator dimensions of one degree-1 form: kernel_dims[k]
/// (stored at index k-1) is the GF(2) dimension of the kernel of
/// multiplication by the form from degree k to degree k+1.
struct AnnProfile {
  Gf2Poly form;
  std::vector<std::size_t> kernel_dims;  // degrees 1..D

  bool operator==(const AnnProfile&) const = default;
};

/// Multiset of kernel-dimension vectors over every nonzero degree-1 form
/// of the ambient ring, sorted canonically.  A graded-isomorphism
/// invariant: any linear change of variables permutes the forms.
struct Fingerprint {
  unsigned degree_horizon = 0;
  std::vector<std::vector<std::size_t>> profiles;  // sorted multiset

  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

/// Annihilator profile of `ell` to degree D.  Rejects zero or non-linear
/// forms; needs q.degree_bound() >= D + 1.
AnnProfile ann_profile(const QuotientRing& q, const Gf2Poly& ell, unsigned D);

/// True iff the ideal generated by `gens` inside q equals the annihilator
/// of `ell` degreewise up to D.  The ideal's degreewise dimension comes
/// from a second Groebner computation (quotient by ideal + gens).
bool ann_generated_by(const QuotientRing& q, const Gf2Poly& ell,
                      const std::vector<Gf2Poly>& gens, unsigned D);

Fingerprint fingerprint(const QuotientRing& q, unsigned D);

/// Number of nonzero degree-1 forms whose annihilator is generated by a
/// pair of two distinct degree-1 forms up to degree D (candidates are
/// drawn from the degree-1 kernel of the form).
std::size_t linear_annihilator_pair_count(const QuotientRing& q, unsigned D);

/// For one form: the first distinct pair of degree-1 generators that
/// presents the whole annihilator, if any (used for certificates).
struct LinearAnnWitness {
  bool found = false;
  Gf2Poly form;
  std::vector<Gf2Poly> gens;
};
LinearAnnWitness find_linear_annihilator_pair(const QuotientRing& q, const Gf2Poly& ell,
                                              unsigned D);

enum class Verdict { kDistinguished, kNotDistinguished };

struct DistinguishResult {
  Verdict verdict = Verdict::kNotDistinguished;
  std::string certificate_kind;  // "hilbert-function", "fingerprint", "linear-annihilator"
  std::string certificate;       // human-readable witness of the difference

  bool distinguished() const { return verdict == Verdict::kDistinguished; }
};

/// Fixed invariant ladder: Hilbert functions, then fingerprints, then the
/// count of linear forms with pair-generated annihilators.  A negative
/// verdict only means no implemented invariant separates the rings.
DistinguishResult distinguish(const QuotientRing& q1, const QuotientRing& q2, unsigned D);

}  // namespace eqos

#endif

#ifndef EQOS_PRESENTATIONS_HPP
#define EQOS_PRESENTATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "eqos/arrangement.hpp"
#include "eqos/gf2_poly.hpp"
#include "eqos/quotient_ring.hpp"
#include "eqos/sign_vector.hpp"

namespace eqos {

/// Which relation family produced a generator, and from which geometric
/// datum.  Family 1 is the per-hyperplane relation, family 2 the empty
/// open sign region, family 3 the empty sign region over a nonempty flat
/// (for the non-equivariant ring: the dependent subset).
struct GeneratorProvenance {
  int family = 0;
  SignPair pair;  // family 1: plus = {i}; OS families 2/3: plus = S

  std::string to_string() const;
};

/// Generators of one of the three ring presentations, with provenance.
struct IdealPresentation {
  std::size_t n = 0;  // number of e-variables
  bool has_x = false;
  std::vector<Gf2Poly> generators;
  std::vector<GeneratorProvenance> provenance;  // parallel to generators
};

/// Derivation sum d(prod_{i in s} e_i) = sum_j prod_{i != j} e_i (signs
/// vanish over GF(2)).  s must be nonempty; the singleton gives 1.
Gf2Poly os_boundary(std::size_t e_vars, const std::vector<int>& s);

/// Orlik-Solomon ideal of the arrangement: e_i^2; products over empty
/// intersections; boundaries of dependent subsets with nonempty
/// intersection.  Subsets run up to size rank+1, and generators that are
/// monomial multiples of retained smaller ones are pruned.
IdealPresentation os_ideal(const Arrangement& a);
IdealPresentation os_ideal(const Arrangement& a, bool prune);

/// Equivariant ideal: e_i(x - e_i); the products
/// prod_{S+} e_i prod_{S-} (x - e_j) over empty open sign regions; and
/// the x-divided symmetrized products when additionally the flat of
/// S+ u S- is nonempty.  Sign pairs run over supports up to rank+1.
IdealPresentation eq_ideal(const Arrangement& a);
IdealPresentation eq_ideal(const Arrangement& a, bool prune);

/// Substitute x := 0 (recovers the Orlik-Solomon presentation) or x := 1
/// (the Varchenko-Gelfand presentation).  Requires has_x.
IdealPresentation specialize(const IdealPresentation& p, int x_value);

/// Substitute e_i := x + e_i in every generator (coorientation reversal
/// on the presentation side).  Requires has_x.
IdealPresentation flip_coorientation(const IdealPresentation& p, int i);

/// The specialization map sends the equivariant ideal onto the
/// Orlik-Solomon ideal; true iff the two ideals coincide.
bool psi_check(const Arrangement& a);

/// Hilbert data of the three rings at a common horizon.
struct RingHilbertData {
  unsigned degree_bound = 0;
  std::vector<std::size_t> eq_hf;   // equivariant ring, degrees 0..D
  std::vector<std::size_t> os_hf;   // Orlik-Solomon ring, degrees 0..D
  std::size_t vg_dimension = 0;     // total dim of the x=1 fiber
};
RingHilbertData ring_hilbert_data(const Arrangement& a, unsigned degree_bound);

/// Freeness over GF(2)[x] certified through Hilbert data: first
/// differences of the equivariant Hilbert function must reproduce the
/// Orlik-Solomon one, which must vanish above the rank.
bool freeness_check(const Arrangement& a, unsigned degree_bound);

/// Same check on explicit ideals (eq generators and their x := 0 image);
/// lets tests exercise torsion counterexamples that no arrangement
/// produces.  `rank` bounds the degrees where the x=0 side may live.
bool freeness_check_ideals(const IdealPresentation& eq, unsigned rank, unsigned degree_bound);

/// Total dimension of the Varchenko-Gelfand ring (x = 1 fiber), read off
/// the standard monomials of its (no longer graded) quotient.
std::size_t vg_dimension(const IdealPresentation& eq_presentation);

/// Heaviside model: evaluate every x=1 generator on the chamber set
/// (e_i is the indicator of the positive side) and compare the VG
/// dimension with the chamber count.
bool vg_chamber_model(const Arrangement& a);

/// Hilbert-function form of the cone identity: the equivariant ring of
/// the coned arrangement is the original one tensored with a rank-2 free
/// module, so HF_cone(k) = HF(k) + HF(k-1) degreewise.
bool cone_formula_check(const Arrangement& a, unsigned degree_bound);

/// Search all 2^n coorientations for one whose equivariant ideal equals
/// the target (reduced-basis equality).  Returns the flip vector found,
/// scanning in binary counting order.
std::optional<std::vector<bool>> match_paper_ideal(const Arrangement& a,
                                                   const std::vector<Gf2Poly>& target);

/// Ideal file IO: header "n <count> x <0|1>", then one polynomial per
/// line; '#' comments allowed.
IdealPresentation parse_ideal_file(std::istream& in);
IdealPresentation load_ideal_file(const std::string& path);
std::string format_ideal_file(const IdealPresentation& p);

/// Quotient ring of a presentation at the given degree bound.
QuotientRing quotient_ring(const IdealPresentation& p, unsigned degree_bound);

}  // namespace eqos

#endif

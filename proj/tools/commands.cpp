#include "commands.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <eqos/corpus.hpp>
#include <eqos/fixtures.hpp>
#include <eqos/homology.hpp>
#include <eqos/invariants.hpp>
#include <eqos/presentations.hpp>
#include <eqos/salvetti.hpp>

namespace eqos::cli {

namespace {

int default_compare_degree(std::size_t n, std::size_t rank) {
  if (n == 5 || n == 6) return 4;
  return static_cast<int>(rank) + 2;
}

void emit_generators(Report& r, const IdealPresentation& p) {
  r.line("generators (" + std::to_string(p.generators.size()) + "):");
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    r.line("  " + p.generators[i].to_string() + "  [" + p.provenance[i].to_string() + "]");
}

void emit_basis(Report& r, const std::vector<Gf2Poly>& basis) {
  r.line("reduced groebner basis (" + std::to_string(basis.size()) + "):");
  for (const Gf2Poly& g : basis) r.line("  " + g.to_string());
}

std::string flips_to_string(const std::vector<bool>& flips) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < flips.size(); ++i) {
    if (!flips[i]) continue;
    if (!first) s += ",";
    first = false;
    s += std::to_string(i + 1);
  }
  return s + "}";
}

}  // namespace

Report cmd_presentation(const std::string& file, const std::string& ring, int degree) {
  Report r("presentation --ring " + ring +
           (degree >= 0 ? " --degree " + std::to_string(degree) : "") + " " + file);
  Arrangement a = load_arrangement(file);
  r.data("input", file);
  r.data("input_digest", file_digest(file));
  r.data("n", static_cast<long long>(a.size()));
  r.data("d", static_cast<long long>(a.dim()));
  r.data("rank", static_cast<long long>(a.rank()));

  unsigned D = degree >= 0 ? static_cast<unsigned>(degree)
                           : static_cast<unsigned>(a.rank()) + 2;

  if (ring == "os") {
    IdealPresentation p = os_ideal(a);
    QuotientRing q = quotient_ring(p, D);
    emit_generators(r, p);
    emit_basis(r, q.groebner());
    r.data("degree_horizon", static_cast<long long>(D));
    r.data("hilbert_function", format_vector(q.hilbert_function(D)));
  } else if (ring == "eq") {
    IdealPresentation p = eq_ideal(a);
    QuotientRing q = quotient_ring(p, D);
    emit_generators(r, p);
    emit_basis(r, q.groebner());
    r.data("degree_horizon", static_cast<long long>(D));
    r.data("hilbert_function", format_vector(q.hilbert_function(D)));
  } else if (ring == "vg") {
    IdealPresentation eqp = eq_ideal(a);
    IdealPresentation p = specialize(eqp, 1);
    // the x=1 quotient is filtered rather than graded; standard monomials
    // are squarefree, so degree n exhausts the ring
    QuotientRing q = quotient_ring(p, static_cast<unsigned>(p.n));
    emit_generators(r, p);
    emit_basis(r, q.groebner());
    std::size_t dim = q.total_dimension();
    std::size_t n_chambers = chambers(a).size();
    r.data("degree_horizon", static_cast<long long>(p.n));
    r.data("vg_dimension", static_cast<long long>(dim));
    r.data("chambers", static_cast<long long>(n_chambers));
    r.check("vg-dimension-equals-chambers", dim == n_chambers,
            std::to_string(dim) + " vs " + std::to_string(n_chambers));
  } else {
    throw std::invalid_argument("unknown ring '" + ring + "' (use os, eq, or vg)");
  }
  return r;
}

namespace {

Report compare_rings(Report r, const IdealPresentation& pa, const IdealPresentation& pb,
                     int degree) {
  if (pa.n != pb.n || pa.has_x != pb.has_x)
    throw std::invalid_argument("compared presentations must share the variable set");
  unsigned D = degree >= 0 ? static_cast<unsigned>(degree) : 4u;
  r.data("degree_horizon", static_cast<long long>(D));

  QuotientRing qa = quotient_ring(pa, D + 1);
  QuotientRing qb = quotient_ring(pb, D + 1);
  r.data("hilbert_function_a", format_vector(qa.hilbert_function(D)));
  r.data("hilbert_function_b", format_vector(qb.hilbert_function(D)));
  Fingerprint fa = fingerprint(qa, D);
  Fingerprint fb = fingerprint(qb, D);
  r.data("fingerprint_a", fa.to_string());
  r.data("fingerprint_b", fb.to_string());

  DistinguishResult d = distinguish(qa, qb, D);
  r.data("verdict", d.distinguished() ? "DISTINGUISHED" : "NOT-DISTINGUISHED");
  r.data("certificate_kind", d.certificate_kind);
  r.data("certificate", d.certificate);
  r.line(d.distinguished()
             ? "verdict: DISTINGUISHED via " + d.certificate_kind + " (" + d.certificate + ")"
             : "verdict: NOT-DISTINGUISHED; no implemented invariant separates these rings");
  return r;
}

}  // namespace

Report cmd_compare_files(const std::string& file_a, const std::string& file_b, int degree) {
  Report r("compare " + file_a + " " + file_b +
           (degree >= 0 ? " --degree " + std::to_string(degree) : ""));
  Arrangement a = load_arrangement(file_a);
  Arrangement b = load_arrangement(file_b);
  r.data("input_a", file_a);
  r.data("input_b", file_b);
  r.data("input_digest_a", file_digest(file_a));
  r.data("input_digest_b", file_digest(file_b));
  if (a.size() != b.size())
    throw std::invalid_argument("arrangements have different hyperplane counts");
  int D = degree >= 0 ? degree
                      : default_compare_degree(a.size(), std::max(a.rank(), b.rank()));
  return compare_rings(std::move(r), eq_ideal(a), eq_ideal(b), D);
}

Report cmd_compare_ideals(const std::string& ideal_a, const std::string& ideal_b, int degree) {
  Report r("compare --ideals " + ideal_a + " " + ideal_b +
           (degree >= 0 ? " --degree " + std::to_string(degree) : ""));
  IdealPresentation pa = load_ideal_file(ideal_a);
  IdealPresentation pb = load_ideal_file(ideal_b);
  r.data("input_a", ideal_a);
  r.data("input_b", ideal_b);
  r.data("input_digest_a", file_digest(ideal_a));
  r.data("input_digest_b", file_digest(ideal_b));
  return compare_rings(std::move(r), pa, pb, degree);
}

namespace {

void salvetti_combinatorics(Report& r, const SalvettiPoset& sal, unsigned twist_bound,
                            bool equivariant, std::vector<std::size_t>* betti_out,
                            std::vector<std::size_t>* borel_out, std::size_t* fixed_out) {
  r.data("faces", static_cast<long long>(sal.face_poset().faces.size()));
  r.data("salvetti_elements", static_cast<long long>(sal.size()));
  r.data("chambers", static_cast<long long>(sal.chamber_count()));

  std::vector<std::size_t> inv = sal.involution();
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < inv.size(); ++i)
    if (inv[i] == i) ++fixed;
  r.data("fixed_points", static_cast<long long>(fixed));
  if (fixed_out) *fixed_out = fixed;

  OrderComplex cx = order_complex(sal);
  r.data("simplices", static_cast<long long>(cx.simplex_count()));
  std::vector<std::size_t> betti = homology_gf2(cx);
  r.data("betti", format_vector(betti));
  if (betti_out) *betti_out = betti;

  if (equivariant) {
    std::vector<std::size_t> dims = equivariant_cohomology_gf2(cx, inv, twist_bound);
    r.data("borel_twist_bound", static_cast<long long>(twist_bound));
    r.data("borel_dims", format_vector(dims));
    r.line("borel dims valid to degree " + std::to_string(twist_bound - 1) +
           " (twist truncation " + std::to_string(twist_bound) + ")");
    if (borel_out) *borel_out = dims;
  }
}

}  // namespace

Report cmd_salvetti(const std::string& file, int degree, bool equivariant) {
  Report r("salvetti " + file + (degree >= 0 ? " --degree " + std::to_string(degree) : "") +
           (equivariant ? " --equivariant" : ""));
  Arrangement input = load_arrangement(file);
  r.data("input", file);
  r.data("input_digest", file_digest(file));

  Arrangement a = input;
  if (!input.is_central()) {
    a = cone(input);
    r.line("input is affine: analyzing its cone (" + std::to_string(a.size()) +
           " hyperplanes in dimension " + std::to_string(a.dim()) + ")");
    r.data("coned", "true");
  } else {
    r.data("coned", "false");
  }

  unsigned rank = static_cast<unsigned>(a.rank());
  unsigned D = degree >= 0 ? static_cast<unsigned>(degree) : rank + 2;

  SalvettiPoset sal = build_salvetti(enumerate_faces(a));
  std::vector<std::size_t> betti, borel;
  std::size_t fixed = 0;
  salvetti_combinatorics(r, sal, D, equivariant, &betti, &borel, &fixed);

  r.check("fixed-points-equal-chambers", fixed == sal.chamber_count(),
          std::to_string(fixed) + " vs " + std::to_string(sal.chamber_count()));

  std::vector<std::size_t> os_hf = quotient_ring(os_ideal(a), rank).hilbert_function(rank);
  r.data("os_hilbert_function", format_vector(os_hf));
  bool betti_match = betti.size() == os_hf.size() &&
                     std::equal(betti.begin(), betti.end(), os_hf.begin());
  r.check("betti-equals-os-hilbert", betti_match,
          format_vector(betti) + " vs " + format_vector(os_hf));

  if (equivariant) {
    std::vector<std::size_t> eq_hf = quotient_ring(eq_ideal(a), D).hilbert_function(D);
    r.data("eq_hilbert_function", format_vector(eq_hf));
    bool ok = borel.size() == D;
    for (unsigned t = 0; t < D && ok; ++t) ok = borel[t] == eq_hf[t];
    r.check("borel-dims-equal-eq-hilbert", ok,
            format_vector(borel) + " vs " + format_vector(eq_hf) + " (to degree " +
                std::to_string(D - 1) + ")");
  }
  return r;
}

Report cmd_salvetti_abstract(const std::string& topes_file, const std::string& covectors_file,
                             int degree, bool equivariant) {
  Report r("salvetti --topes " + topes_file + " --covectors " + covectors_file +
           (degree >= 0 ? " --degree " + std::to_string(degree) : "") +
           (equivariant ? " --equivariant" : ""));
  std::vector<SignVector> topes = load_sign_vector_file(topes_file, true);
  std::vector<SignVector> covectors = load_sign_vector_file(covectors_file, false);
  r.data("input_topes", topes_file);
  r.data("input_covectors", covectors_file);
  r.data("input_digest_topes", file_digest(topes_file));
  r.data("input_digest_covectors", file_digest(covectors_file));

  // the tope file must list exactly the chambers of the covector list
  std::set<SignVector> tope_set(topes.begin(), topes.end());
  std::set<SignVector> covector_topes;
  for (const SignVector& c : covectors)
    if (is_tope(c)) covector_topes.insert(c);
  r.check("tope-list-consistent", tope_set == covector_topes,
          std::to_string(tope_set.size()) + " topes vs " +
              std::to_string(covector_topes.size()) + " tope covectors");

  SalvettiPoset sal = build_salvetti(covectors);
  OrderComplex probe = order_complex(sal);
  unsigned D = degree >= 0 ? static_cast<unsigned>(degree)
                           : static_cast<unsigned>(probe.dimension()) + 2;
  salvetti_combinatorics(r, sal, D, equivariant, nullptr, nullptr, nullptr);
  return r;
}

Report cmd_reproduce(const std::string& example) {
  Report r("reproduce --example " + example);

  if (example == "falk") {
    IdealPresentation j = fixtures::falk_ideal_j();
    IdealPresentation jp = fixtures::falk_ideal_j_prime();
    r.data("fixture_J", fnv1a_digest(std::string(fixtures::kFalkIdealJ)));
    r.data("fixture_Jprime", fnv1a_digest(std::string(fixtures::kFalkIdealJPrime)));

    std::vector<std::size_t> os_a = quotient_ring(specialize(j, 0), 4).hilbert_function(4);
    std::vector<std::size_t> os_b = quotient_ring(specialize(jp, 0), 4).hilbert_function(4);
    r.data("os_hilbert_function_A", format_vector(os_a));
    r.data("os_hilbert_function_Aprime", format_vector(os_b));
    r.check("x0-specializations-have-equal-hilbert-functions", os_a == os_b,
            format_vector(os_a) + " vs " + format_vector(os_b));

    QuotientRing qj = quotient_ring(j, 5);
    QuotientRing qjp = quotient_ring(jp, 5);
    Fingerprint fj = fingerprint(qj, 4);
    Fingerprint fjp = fingerprint(qjp, 4);
    r.data("fingerprint_A", fj.to_string());
    r.data("fingerprint_Aprime", fjp.to_string());
    r.check("fingerprints-differ", !(fj == fjp), "degree horizon 4");

    DistinguishResult d = distinguish(qj, qjp, 4);
    r.check("rings-distinguished", d.distinguished(),
            d.certificate_kind + ": " + d.certificate);

    Arrangement a = fixtures::falk_arrangement_a();
    auto flips = match_paper_ideal(a, j.generators);
    r.check("coorientation-search-matches-published-ideal", flips.has_value(),
            flips ? "flipped hyperplanes " + flips_to_string(*flips) : "no assignment matches");
    if (flips) r.data("matching_flips", flips_to_string(*flips));

    auto flips_wrong = match_paper_ideal(a, jp.generators);
    r.check("other-ideal-unreachable-from-this-arrangement", !flips_wrong.has_value(),
            "the two pointed matroids differ");
    return r;
  }

  if (example == "vertical") {
    IdealPresentation va = fixtures::vertical_ideal_a();
    IdealPresentation vap = fixtures::vertical_ideal_a_prime();
    r.data("fixture_A", fnv1a_digest(std::string(fixtures::kVerticalIdealA)));
    r.data("fixture_Aprime", fnv1a_digest(std::string(fixtures::kVerticalIdealAPrime)));

    QuotientRing qa = quotient_ring(va, 5);
    QuotientRing qap = quotient_ring(vap, 5);

    Gf2Poly e2 = Gf2Poly::e(5, 2);
    Gf2Poly e3 = Gf2Poly::e(5, 3);
    Gf2Poly x_minus_e2 = Gf2Poly::x(5) + Gf2Poly::e(5, 2);

    AnnProfile prof = ann_profile(qa, e2, 4);
    r.data("ann_e2_kernel_dims", format_vector(prof.kernel_dims));
    r.check("ann-e2-degree-1-kernel-has-dimension-2", prof.kernel_dims[0] == 2,
            "dims " + format_vector(prof.kernel_dims));
    r.check("ann-e2-generated-by-e3-and-x-minus-e2",
            ann_generated_by(qa, e2, {e3, x_minus_e2}, 4), "to degree 4");

    std::size_t count_a = linear_annihilator_pair_count(qa, 4);
    std::size_t count_ap = linear_annihilator_pair_count(qap, 4);
    r.data("pair_generated_count_A", static_cast<long long>(count_a));
    r.data("pair_generated_count_Aprime", static_cast<long long>(count_ap));
    r.check("no-form-of-Aprime-has-pair-generated-annihilator", count_ap == 0,
            std::to_string(count_ap) + " forms pass");

    DistinguishResult d = distinguish(qa, qap, 4);
    r.check("rings-distinguished", d.distinguished(),
            d.certificate_kind + ": " + d.certificate);
    return r;
  }

  if (example == "cone") {
    for (const CorpusEntry& entry : named_corpus()) {
      unsigned D = static_cast<unsigned>(entry.arrangement.rank()) + 2;
      bool ok = cone_formula_check(entry.arrangement, D);
      r.check("cone-formula(" + entry.name + ")", ok, "degree horizon " + std::to_string(D));
    }
    return r;
  }

  throw std::invalid_argument("unknown example '" + example +
                              "' (use falk, vertical, or cone)");
}

}  // namespace eqos::cli

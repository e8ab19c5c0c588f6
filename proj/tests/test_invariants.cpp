#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <eqos/fixtures.hpp>
#include <eqos/gf2_matrix.hpp>
#include <eqos/invariants.hpp>
#include <eqos/presentations.hpp>

using namespace eqos;

namespace {

QuotientRing cstar_ring(unsigned bound = 4) {
  return QuotientRing(1, true, {parse_poly("e1*(x-e1)", 1)}, bound);
}

// apply an invertible linear change of variables to every generator
std::vector<Gf2Poly> substituted_generators(const std::vector<Gf2Poly>& gens, std::size_t n,
                                            bool has_x, const Gf2Matrix& m) {
  std::size_t v = n + (has_x ? 1 : 0);
  std::vector<Gf2Poly> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back(Gf2Poly::e(n, static_cast<int>(i)));
  if (has_x) vars.push_back(Gf2Poly::x(n));

  std::vector<Gf2Poly> images;
  for (std::size_t col = 0; col < v; ++col) {
    Gf2Poly image = Gf2Poly::zero(n);
    for (std::size_t row = 0; row < v; ++row)
      if (m.get(row, col)) image += vars[row];
    images.push_back(std::move(image));
  }
  if (!has_x) images.push_back(Gf2Poly::x(n));  // keep the unused slot in place

  std::vector<Gf2Poly> out;
  for (const Gf2Poly& g : gens) out.push_back(g.substitute(images));
  return out;
}

}  // namespace

TEST_CASE("annihilator profiles of the rank-one deformation", "[invariants]") {
  QuotientRing q = cstar_ring();
  REQUIRE(ann_profile(q, Gf2Poly::e(1, 1), 2).kernel_dims == std::vector<std::size_t>{1, 1});
  REQUIRE(ann_profile(q, Gf2Poly::x(1), 2).kernel_dims == std::vector<std::size_t>{0, 0});
  REQUIRE(ann_profile(q, parse_poly("x+e1", 1), 2).kernel_dims == std::vector<std::size_t>{1, 1});

  REQUIRE_THROWS_AS(ann_profile(q, Gf2Poly::zero(1), 2), std::invalid_argument);
  REQUIRE_THROWS_AS(ann_profile(q, parse_poly("e1^2", 1), 2), std::invalid_argument);
  REQUIRE_THROWS_AS(ann_profile(q, Gf2Poly::e(1, 1), 4), std::invalid_argument);
}

TEST_CASE("fingerprints of small rings", "[invariants]") {
  Fingerprint f = fingerprint(cstar_ring(), 2);
  REQUIRE(f.profiles == std::vector<std::vector<std::size_t>>{{0, 0}, {1, 1}, {1, 1}});

  // the empty arrangement leaves only the polynomial ring in x
  QuotientRing empty_ring(0, true, {}, 4);
  Fingerprint fe = fingerprint(empty_ring, 3);
  REQUIRE(fe.profiles == std::vector<std::vector<std::size_t>>{{0, 0, 0}});
}

TEST_CASE("published annihilator facts of the flip example", "[invariants]") {
  QuotientRing qa = quotient_ring(fixtures::vertical_ideal_a(), 5);
  QuotientRing qap = quotient_ring(fixtures::vertical_ideal_a_prime(), 5);

  Gf2Poly e2 = Gf2Poly::e(5, 2);
  Gf2Poly e3 = Gf2Poly::e(5, 3);
  Gf2Poly x_minus_e2 = parse_poly("x+e2", 5);

  SECTION("ann(e2) has the stated degree-1 kernel") {
    AnnProfile prof = ann_profile(qa, e2, 4);
    REQUIRE(prof.kernel_dims[0] == 2);

    // and that kernel is spanned by e3 and x - e2
    Gf2Matrix m1 = qa.multiplication_matrix(e2, 1);
    REQUIRE(m1.apply(qa.coordinates(e3, 1)).is_zero());
    REQUIRE(m1.apply(qa.coordinates(x_minus_e2, 1)).is_zero());
  }

  SECTION("the two linear forms generate the whole annihilator") {
    REQUIRE(ann_generated_by(qa, e2, {e3, x_minus_e2}, 4));
    // dropping one of them leaves too small an ideal
    REQUIRE_FALSE(ann_generated_by(qa, e2, {e3}, 4));
    REQUIRE_FALSE(ann_generated_by(qa, e2, {x_minus_e2}, 4));
    // and a form that fails to annihilate is rejected outright
    REQUIRE_FALSE(ann_generated_by(qa, e2, {e3, Gf2Poly::x(5)}, 4));
  }

  SECTION("no form of the flipped ring has a pair-generated annihilator") {
    REQUIRE(linear_annihilator_pair_count(qap, 4) == 0);
    REQUIRE(linear_annihilator_pair_count(qa, 4) >= 1);
    LinearAnnWitness w = find_linear_annihilator_pair(qa, e2, 4);
    REQUIRE(w.found);
    REQUIRE(w.gens.size() == 2);
  }

  SECTION("a zero annihilator is generated by nothing") {
    QuotientRing q = cstar_ring();
    REQUIRE(ann_generated_by(q, Gf2Poly::x(1), {}, 2));
  }
}

TEST_CASE("distinguish ladder", "[invariants]") {
  QuotientRing qj = quotient_ring(fixtures::falk_ideal_j(), 5);
  QuotientRing qjp = quotient_ring(fixtures::falk_ideal_j_prime(), 5);

  DistinguishResult self = distinguish(qj, qj, 4);
  REQUIRE_FALSE(self.distinguished());
  REQUIRE(self.certificate == "no implemented invariant separates these rings");

  DistinguishResult falk = distinguish(qj, qjp, 4);
  REQUIRE(falk.distinguished());
  REQUIRE(falk.certificate_kind == "fingerprint");

  // symmetric up to certificate orientation
  DistinguishResult reversed = distinguish(qjp, qj, 4);
  REQUIRE(reversed.distinguished());
  REQUIRE(reversed.certificate_kind == falk.certificate_kind);

  QuotientRing qa = quotient_ring(fixtures::vertical_ideal_a(), 5);
  QuotientRing qap = quotient_ring(fixtures::vertical_ideal_a_prime(), 5);
  REQUIRE(distinguish(qa, qap, 4).distinguished());

  // hilbert functions cannot tell the pairs apart, fingerprints must
  REQUIRE(qj.hilbert_function(4) == qjp.hilbert_function(4));
  REQUIRE(!(fingerprint(qj, 4) == fingerprint(qjp, 4)));
}

TEST_CASE("x=0 fibers of the published pair share hilbert data", "[invariants]") {
  auto os_a = quotient_ring(specialize(fixtures::falk_ideal_j(), 0), 4).hilbert_function(4);
  auto os_b = quotient_ring(specialize(fixtures::falk_ideal_j_prime(), 0), 4).hilbert_function(4);
  REQUIRE(os_a == os_b);
  REQUIRE(os_a == std::vector<std::size_t>{1, 5, 8, 0, 0});
}

TEST_CASE("enlarging the ideal only shrinks multiplication ranks", "[invariants][property]") {
  std::mt19937_64 rng(31);
  QuotientRing base = quotient_ring(fixtures::vertical_ideal_a(), 5);
  std::vector<Gf2Poly> forms = base.all_linear_forms();

  for (int trial = 0; trial < 10; ++trial) {
    // adjoin a random quadratic
    Gf2Poly extra = forms[rng() % forms.size()] * forms[rng() % forms.size()];
    std::vector<Gf2Poly> enlarged = base.groebner();
    enlarged.push_back(extra);
    QuotientRing bigger(5, true, enlarged, 5);

    auto hf1 = base.hilbert_function(4);
    auto hf2 = bigger.hilbert_function(4);
    const Gf2Poly& ell = forms[rng() % forms.size()];
    for (unsigned k = 1; k <= 3; ++k) {
      std::size_t rank1 = base.multiplication_matrix(ell, k).rank();
      std::size_t rank2 = bigger.multiplication_matrix(ell, k).rank();
      REQUIRE(rank2 <= rank1);
      std::size_t null2 = bigger.multiplication_matrix(ell, k).nullity();
      REQUIRE(null2 <= hf2[k]);
    }
  }
}

TEST_CASE("fingerprints are graded-isomorphism invariants", "[invariants][property]") {
  std::mt19937_64 rng(37);

  SECTION("permuting the e-variables") {
    IdealPresentation j = fixtures::falk_ideal_j();
    Fingerprint base = fingerprint(quotient_ring(j, 5), 4);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<std::size_t> perm{0, 1, 2, 3, 4};
      std::shuffle(perm.begin(), perm.end(), rng);
      Gf2Matrix m(6, 6);
      for (std::size_t i = 0; i < 5; ++i) m.set(perm[i], i, true);
      m.set(5, 5, true);  // x stays put
      QuotientRing q(5, true, substituted_generators(j.generators, 5, true, m), 5);
      REQUIRE(fingerprint(q, 4) == base);
    }
  }

  SECTION("coorientation reversal") {
    IdealPresentation a = fixtures::vertical_ideal_a();
    Fingerprint base = fingerprint(quotient_ring(a, 5), 4);
    for (int i = 1; i <= 5; ++i) {
      QuotientRing q = quotient_ring(flip_coorientation(a, i), 5);
      REQUIRE(fingerprint(q, 4) == base);
    }
  }

  SECTION("random invertible linear substitutions") {
    QuotientRing small = cstar_ring(4);
    Fingerprint small_base = fingerprint(small, 2);
    for (int trial = 0; trial < 5; ++trial) {
      Gf2Matrix m = random_invertible_gf2(2, [&] { return rng(); });
      QuotientRing q(1, true,
                     substituted_generators({parse_poly("e1*(x-e1)", 1)}, 1, true, m), 4);
      REQUIRE(fingerprint(q, 2) == small_base);
    }

    IdealPresentation a = fixtures::vertical_ideal_a();
    Fingerprint base = fingerprint(quotient_ring(a, 5), 4);
    for (int trial = 0; trial < 3; ++trial) {
      Gf2Matrix m = random_invertible_gf2(6, [&] { return rng(); });
      QuotientRing q(5, true, substituted_generators(a.generators, 5, true, m), 5);
      REQUIRE(fingerprint(q, 4) == base);
    }
  }
}

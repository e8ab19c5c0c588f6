// Acceptance suite: one scripted run per criterion, each printing a
// single PASS/FAIL line with its wall time.  Exit code is the number of
// failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <eqos/corpus.hpp>
#include <eqos/fixtures.hpp>
#include <eqos/gf2_matrix.hpp>
#include <eqos/homology.hpp>
#include <eqos/invariants.hpp>
#include <eqos/linsystem.hpp>
#include <eqos/presentations.hpp>
#include <eqos/salvetti.hpp>

using namespace eqos;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, long budget_ms,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  auto stop = std::chrono::steady_clock::now();
  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  if (budget_ms > 0 && ms > budget_ms) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget ") +
              std::to_string(budget_ms) + " ms";
  }
  if (!ok) ++failures;
  std::cout << "ACCEPTANCE " << number << " " << name << ": " << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << " [" << ms << " ms]" << std::endl;
}

std::string fmt(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

int main() {
  // 1. the rank-one deformation ring, exactly
  criterion(1, "single-hyperplane deformation ring", 1000, [](std::string& detail) {
    Arrangement pt = parse_arrangement("1 1\n1 0\n");
    IdealPresentation p = eq_ideal(pt);
    bool ideal_ok = ideal_equal(p.generators, {parse_poly("e1*(x-e1)", 1)});
    auto hf = quotient_ring(p, 4).hilbert_function(4);
    bool hf_ok = hf == std::vector<std::size_t>{1, 2, 2, 2, 2};
    detail = "HF " + fmt(hf);
    return ideal_ok && hf_ok;
  });

  // 2. the published ideal pair: equal plain fibers, different fingerprints
  criterion(2, "published pair: equal x=0 fibers, distinct fingerprints", 60000,
            [](std::string& detail) {
              IdealPresentation j = fixtures::falk_ideal_j();
              IdealPresentation jp = fixtures::falk_ideal_j_prime();
              auto os_a = quotient_ring(specialize(j, 0), 4).hilbert_function(4);
              auto os_b = quotient_ring(specialize(jp, 0), 4).hilbert_function(4);
              QuotientRing qj = quotient_ring(j, 5);
              QuotientRing qjp = quotient_ring(jp, 5);
              bool fp_differ = !(fingerprint(qj, 4) == fingerprint(qjp, 4));
              detail = "x=0 HF " + fmt(os_a) + " vs " + fmt(os_b) +
                       (fp_differ ? "; fingerprints differ" : "; fingerprints agree");
              return os_a == os_b && fp_differ;
            });

  // 3. some coorientation of the printed equations realizes the published ideal
  criterion(3, "coorientation search hits the published ideal", 300000,
            [](std::string& detail) {
              Arrangement a = fixtures::falk_arrangement_a();
              auto flips = match_paper_ideal(a, fixtures::falk_ideal_j().generators);
              if (!flips) {
                detail = "no assignment matched";
                return false;
              }
              std::string s;
              for (std::size_t i = 0; i < flips->size(); ++i)
                if ((*flips)[i]) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
              detail = "flipped {" + s + "}";
              return true;
            });

  // 4. the flip example's annihilator facts
  criterion(4, "flip example annihilator certificate", 60000, [](std::string& detail) {
    QuotientRing qa = quotient_ring(fixtures::vertical_ideal_a(), 5);
    QuotientRing qap = quotient_ring(fixtures::vertical_ideal_a_prime(), 5);
    Gf2Poly e2 = Gf2Poly::e(5, 2);
    AnnProfile prof = ann_profile(qa, e2, 4);
    bool dims_ok = prof.kernel_dims[0] == 2;
    bool gen_ok =
        ann_generated_by(qa, e2, {Gf2Poly::e(5, 3), parse_poly("x+e2", 5)}, 4);
    std::size_t count_other = linear_annihilator_pair_count(qap, 4);
    DistinguishResult d = distinguish(qa, qap, 4);
    detail = "ann(e2) dims " + fmt(prof.kernel_dims) + ", other ring count " +
             std::to_string(count_other);
    return dims_ok && gen_ok && count_other == 0 && d.distinguished();
  });

  // 5. the flat-family identities across the whole corpus
  criterion(5, "flat-family identities on the corpus", 600000, [](std::string& detail) {
    std::vector<CorpusEntry> corpus = full_corpus();
    if (corpus.size() < 20) {
      detail = "corpus too small: " + std::to_string(corpus.size());
      return false;
    }
    std::size_t checked = 0;
    for (const CorpusEntry& entry : corpus) {
      const Arrangement& a = entry.arrangement;
      unsigned D = static_cast<unsigned>(a.rank()) + 2;
      if (!psi_check(a)) {
        detail = entry.name + ": specialization map misses the plain ideal";
        return false;
      }
      if (!freeness_check(a, D)) {
        detail = entry.name + ": freeness signature fails";
        return false;
      }
      RingHilbertData data = ring_hilbert_data(a, D);
      std::size_t os_total = 0;
      for (std::size_t v : data.os_hf) os_total += v;
      std::size_t n_chambers = chambers(a).size();
      if (os_total != n_chambers || data.vg_dimension != n_chambers) {
        detail = entry.name + ": dims " + std::to_string(os_total) + "/" +
                 std::to_string(data.vg_dimension) + " vs " + std::to_string(n_chambers) +
                 " chambers";
        return false;
      }
      ++checked;
    }
    detail = std::to_string(checked) + " arrangements";
    return true;
  });

  // 6. the coning identity on hilbert functions
  criterion(6, "cone formula across the corpus", 300000, [](std::string& detail) {
    std::size_t checked = 0;
    for (const CorpusEntry& entry : full_corpus()) {
      unsigned D = static_cast<unsigned>(entry.arrangement.rank()) + 2;
      if (!cone_formula_check(entry.arrangement, D)) {
        detail = entry.name;
        return false;
      }
      ++checked;
    }
    detail = std::to_string(checked) + " arrangements";
    return true;
  });

  // 7. coorientation invariance, one flip at a time
  criterion(7, "single-flip invariance of hilbert data and fingerprints", 0,
            [](std::string& detail) {
              std::size_t checked = 0;
              for (const CorpusEntry& entry : full_corpus()) {
                const Arrangement& a = entry.arrangement;
                unsigned bound = static_cast<unsigned>(a.rank()) + 2;
                unsigned horizon = bound - 1;
                IdealPresentation base = eq_ideal(a);
                QuotientRing qb = quotient_ring(base, bound);
                auto hf = qb.hilbert_function(bound);
                Fingerprint fp = fingerprint(qb, horizon);
                for (int i = 1; i <= static_cast<int>(a.size()); ++i) {
                  IdealPresentation regenerated = eq_ideal(a.with_flipped(i));
                  IdealPresentation substituted = flip_coorientation(base, i);
                  if (!ideal_equal(regenerated.generators, substituted.generators)) {
                    detail = entry.name + " flip " + std::to_string(i) + ": ideals differ";
                    return false;
                  }
                  QuotientRing qf = quotient_ring(regenerated, bound);
                  if (qf.hilbert_function(bound) != hf) {
                    detail = entry.name + " flip " + std::to_string(i) + ": HF moved";
                    return false;
                  }
                  if (!(fingerprint(qf, horizon) == fp)) {
                    detail = entry.name + " flip " + std::to_string(i) + ": fingerprint moved";
                    return false;
                  }
                  ++checked;
                }
              }
              detail = std::to_string(checked) + " flips";
              return true;
            });

  // 8. topological cross-validation through the conjugation complex
  criterion(8, "salvetti model matches the algebra (central corpus)", 900000,
            [](std::string& detail) {
              for (const CorpusEntry& entry : central_corpus()) {
                const Arrangement& a = entry.arrangement;
                if (a.size() > 6) continue;
                SalvettiPoset sal = build_salvetti(enumerate_faces(a));
                auto inv = sal.involution();
                std::size_t fixed = 0;
                for (std::size_t i = 0; i < inv.size(); ++i)
                  if (inv[i] == i) ++fixed;
                if (fixed != chambers(a).size()) {
                  detail = entry.name + ": fixed points";
                  return false;
                }
                OrderComplex cx = order_complex(sal);
                unsigned rank = static_cast<unsigned>(a.rank());
                if (homology_gf2(cx) !=
                    quotient_ring(os_ideal(a), rank).hilbert_function(rank)) {
                  detail = entry.name + ": betti numbers";
                  return false;
                }
                unsigned D = rank + 2;
                if (equivariant_cohomology_gf2(cx, inv, D) !=
                    quotient_ring(eq_ideal(a), D).hilbert_function(D - 1)) {
                  detail = entry.name + ": borel dims";
                  return false;
                }
              }
              detail = std::to_string(central_corpus().size()) + " central arrangements";
              return true;
            });

  // 9. engine self-checks
  criterion(9, "engine self-checks", 0, [](std::string& detail) {
    std::mt19937_64 rng(20250809);

    // reduced-basis uniqueness under generator permutation
    for (const CorpusEntry& entry : full_corpus()) {
      std::vector<Gf2Poly> gens = eq_ideal(entry.arrangement).generators;
      auto canonical = buchberger(gens);
      for (int trial = 0; trial < 10; ++trial) {
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        if (buchberger(shuffled) != canonical) {
          detail = entry.name + ": basis depends on generator order";
          return false;
        }
      }
    }

    // feasibility certificates verify through the independent checker
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 300; ++trial) {
      LinSystem sys;
      sys.num_vars = 1 + rng() % 3;
      std::size_t rows = 1 + rng() % 6;
      for (std::size_t i = 0; i < rows; ++i) {
        QVector coeffs;
        for (std::size_t v = 0; v < sys.num_vars; ++v) coeffs.push_back(Rational(coef(rng)));
        if (rng() % 4 == 0)
          sys.add_equality(std::move(coeffs), Rational(coef(rng)));
        else
          sys.add_strict(std::move(coeffs), Rational(coef(rng)));
      }
      FmResult r = fm_feasible(sys);
      bool ok = r.feasible ? verify_witness(sys, r.witness) : verify_refutation(sys, r.refutation);
      if (!ok) {
        detail = "feasibility certificate failed to verify";
        return false;
      }
    }

    // fingerprint invariance under random invertible substitutions
    struct Fixture {
      const char* name;
      IdealPresentation p;
      unsigned horizon;
    };
    std::vector<Fixture> rings;
    {
      IdealPresentation cstar;
      cstar.n = 1;
      cstar.has_x = true;
      cstar.generators = {parse_poly("e1*(x-e1)", 1)};
      cstar.provenance = {{1, SignPair({1}, {})}};
      rings.push_back({"cstar", cstar, 2});
    }
    rings.push_back({"falk_J", fixtures::falk_ideal_j(), 4});
    rings.push_back({"falk_Jprime", fixtures::falk_ideal_j_prime(), 4});
    rings.push_back({"vertical_A", fixtures::vertical_ideal_a(), 4});
    rings.push_back({"vertical_Aprime", fixtures::vertical_ideal_a_prime(), 4});

    for (const Fixture& f : rings) {
      std::size_t v = f.p.n + 1;
      QuotientRing q = quotient_ring(f.p, f.horizon + 1);
      Fingerprint base = fingerprint(q, f.horizon);

      std::vector<Gf2Poly> vars;
      for (std::size_t i = 1; i <= f.p.n; ++i)
        vars.push_back(Gf2Poly::e(f.p.n, static_cast<int>(i)));
      vars.push_back(Gf2Poly::x(f.p.n));

      for (int trial = 0; trial < 10; ++trial) {
        Gf2Matrix m = random_invertible_gf2(v, [&] { return rng(); });
        std::vector<Gf2Poly> images;
        for (std::size_t col = 0; col < v; ++col) {
          Gf2Poly image = Gf2Poly::zero(f.p.n);
          for (std::size_t row = 0; row < v; ++row)
            if (m.get(row, col)) image += vars[row];
          images.push_back(std::move(image));
        }
        std::vector<Gf2Poly> twisted;
        for (const Gf2Poly& g : f.p.generators) twisted.push_back(g.substitute(images));
        QuotientRing qt(f.p.n, true, twisted, f.horizon + 1);
        if (!(fingerprint(qt, f.horizon) == base)) {
          detail = std::string(f.name) + ": fingerprint moved under a linear substitution";
          return false;
        }
      }
    }
    return true;
  });

  std::cout << (failures == 0 ? "ACCEPTANCE SUITE: ALL PASS" : "ACCEPTANCE SUITE: FAILURES")
            << std::endl;
  return failures;
}

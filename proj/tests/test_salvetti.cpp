#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include <eqos/corpus.hpp>
#include <eqos/homology.hpp>
#include <eqos/presentations.hpp>
#include <eqos/salvetti.hpp>

using namespace eqos;

namespace {

SalvettiPoset salvetti_of(const Arrangement& a) { return build_salvetti(enumerate_faces(a)); }

std::size_t fixed_point_count(const SalvettiPoset& sal) {
  auto inv = sal.involution();
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < inv.size(); ++i)
    if (inv[i] == i) ++fixed;
  return fixed;
}

}  // namespace

TEST_CASE("one hyperplane: the conjugation circle", "[salvetti]") {
  Arrangement a = parse_arrangement("1 1\n1 0\n");
  SalvettiPoset sal = salvetti_of(a);

  REQUIRE(sal.size() == 4);
  std::set<std::string> elements;
  for (const SalvettiElement& el : sal.elements()) elements.insert(el.to_string());
  REQUIRE(elements == std::set<std::string>{"(+, +)", "(-, -)", "(0, +)", "(0, -)"});

  SECTION("the full order table") {
    auto index_of = [&](const std::string& name) {
      for (std::size_t i = 0; i < sal.size(); ++i)
        if (sal.elements()[i].to_string() == name) return i;
      FAIL("missing element " + name);
      return std::size_t(0);
    };
    std::size_t pp = index_of("(+, +)"), mm = index_of("(-, -)");
    std::size_t zp = index_of("(0, +)"), zm = index_of("(0, -)");
    // chambers sit below both zero-face elements and nothing else
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        bool expect = i == j || ((i == pp || i == mm) && (j == zp || j == zm));
        REQUIRE(sal.below(i, j) == expect);
      }
  }

  SECTION("involution fixes the chamber elements and swaps the others") {
    auto inv = sal.involution();
    REQUIRE(fixed_point_count(sal) == 2);
    for (std::size_t i = 0; i < sal.size(); ++i) {
      REQUIRE(inv[inv[i]] == i);  // an involution
      const SalvettiElement& el = sal.elements()[i];
      bool is_chamber_element = el.face == el.chamber;
      REQUIRE((inv[i] == i) == is_chamber_element);
    }
  }

  SECTION("the order complex is a circle with the reflection action") {
    OrderComplex cx = order_complex(sal);
    REQUIRE(cx.simplices[0].size() == 4);
    REQUIRE(cx.simplices[1].size() == 4);
    REQUIRE(cx.dimension() == 1);
    REQUIRE(homology_gf2(cx) == std::vector<std::size_t>{1, 1});
    REQUIRE(equivariant_cohomology_gf2(cx, sal.involution(), 5) ==
            std::vector<std::size_t>{1, 2, 2, 2, 2});
  }
}

TEST_CASE("two coordinate lines: the torus", "[salvetti]") {
  Arrangement a = parse_arrangement("2 2\n1 0 0\n0 1 0\n");
  SalvettiPoset sal = salvetti_of(a);
  REQUIRE(sal.face_poset().faces.size() == 9);
  REQUIRE(sal.size() == 16);  // 4*1 + 4*2 + 1*4 adjacent chamber choices
  REQUIRE(fixed_point_count(sal) == 4);

  OrderComplex cx = order_complex(sal);
  REQUIRE(homology_gf2(cx) == std::vector<std::size_t>{1, 2, 1});
  REQUIRE(equivariant_cohomology_gf2(cx, sal.involution(), 4) ==
          quotient_ring(eq_ideal(a), 4).hilbert_function(3));
}

TEST_CASE("a fixed point gives the classifying-space tower", "[salvetti]") {
  // empty arrangement: one chamber, trivial involution, a single vertex
  Arrangement a = parse_arrangement("0 0\n");
  SalvettiPoset sal = salvetti_of(a);
  REQUIRE(sal.size() == 1);
  OrderComplex cx = order_complex(sal);
  REQUIRE(cx.simplex_count() == 1);
  REQUIRE(equivariant_cohomology_gf2(cx, sal.involution(), 6) ==
          std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("input validation", "[salvetti]") {
  REQUIRE_THROWS_AS(build_salvetti({}), std::invalid_argument);

  // chambers only, missing the separating wall: composition closure holds,
  // but dropping a negative chamber breaks symmetry
  std::vector<SignVector> asym = {{1}, {0}};
  REQUIRE_THROWS_WITH(build_salvetti(asym), Catch::Matchers::ContainsSubstring("symmetric"));

  // a face list without any tope
  std::vector<SignVector> no_tope = {{0}};
  REQUIRE_THROWS_WITH(build_salvetti(no_tope), Catch::Matchers::ContainsSubstring("chamber"));

  // doctored list: remove one chamber from a genuine face list so that a
  // composition escapes
  Arrangement coords = parse_arrangement("2 2\n1 0 0\n0 1 0\n");
  std::vector<SignVector> faces = enumerate_faces(coords);
  std::vector<SignVector> broken;
  for (const SignVector& f : faces)
    if (!(is_tope(f) && f[0] == 1 && f[1] == 1)) broken.push_back(f);
  bool threw = false;
  try {
    build_salvetti(broken);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  REQUIRE(threw);
}

TEST_CASE("poset structure across the central corpus", "[salvetti][property]") {
  for (const CorpusEntry& entry : central_corpus()) {
    if (entry.arrangement.size() > 4) continue;  // the big cone runs in acceptance
    INFO(entry.name);
    const Arrangement& a = entry.arrangement;
    SalvettiPoset sal = salvetti_of(a);

    // fixed points of conjugation are the real chambers
    REQUIRE(fixed_point_count(sal) == chambers(a).size());

    // the involution preserves the order relation, exhaustively
    auto inv = sal.involution();
    for (std::size_t i = 0; i < sal.size(); ++i)
      for (std::size_t j = 0; j < sal.size(); ++j) {
        REQUIRE(sal.below(i, j) == sal.below(inv[i], inv[j]));
        if (sal.below(i, j) && sal.below(j, i)) REQUIRE(i == j);  // antisymmetry
      }

    OrderComplex cx = order_complex(sal);
    std::vector<std::size_t> betti = homology_gf2(cx);

    REQUIRE(betti[0] == 1);
    long chi = 0;
    for (std::size_t k = 0; k < betti.size(); ++k)
      chi += (k % 2 ? -1 : 1) * static_cast<long>(betti[k]);
    REQUIRE(chi == euler_characteristic(cx));

    // homotopy model agrees with the algebraic side
    unsigned rank = static_cast<unsigned>(a.rank());
    REQUIRE(betti == quotient_ring(os_ideal(a), rank).hilbert_function(rank));
    unsigned D = rank + 2;
    REQUIRE(equivariant_cohomology_gf2(cx, inv, D) ==
            quotient_ring(eq_ideal(a), D).hilbert_function(D - 1));
  }
}

TEST_CASE("sign vector files", "[salvetti]") {
  Arrangement a = parse_arrangement("2 3\n0 1 0\n1 1 0\n-1 1 0\n");
  std::vector<SignVector> faces = enumerate_faces(a);

  std::string text = format_sign_vector_file(faces);
  std::istringstream in(text);
  std::vector<SignVector> reparsed = parse_sign_vector_file(in, false);
  REQUIRE(reparsed == faces);

  SECTION("tope files reject zeros") {
    std::istringstream bad("1 1\n0\n");
    REQUIRE_THROWS_WITH(parse_sign_vector_file(bad, true),
                        Catch::Matchers::ContainsSubstring("tope"));
  }
  SECTION("length and count mismatches are reported") {
    std::istringstream bad1("3 1\n++\n");
    REQUIRE_THROWS_WITH(parse_sign_vector_file(bad1, false),
                        Catch::Matchers::ContainsSubstring("length"));
    std::istringstream bad2("2 2\n++\n");
    REQUIRE_THROWS_AS(parse_sign_vector_file(bad2, false), ParseError);
  }
}

TEST_CASE("abstract covector input reproduces the realized pipeline", "[salvetti]") {
  Arrangement a = parse_arrangement("2 3\n0 1 0\n1 1 0\n-1 1 0\n");
  std::vector<SignVector> faces = enumerate_faces(a);

  // round trip the faces through the text format, then rebuild
  std::istringstream in(format_sign_vector_file(faces));
  SalvettiPoset realized = salvetti_of(a);
  SalvettiPoset abstract_sal = build_salvetti(parse_sign_vector_file(in, false));

  REQUIRE(abstract_sal.size() == realized.size());
  std::multiset<std::string> left, right;
  for (const auto& el : realized.elements()) left.insert(el.to_string());
  for (const auto& el : abstract_sal.elements()) right.insert(el.to_string());
  REQUIRE(left == right);

  REQUIRE(homology_gf2(order_complex(abstract_sal)) == homology_gf2(order_complex(realized)));
}

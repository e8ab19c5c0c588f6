#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include <eqos/arrangement.hpp>
#include <eqos/corpus.hpp>
#include <eqos/fixtures.hpp>

using namespace eqos;

TEST_CASE("arrangement parsing", "[arrangement]") {
  Arrangement pt = parse_arrangement("1 1\n1 0\n");
  REQUIRE(pt.dim() == 1);
  REQUIRE(pt.size() == 1);
  REQUIRE(pt.form(1).normal == QVector{Rational(1)});
  REQUIRE(pt.form(1).offset == 0);

  Arrangement falk = fixtures::falk_arrangement_a();
  REQUIRE(falk.size() == 5);
  REQUIRE(falk.dim() == 2);
  REQUIRE(falk.rank() == 2);

  SECTION("comments and blank lines are skipped") {
    Arrangement a = parse_arrangement("# heading\n\n2 1\n 1 1/2 -3 # trailing\n");
    REQUIRE(a.size() == 1);
    REQUIRE(a.form(1).normal[1] == make_rational(1, 2));
    REQUIRE(a.form(1).offset == Rational(-3));
  }

  SECTION("errors name the offending line") {
    REQUIRE_THROWS_WITH(parse_arrangement("2 1\n0 0 3\n"),
                        Catch::Matchers::ContainsSubstring("zero normal"));
    REQUIRE_THROWS_WITH(parse_arrangement("2 1\n1 a 3\n"),
                        Catch::Matchers::ContainsSubstring("line 2"));
    REQUIRE_THROWS_WITH(parse_arrangement("2 1\n1 2\n"),
                        Catch::Matchers::ContainsSubstring("expected 3 rationals"));
    REQUIRE_THROWS_AS(parse_arrangement("2 2\n1 0 0\n"), ParseError);
    REQUIRE_THROWS_AS(parse_arrangement(""), ParseError);
  }

  SECTION("repeated hyperplanes rejected unless permitted") {
    // same line with flipped coorientation counts as a repeat
    REQUIRE_THROWS_WITH(parse_arrangement("1 2\n2 4\n-1 -2\n"),
                        Catch::Matchers::ContainsSubstring("coincide"));
    Arrangement ok = parse_arrangement("1 2\n2 4\n-1 -2\n", true);
    REQUIRE(ok.size() == 2);
  }
}

TEST_CASE("coning", "[arrangement]") {
  Arrangement pt = parse_arrangement("1 1\n1 0\n");
  Arrangement cpt = cone(pt);
  REQUIRE(cpt.dim() == 2);
  REQUIRE(cpt.size() == 2);
  REQUIRE(cpt.form(1).normal == QVector{Rational(1), Rational(0)});
  REQUIRE(cpt.form(2).normal == QVector{Rational(0), Rational(1)});
  REQUIRE(cpt.is_central());

  Arrangement cfalk = cone(fixtures::falk_arrangement_a());
  REQUIRE(cfalk.size() == 6);
  REQUIRE(cfalk.dim() == 3);
  REQUIRE(cfalk.is_central());
  REQUIRE(cfalk.is_essential());

  Arrangement empty = parse_arrangement("2 0\n");
  Arrangement cempty = cone(empty);
  REQUIRE(cempty.size() == 1);
  REQUIRE(cempty.dim() == 3);

  SECTION("the cone is central: the origin lies on every hyperplane") {
    for (const CorpusEntry& e : named_corpus()) {
      Arrangement c = cone(e.arrangement);
      for (std::size_t i = 1; i <= c.size(); ++i) {
        REQUIRE(c.form(static_cast<int>(i)).offset == 0);
      }
    }
  }
}

TEST_CASE("intersection and codimension oracles", "[arrangement]") {
  Arrangement falk = fixtures::falk_arrangement_a();

  REQUIRE(intersection_empty(falk, {1, 2}));       // parallel walls
  REQUIRE_FALSE(intersection_empty(falk, {3, 4, 5}));  // concurrent triple
  REQUIRE_FALSE(intersection_empty(falk, {}));

  REQUIRE(excess_codim(falk, {3, 4, 5}));
  REQUIRE_FALSE(excess_codim(falk, {1, 3}));
  for (int i = 1; i <= 5; ++i) REQUIRE_FALSE(excess_codim(falk, {i}));
  REQUIRE_THROWS_AS(excess_codim(falk, {1, 2}), std::invalid_argument);
}

TEST_CASE("empty sign regions", "[arrangement]") {
  Arrangement falk = fixtures::falk_arrangement_a();
  REQUIRE(sign_region_empty(falk, SignPair({2}, {1})));   // x > 1 and x < -1
  REQUIRE_FALSE(sign_region_empty(falk, SignPair({}, {})));
  REQUIRE_FALSE(sign_region_empty(falk, SignPair({3}, {})));
}

TEST_CASE("face enumeration on the stated examples", "[arrangement]") {
  Arrangement line = parse_arrangement("2 1\n0 1 0\n");
  auto faces = enumerate_faces(line);
  REQUIRE(faces.size() == 3);
  std::set<std::string> names;
  for (auto& f : faces) names.insert(sign_vector_to_string(f));
  REQUIRE(names == std::set<std::string>{"+", "0", "-"});

  Arrangement coords = parse_arrangement("2 2\n1 0 0\n0 1 0\n");
  REQUIRE(enumerate_faces(coords).size() == 9);
  REQUIRE(chambers(coords).size() == 4);

  REQUIRE(chambers(parse_arrangement("1 1\n1 0\n")).size() == 2);
  REQUIRE(chambers(parse_arrangement("2 0\n")).size() == 1);  // the empty sign vector
  REQUIRE(chambers(parse_arrangement("3 3\n1 0 0 0\n0 1 0 0\n0 0 1 0\n")).size() == 8);

  REQUIRE(chambers(fixtures::falk_arrangement_a()).size() == 14);
  REQUIRE(chambers(fixtures::falk_arrangement_a_prime()).size() == 14);
}

TEST_CASE("enumerated faces are exactly the feasible sign vectors", "[arrangement][property]") {
  for (const char* text : {"2 3\n0 1 0\n1 1 0\n-1 1 0\n", "2 3\n1 0 0\n0 1 0\n1 1 -1\n",
                           "2 2\n1 0 0\n1 0 -1\n"}) {
    Arrangement a = parse_arrangement(text);
    std::set<SignVector> enumerated;
    for (auto& f : enumerate_faces(a)) enumerated.insert(f);

    // exhaustive 3^n sweep
    std::size_t n = a.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      SignVector sv;
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        sv.push_back(static_cast<Sign>(c % 3 == 2 ? -1 : static_cast<Sign>(c % 3)));
        c /= 3;
      }
      bool feasible = fm_feasible(face_system(a, sv)).feasible;
      REQUIRE(feasible == enumerated.count(sv));
    }
  }
}

TEST_CASE("empty sign region iff no chamber matches", "[arrangement][property]") {
  for (const CorpusEntry& entry : named_corpus()) {
    const Arrangement& a = entry.arrangement;
    auto chs = chambers(a);
    std::size_t n = a.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<int> plus, minus;
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        int trit = static_cast<int>(c % 3);
        c /= 3;
        if (trit == 1) plus.push_back(static_cast<int>(i) + 1);
        if (trit == 2) minus.push_back(static_cast<int>(i) + 1);
      }
      SignPair sp(plus, minus);
      bool any_chamber = false;
      for (const SignVector& ch : chs) {
        bool match = true;
        for (int i : sp.plus)
          if (ch[static_cast<std::size_t>(i) - 1] != 1) match = false;
        for (int j : sp.minus)
          if (ch[static_cast<std::size_t>(j) - 1] != -1) match = false;
        if (match) {
          any_chamber = true;
          break;
        }
      }
      REQUIRE(sign_region_empty(a, sp) == !any_chamber);
    }
  }
}

TEST_CASE("reflection through a flat flips empty sign regions", "[arrangement][property]") {
  Arrangement falk = fixtures::falk_arrangement_a();
  std::size_t n = falk.size();
  std::size_t total = 243;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> plus, minus;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      int trit = static_cast<int>(c % 3);
      c /= 3;
      if (trit == 1) plus.push_back(static_cast<int>(i) + 1);
      if (trit == 2) minus.push_back(static_cast<int>(i) + 1);
    }
    SignPair sp(plus, minus);
    std::vector<int> support = sp.support();
    if (support.empty() || intersection_empty(falk, support)) continue;
    if (sign_region_empty(falk, sp)) {
      REQUIRE(sign_region_empty(falk, sp.swapped()));
    }
  }
}

TEST_CASE("random rational points land in enumerated chambers", "[arrangement][property]") {
  Arrangement falk = fixtures::falk_arrangement_a();
  std::set<SignVector> chamber_set;
  for (auto& c : chambers(falk)) chamber_set.insert(c);

  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> numer(-100, 100);
  std::uniform_int_distribution<int> denom(1, 10);
  int sampled_chambers = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    QVector p;
    for (std::size_t v = 0; v < falk.dim(); ++v)
      p.push_back(make_rational(numer(rng), denom(rng)));  // box [-10, 10]^d
    SignVector sv;
    for (std::size_t i = 1; i <= falk.size(); ++i) {
      const AffineForm& f = falk.form(static_cast<int>(i));
      Rational value = f.offset;
      for (std::size_t v = 0; v < falk.dim(); ++v) value += f.normal[v] * p[v];
      sv.push_back(value > 0 ? 1 : (value < 0 ? -1 : 0));
    }
    if (!is_tope(sv)) continue;  // the point lies on a hyperplane
    ++sampled_chambers;
    REQUIRE(chamber_set.count(sv) == 1);
  }
  REQUIRE(sampled_chambers > 9000);
}

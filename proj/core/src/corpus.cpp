#include "eqos/corpus.hpp"

#include <random>

#include "eqos/fixtures.hpp"

namespace eqos {

std::vector<CorpusEntry> named_corpus() {
  std::vector<CorpusEntry> out;
  out.push_back({"point_R1", parse_arrangement("1 1\n1 0\n")});
  out.push_back({"parallel_pair", parse_arrangement("2 2\n1 0 0\n1 0 -1\n")});
  out.push_back({"coords2", parse_arrangement("2 2\n1 0 0\n0 1 0\n")});
  out.push_back({"concurrent3", parse_arrangement("2 3\n0 1 0\n1 1 0\n-1 1 0\n")});
  out.push_back({"triangle", parse_arrangement("2 3\n1 0 0\n0 1 0\n1 1 -1\n")});
  out.push_back({"boolean3", parse_arrangement("3 3\n1 0 0 0\n0 1 0 0\n0 0 1 0\n")});
  out.push_back({"generic3d", parse_arrangement("3 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n1 1 1 -1\n")});
  out.push_back({"falk_A", fixtures::falk_arrangement_a()});
  out.push_back({"falk_Aprime", fixtures::falk_arrangement_a_prime()});
  return out;
}

std::vector<CorpusEntry> random_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim_dist(1, 3);
  std::uniform_int_distribution<int> coef_dist(-3, 3);

  std::vector<CorpusEntry> out;
  while (out.size() < count) {
    int d = dim_dist(rng);
    std::uniform_int_distribution<int> n_dist(2, 6);
    int n = n_dist(rng);
    std::vector<AffineForm> forms;
    for (int i = 0; i < n; ++i) {
      AffineForm f;
      for (int c = 0; c < d; ++c) f.normal.push_back(coef_dist(rng));
      f.offset = coef_dist(rng);
      forms.push_back(std::move(f));
    }
    try {
      Arrangement a(static_cast<std::size_t>(d), std::move(forms));
      out.push_back({"random" + std::to_string(out.size()), std::move(a)});
    } catch (const std::invalid_argument&) {
      // zero normal or repeated hyperplane; draw again
    }
  }
  return out;
}

std::vector<CorpusEntry> full_corpus() {
  std::vector<CorpusEntry> out = named_corpus();
  std::size_t want = out.size() >= 20 ? 4 : 20 - out.size();
  for (CorpusEntry& e : random_corpus(want, 20250501))
    out.push_back(std::move(e));
  return out;
}

std::vector<CorpusEntry> central_corpus() {
  std::vector<CorpusEntry> out;
  out.push_back({"point_R1", parse_arrangement("1 1\n1 0\n")});
  out.push_back({"coords2", parse_arrangement("2 2\n1 0 0\n0 1 0\n")});
  out.push_back({"concurrent3", parse_arrangement("2 3\n0 1 0\n1 1 0\n-1 1 0\n")});
  out.push_back({"boolean3", parse_arrangement("3 3\n1 0 0 0\n0 1 0 0\n0 0 1 0\n")});
  out.push_back({"cone(point_R1)", cone(parse_arrangement("1 1\n1 0\n"))});
  out.push_back({"cone(concurrent3)", cone(parse_arrangement("2 3\n0 1 0\n1 1 0\n-1 1 0\n"))});
  out.push_back({"cone(falk_A)", cone(fixtures::falk_arrangement_a())});
  return out;
}

}  // namespace eqos

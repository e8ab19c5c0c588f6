#ifndef EQOS_CORPUS_HPP
#define EQOS_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "eqos/arrangement.hpp"

namespace eqos {

struct CorpusEntry {
  std::string name;
  Arrangement arrangement;
};

/// Hand-picked arrangements: the published examples plus the small
/// standard cases every invariant is checked against.
std::vector<CorpusEntry> named_corpus();

/// Deterministic pseudo-random affine arrangements with n <= 6, d <= 3
/// and integer coefficients in [-3, 3]; invalid draws (zero normals,
/// repeated hyperplanes) are rejected and redrawn.
std::vector<CorpusEntry> random_corpus(std::size_t count, std::uint64_t seed);

/// named_corpus + enough random entries to reach at least 20.
std::vector<CorpusEntry> full_corpus();

/// The central members used for the topological cross-check, all with at
/// most 6 hyperplanes (cones of the affine fixtures included).
std::vector<CorpusEntry> central_corpus();

}  // namespace eqos

#endif

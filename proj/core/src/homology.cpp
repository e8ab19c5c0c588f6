#include "eqos/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace eqos {

std::size_t sparse_gf2_rank(const std::vector<std::vector<std::int32_t>>& columns) {
  // classic left-to-right reduction: keep one pivot column per lowest
  // row index, fold each incoming column against the pivots it hits
  std::unordered_map<std::int32_t, std::size_t> pivot_of_low;
  std::vector<std::vector<std::int32_t>> reduced;
  reduced.reserve(columns.size());
  std::size_t rank = 0;

  std::vector<std::int32_t> work, merged;
  for (const auto& col : columns) {
    work = col;
    while (!work.empty()) {
      std::int32_t low = work.back();
      auto it = pivot_of_low.find(low);
      if (it == pivot_of_low.end()) {
        pivot_of_low.emplace(low, reduced.size());
        reduced.push_back(work);
        ++rank;
        break;
      }
      const auto& pivot = reduced[it->second];
      merged.clear();
      std::set_symmetric_difference(work.begin(), work.end(), pivot.begin(), pivot.end(),
                                    std::back_inserter(merged));
      work.swap(merged);
    }
  }
  return rank;
}

namespace {

using Simplex = std::vector<std::int32_t>;

std::map<Simplex, std::int32_t> index_map(const std::vector<Simplex>& simplices) {
  std::map<Simplex, std::int32_t> m;
  for (std::size_t i = 0; i < simplices.size(); ++i)
    m.emplace(simplices[i], static_cast<std::int32_t>(i));
  return m;
}

// columns of the boundary matrix d_k : C_k -> C_{k-1}
std::vector<std::vector<std::int32_t>> boundary_columns(const std::vector<Simplex>& lower,
                                                        const std::vector<Simplex>& upper) {
  std::map<Simplex, std::int32_t> lower_index = index_map(lower);
  std::vector<std::vector<std::int32_t>> cols;
  cols.reserve(upper.size());
  Simplex facet;
  for (const Simplex& s : upper) {
    std::vector<std::int32_t> col;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      facet.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) facet.push_back(s[i]);
      auto it = lower_index.find(facet);
      if (it == lower_index.end()) throw std::logic_error("complex not closed under facets");
      col.push_back(it->second);
    }
    std::sort(col.begin(), col.end());
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

std::vector<std::size_t> homology_gf2(const OrderComplex& cx, int top) {
  int dim = cx.dimension();
  if (top < 0) top = dim;

  std::vector<std::size_t> rank_d(static_cast<std::size_t>(dim) + 2, 0);  // rank of d_k
  for (int k = 1; k <= dim; ++k)
    rank_d[static_cast<std::size_t>(k)] = sparse_gf2_rank(boundary_columns(
        cx.simplices[static_cast<std::size_t>(k - 1)], cx.simplices[static_cast<std::size_t>(k)]));

  std::vector<std::size_t> betti;
  for (int k = 0; k <= top; ++k) {
    if (k > dim) {
      betti.push_back(0);
      continue;
    }
    std::size_t ck = cx.simplices[static_cast<std::size_t>(k)].size();
    betti.push_back(ck - rank_d[static_cast<std::size_t>(k)] -
                    rank_d[static_cast<std::size_t>(k) + 1]);
  }
  return betti;
}

long euler_characteristic(const OrderComplex& cx) {
  long chi = 0;
  for (std::size_t q = 0; q < cx.simplices.size(); ++q)
    chi += (q % 2 ? -1 : 1) * static_cast<long>(cx.simplices[q].size());
  return chi;
}

std::vector<std::vector<std::int32_t>> simplex_involution(
    const OrderComplex& cx, const std::vector<std::size_t>& vertex_involution) {
  std::vector<std::vector<std::int32_t>> out(cx.simplices.size());
  for (std::size_t q = 0; q < cx.simplices.size(); ++q) {
    std::map<Simplex, std::int32_t> idx = index_map(cx.simplices[q]);
    out[q].resize(cx.simplices[q].size());
    for (std::size_t i = 0; i < cx.simplices[q].size(); ++i) {
      Simplex image;
      for (std::int32_t v : cx.simplices[q][i])
        image.push_back(static_cast<std::int32_t>(vertex_involution[static_cast<std::size_t>(v)]));
      // an order automorphism keeps chains poset-sorted, so the image is
      // already in canonical form
      auto it = idx.find(image);
      if (it == idx.end())
        throw std::logic_error("vertex involution does not map chains to chains");
      out[q][i] = it->second;
    }
  }
  return out;
}

std::vector<std::size_t> equivariant_cohomology_gf2(
    const OrderComplex& cx, const std::vector<std::size_t>& vertex_involution,
    unsigned twist_bound) {
  const int dim = cx.dimension();
  const unsigned D = twist_bound;

  std::vector<std::vector<std::int32_t>> tau = simplex_involution(cx, vertex_involution);

  // coboundary lists: for each q-simplex, the (q+1)-simplices containing
  // it (with the incidence always 1 over GF(2))
  std::vector<std::vector<std::vector<std::int32_t>>> coboundary(cx.simplices.size());
  for (int q = 0; q + 1 <= dim; ++q) {
    auto cols = boundary_columns(cx.simplices[static_cast<std::size_t>(q)],
                                 cx.simplices[static_cast<std::size_t>(q + 1)]);
    coboundary[static_cast<std::size_t>(q)].resize(cx.simplices[static_cast<std::size_t>(q)].size());
    for (std::size_t upper = 0; upper < cols.size(); ++upper)
      for (std::int32_t lower : cols[upper])
        coboundary[static_cast<std::size_t>(q)][static_cast<std::size_t>(lower)].push_back(
            static_cast<std::int32_t>(upper));
  }

  // basis of the total complex in degree t: pairs (p, sigma) with
  // p + dim(sigma) = t and 0 <= p <= D, laid out p-major
  auto block_sizes = [&](unsigned t) {
    std::vector<std::pair<unsigned, std::size_t>> blocks;  // (p, count)
    for (unsigned p = 0; p <= std::min(D, t); ++p) {
      unsigned q = t - p;
      if (static_cast<int>(q) > dim) continue;
      blocks.emplace_back(p, cx.simplices[q].size());
    }
    return blocks;
  };
  auto total_dim = [&](unsigned t) {
    std::size_t total = 0;
    for (auto& [p, c] : block_sizes(t)) total += c;
    return total;
  };
  auto offset_of_p = [&](unsigned t, unsigned p) {
    std::size_t off = 0;
    for (auto& [bp, c] : block_sizes(t)) {
      if (bp == p) return off;
      off += c;
    }
    throw std::logic_error("twist block not present");
  };

  // columns of the total differential T^t -> T^{t+1}
  auto differential_columns = [&](unsigned t) {
    std::vector<std::vector<std::int32_t>> cols;
    cols.reserve(total_dim(t));
    for (auto& [p, count] : block_sizes(t)) {
      unsigned q = t - p;
      for (std::size_t s = 0; s < count; ++s) {
        std::vector<std::int32_t> col;
        // simplicial coboundary keeps the twist degree
        if (static_cast<int>(q) + 1 <= dim) {
          std::size_t off = offset_of_p(t + 1, p);
          for (std::int32_t up : coboundary[q][s])
            col.push_back(static_cast<std::int32_t>(off + static_cast<std::size_t>(up)));
        }
        // 1 + tau raises it; a fixed simplex contributes 1 + 1 = 0
        if (p + 1 <= D) {
          std::int32_t image = tau[q][s];
          if (image != static_cast<std::int32_t>(s)) {
            std::size_t off = offset_of_p(t + 1, p + 1);
            col.push_back(static_cast<std::int32_t>(off + s));
            col.push_back(static_cast<std::int32_t>(off + static_cast<std::size_t>(image)));
          }
        }
        std::sort(col.begin(), col.end());
        cols.push_back(std::move(col));
      }
    }
    return cols;
  };

  std::vector<std::size_t> dims;
  std::size_t prev_rank = 0;  // rank of d^{t-1}
  for (unsigned t = 0; t < D; ++t) {
    std::size_t dt = total_dim(t);
    std::size_t rank_t = sparse_gf2_rank(differential_columns(t));
    dims.push_back(dt - rank_t - prev_rank);
    prev_rank = rank_t;
  }
  return dims;
}

}  // namespace eqos

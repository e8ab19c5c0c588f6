#include "eqos/buchberger.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace eqos {

Gf2Poly normal_form(const Gf2Poly& f, const std::vector<Gf2Poly>& basis) {
  Gf2Poly work = f;
  std::vector<Monomial> reduced_terms;

  while (!work.is_zero()) {
    const Monomial& lead = work.leading();
    const Gf2Poly* reducer = nullptr;
    for (const Gf2Poly& g : basis) {
      if (!g.is_zero() && g.leading().divides(lead)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      // move the irreducible leading term to the output; everything left
      // in `work` is strictly smaller
      reduced_terms.push_back(lead);
      std::vector<Monomial> rest(work.terms().begin() + 1, work.terms().end());
      work = Gf2Poly::from_terms(f.e_vars(), std::move(rest));
    } else {
      work += reducer->times_monomial(reducer->leading().divide_into(lead));
    }
  }
  return Gf2Poly::from_terms(f.e_vars(), std::move(reduced_terms));
}

namespace {

Gf2Poly s_polynomial(const Gf2Poly& f, const Gf2Poly& g) {
  Monomial l = f.leading().lcm(g.leading());
  return f.times_monomial(f.leading().divide_into(l)) +
         g.times_monomial(g.leading().divide_into(l));
}

// pair queue entry ordered by (lcm degree, lcm, indices)
struct Pair {
  unsigned lcm_degree;
  Monomial lcm;
  std::size_t i, j;

  bool operator<(const Pair& other) const {
    if (lcm_degree != other.lcm_degree) return lcm_degree < other.lcm_degree;
    if (lcm != other.lcm) return mono_less(lcm, other.lcm);
    if (i != other.i) return i < other.i;
    return j < other.j;
  }
};

}  // namespace

std::vector<Gf2Poly> reduce_basis(std::vector<Gf2Poly> basis) {
  basis.erase(std::remove_if(basis.begin(), basis.end(),
                             [](const Gf2Poly& p) { return p.is_zero(); }),
              basis.end());
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  // minimality: drop anything whose leading monomial another element divides
  std::vector<Gf2Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].leading().divides(basis[i].leading())) {
        // ties between equal leading monomials keep the first
        if (basis[j].leading() == basis[i].leading() && j > i) continue;
        redundant = true;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // tail reduction until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Gf2Poly> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Gf2Poly r = normal_form(minimal[i], others);
      if (r != minimal[i]) {
        changed = true;
        if (r.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
          --i;
        } else {
          minimal[i] = std::move(r);
        }
      }
    }
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

std::vector<Gf2Poly> buchberger(const std::vector<Gf2Poly>& gens) {
  std::vector<Gf2Poly> basis;
  for (const Gf2Poly& g : gens)
    if (!g.is_zero()) basis.push_back(g);
  if (basis.empty()) return {};

  std::set<Pair> queue;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].leading().coprime(basis[j].leading())) continue;  // product criterion
      Monomial l = basis[i].leading().lcm(basis[j].leading());
      queue.insert(Pair{l.degree(), l, i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    Gf2Poly r = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(std::move(r));
    push_pairs(basis.size() - 1);
  }
  return reduce_basis(std::move(basis));
}

bool ideal_equal(const std::vector<Gf2Poly>& gens1, const std::vector<Gf2Poly>& gens2) {
  return buchberger(gens1) == buchberger(gens2);
}

}  // namespace eqos

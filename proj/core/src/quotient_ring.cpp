#include "eqos/quotient_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqos {

std::vector<Monomial> monomials_of_degree(std::size_t e_vars, bool has_x, unsigned degree) {
  std::vector<Monomial> out;
  std::size_t slots = e_vars + (has_x ? 1 : 0);
  Monomial m(e_vars);

  // distribute `degree` over the usable slots
  auto rec = [&](auto&& self, std::size_t slot, unsigned remaining) -> void {
    if (slot + 1 == slots) {
      Monomial filled = m;
      for (unsigned t = 0; t < remaining; ++t)
        filled = filled * (slot == e_vars ? Monomial::x(e_vars)
                                          : Monomial::e(e_vars, static_cast<int>(slot) + 1));
      out.push_back(std::move(filled));
      return;
    }
    for (unsigned take = 0; take <= remaining; ++take) {
      Monomial saved = m;
      for (unsigned t = 0; t < take; ++t) m = m * Monomial::e(e_vars, static_cast<int>(slot) + 1);
      self(self, slot + 1, remaining - take);
      m = std::move(saved);
    }
  };

  if (slots == 0) {
    if (degree == 0) out.push_back(Monomial::one(e_vars));
  } else {
    rec(rec, 0, degree);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return mono_less(b, a);
  });
  return out;
}

QuotientRing::QuotientRing(std::size_t e_vars, bool has_x, const std::vector<Gf2Poly>& gens,
                           unsigned degree_bound)
    : e_vars_(e_vars), has_x_(has_x), degree_bound_(degree_bound) {
  for (const Gf2Poly& g : gens) {
    if (g.e_vars() != e_vars_) throw std::invalid_argument("generator arity mismatch");
    if (!has_x_ && !g.x_free())
      throw std::invalid_argument("generator uses x in an x-free ring: " + g.to_string());
  }
  gb_ = buchberger(gens);

  std_monomials_.resize(degree_bound_ + 1);
  for (unsigned d = 0; d <= degree_bound_; ++d) {
    for (Monomial& m : monomials_of_degree(e_vars_, has_x_, d)) {
      bool reducible = false;
      for (const Gf2Poly& g : gb_) {
        if (g.leading().divides(m)) {
          reducible = true;
          break;
        }
      }
      if (!reducible) std_monomials_[d].push_back(std::move(m));
    }
  }
}

const std::vector<Monomial>& QuotientRing::standard_monomials(unsigned degree) const {
  if (degree > degree_bound_)
    throw std::invalid_argument("degree " + std::to_string(degree) +
                                " beyond the ring's bound " + std::to_string(degree_bound_));
  return std_monomials_[degree];
}

std::vector<std::size_t> QuotientRing::hilbert_function(unsigned d) const {
  if (d > degree_bound_)
    throw std::invalid_argument("Hilbert function requested beyond the degree bound");
  std::vector<std::size_t> hf(d + 1);
  for (unsigned k = 0; k <= d; ++k) hf[k] = std_monomials_[k].size();
  return hf;
}

std::size_t QuotientRing::total_dimension() const {
  std::size_t total = 0;
  for (const auto& monos : std_monomials_) total += monos.size();
  return total;
}

Gf2Vector QuotientRing::coordinates(const Gf2Poly& nf, unsigned degree) const {
  const std::vector<Monomial>& basis = standard_monomials(degree);
  Gf2Vector coords(basis.size());
  for (const Monomial& t : nf.terms()) {
    auto it = std::find(basis.begin(), basis.end(), t);
    if (it == basis.end())
      throw std::logic_error("normal form leaves the degree-" + std::to_string(degree) +
                             " standard basis: " + nf.to_string());
    coords.flip(static_cast<std::size_t>(it - basis.begin()));
  }
  return coords;
}

Gf2Matrix QuotientRing::multiplication_matrix(const Gf2Poly& ell, unsigned k) const {
  if (ell.degree() != 1)
    throw std::invalid_argument("multiplication matrix needs a degree-1 form, got " +
                                ell.to_string());
  if (k + 1 > degree_bound_)
    throw std::invalid_argument("multiplication matrix would exceed the degree bound");

  const std::vector<Monomial>& domain = std_monomials_[k];
  const std::vector<Monomial>& codomain = std_monomials_[k + 1];
  Gf2Matrix m(codomain.size(), domain.size());
  for (std::size_t c = 0; c < domain.size(); ++c) {
    Gf2Poly image = normal_form(ell.times_monomial(domain[c]));
    Gf2Vector col = coordinates(image, k + 1);
    for (std::size_t r = 0; r < codomain.size(); ++r)
      if (col.get(r)) m.set(r, c, true);
  }
  return m;
}

std::vector<Gf2Poly> QuotientRing::all_linear_forms() const {
  std::size_t v = variable_count();
  std::vector<Gf2Poly> vars;
  for (std::size_t i = 1; i <= e_vars_; ++i)
    vars.push_back(Gf2Poly::e(e_vars_, static_cast<int>(i)));
  if (has_x_) vars.push_back(Gf2Poly::x(e_vars_));

  std::vector<Gf2Poly> forms;
  forms.reserve((std::size_t{1} << v) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << v); ++mask) {
    Gf2Poly f = Gf2Poly::zero(e_vars_);
    for (std::size_t b = 0; b < v; ++b)
      if (mask & (std::size_t{1} << b)) f += vars[b];
    forms.push_back(std::move(f));
  }
  return forms;
}

}  // namespace eqos

#include "eqos/linsystem.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>

namespace eqos {

Rational LinearConstraint::value_at(const QVector& point) const {
  Rational v = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * point[i];
  return v;
}

void LinSystem::add_equality(QVector coeffs, Rational constant) {
  if (coeffs.size() != num_vars) throw std::invalid_argument("equality row has wrong arity");
  equalities.push_back({std::move(coeffs), std::move(constant)});
}

void LinSystem::add_strict(QVector coeffs, Rational constant) {
  if (coeffs.size() != num_vars) throw std::invalid_argument("inequality row has wrong arity");
  strict_inequalities.push_back({std::move(coeffs), std::move(constant)});
}

FmBlowupError::FmBlowupError(std::size_t rows)
    : std::runtime_error("Fourier-Motzkin row cap exceeded (" + std::to_string(rows) +
                         " intermediate rows); raise EQOS_MAX_FM_ROWS to override") {}

std::size_t fm_default_max_rows() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("EQOS_MAX_FM_ROWS")) {
      long v = std::atol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{50000};
  }();
  return cap;
}

namespace {

// Working row: an affine functional together with the combination of
// original rows it came from.  Inequality multipliers stay nonnegative by
// construction.
struct Row {
  QVector coeffs;
  Rational constant;
  QVector eq_mults;
  QVector in_mults;

  bool linear_part_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
  }
};

void add_scaled(Row& dst, const Row& src, const Rational& factor) {
  for (std::size_t i = 0; i < dst.coeffs.size(); ++i) dst.coeffs[i] += factor * src.coeffs[i];
  dst.constant += factor * src.constant;
  for (std::size_t i = 0; i < dst.eq_mults.size(); ++i) dst.eq_mults[i] += factor * src.eq_mults[i];
  for (std::size_t i = 0; i < dst.in_mults.size(); ++i) dst.in_mults[i] += factor * src.in_mults[i];
}

// Scale a row by a positive rational so that its leading coefficient (or
// constant) has absolute value 1; used for deduplication.
void normalize_positive(Row& r) {
  Rational lead = 0;
  for (const Rational& c : r.coeffs)
    if (c != 0) {
      lead = abs(c);
      break;
    }
  if (lead == 0) lead = abs(r.constant);
  if (lead == 0 || lead == 1) return;
  Rational inv = Rational(1) / lead;
  for (Rational& c : r.coeffs) c *= inv;
  r.constant *= inv;
  for (Rational& m : r.eq_mults) m *= inv;
  for (Rational& m : r.in_mults) m *= inv;
}

FmRefutation refutation_of(const Row& row) { return FmRefutation{row.eq_mults, row.in_mults}; }

}  // namespace

FmResult fm_feasible(const LinSystem& sys, std::size_t max_rows) {
  const std::size_t n = sys.num_vars;
  const std::size_t ne = sys.equalities.size();
  const std::size_t ni = sys.strict_inequalities.size();

  auto make_row = [&](const LinearConstraint& c, std::size_t eq_idx,
                      std::size_t in_idx) {
    Row r{c.coeffs, c.constant, QVector(ne), QVector(ni)};
    if (eq_idx != std::size_t(-1)) r.eq_mults[eq_idx] = 1;
    if (in_idx != std::size_t(-1)) r.in_mults[in_idx] = 1;
    return r;
  };

  FmResult result;

  // --- eliminate equalities by exact substitution ---
  // pivoted equality rows, each reduced against the earlier ones
  std::vector<std::pair<std::size_t, Row>> substitutions;  // (pivot var, row)
  for (std::size_t e = 0; e < ne; ++e) {
    Row r = make_row(sys.equalities[e], e, std::size_t(-1));
    for (const auto& [var, sub] : substitutions)
      if (r.coeffs[var] != 0) add_scaled(r, sub, -r.coeffs[var] / sub.coeffs[var]);
    if (r.linear_part_zero()) {
      if (r.constant != 0) {
        result.feasible = false;
        result.refutation = refutation_of(r);
        return result;
      }
      continue;  // redundant equality
    }
    std::size_t pivot = 0;
    while (r.coeffs[pivot] == 0) ++pivot;
    substitutions.emplace_back(pivot, std::move(r));
  }

  std::vector<bool> pivoted(n, false);
  for (const auto& [var, sub] : substitutions) pivoted[var] = true;

  std::vector<Row> rows;
  for (std::size_t i = 0; i < ni; ++i) {
    Row r = make_row(sys.strict_inequalities[i], std::size_t(-1), i);
    for (const auto& [var, sub] : substitutions)
      if (r.coeffs[var] != 0) add_scaled(r, sub, -r.coeffs[var] / sub.coeffs[var]);
    rows.push_back(std::move(r));
  }

  // --- Fourier-Motzkin on the remaining variables ---
  // a stage records the rows that mentioned the eliminated variable, for
  // witness back-substitution
  struct Stage {
    std::size_t var;
    std::vector<Row> involved;
  };
  std::vector<Stage> stages;

  auto scan_constants = [&](std::vector<Row>& rs) -> std::optional<FmRefutation> {
    std::vector<Row> kept;
    for (Row& r : rs) {
      if (!r.linear_part_zero()) {
        kept.push_back(std::move(r));
      } else if (r.constant <= 0) {
        return refutation_of(r);  // 0 > c with c <= 0 is impossible
      }
      // constant rows with positive constant are trivially true
    }
    rs = std::move(kept);
    return std::nullopt;
  };

  if (auto ref = scan_constants(rows)) {
    result.feasible = false;
    result.refutation = *ref;
    return result;
  }

  for (;;) {
    // pick the remaining variable minimizing the pos*neg product
    std::size_t best_var = n;
    std::size_t best_score = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (pivoted[v]) continue;
      std::size_t pos = 0, neg = 0;
      for (const Row& r : rows) {
        if (r.coeffs[v] > 0) ++pos;
        if (r.coeffs[v] < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      std::size_t score = pos * neg;
      if (best_var == n || score < best_score) {
        best_var = v;
        best_score = score;
      }
    }
    if (best_var == n) break;  // no variable occurs in any row

    std::vector<Row> untouched, pos_rows, neg_rows;
    for (Row& r : rows) {
      if (r.coeffs[best_var] > 0)
        pos_rows.push_back(std::move(r));
      else if (r.coeffs[best_var] < 0)
        neg_rows.push_back(std::move(r));
      else
        untouched.push_back(std::move(r));
    }

    std::vector<Row> combined = std::move(untouched);
    std::map<std::pair<std::vector<std::string>, std::string>, bool> seen;
    auto row_key = [](const Row& r) {
      std::vector<std::string> cs;
      cs.reserve(r.coeffs.size());
      for (const Rational& c : r.coeffs) cs.push_back(to_string(c));
      return std::make_pair(std::move(cs), to_string(r.constant));
    };
    for (const Row& existing : combined) {
      Row tmp = existing;
      normalize_positive(tmp);
      seen[row_key(tmp)] = true;
    }
    for (const Row& p : pos_rows) {
      for (const Row& q : neg_rows) {
        Row r = p;
        // positive multiples: (-q_v) * p + (p_v) * q kills the variable
        Rational pv = p.coeffs[best_var];
        Rational qv = q.coeffs[best_var];
        for (std::size_t i = 0; i < r.coeffs.size(); ++i)
          r.coeffs[i] = (-qv) * p.coeffs[i] + pv * q.coeffs[i];
        r.constant = (-qv) * p.constant + pv * q.constant;
        for (std::size_t i = 0; i < r.eq_mults.size(); ++i)
          r.eq_mults[i] = (-qv) * p.eq_mults[i] + pv * q.eq_mults[i];
        for (std::size_t i = 0; i < r.in_mults.size(); ++i)
          r.in_mults[i] = (-qv) * p.in_mults[i] + pv * q.in_mults[i];
        normalize_positive(r);
        auto key = row_key(r);
        if (!seen[key]) {
          seen[key] = true;
          combined.push_back(std::move(r));
        }
        if (combined.size() + pos_rows.size() + neg_rows.size() > max_rows)
          throw FmBlowupError(combined.size() + pos_rows.size() + neg_rows.size());
      }
    }

    Stage stage{best_var, {}};
    stage.involved = std::move(pos_rows);
    for (Row& r : neg_rows) stage.involved.push_back(std::move(r));
    stages.push_back(std::move(stage));
    pivoted[best_var] = true;

    rows = std::move(combined);
    if (auto ref = scan_constants(rows)) {
      result.feasible = false;
      result.refutation = *ref;
      return result;
    }
  }

  // --- feasible: reconstruct a witness point ---
  QVector point(n, Rational(0));
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    // every variable later in the elimination order is already assigned
    std::optional<Rational> lower, upper;
    for (const Row& r : it->involved) {
      Rational rest = r.constant;
      for (std::size_t v = 0; v < n; ++v)
        if (v != it->var && r.coeffs[v] != 0) rest += r.coeffs[v] * point[v];
      Rational bound = -rest / r.coeffs[it->var];
      if (r.coeffs[it->var] > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else {
        if (!upper || bound < *upper) upper = bound;
      }
    }
    if (lower && upper)
      point[it->var] = (*lower + *upper) / 2;
    else if (lower)
      point[it->var] = *lower + 1;
    else if (upper)
      point[it->var] = *upper - 1;
    else
      point[it->var] = 0;
  }
  for (auto it = substitutions.rbegin(); it != substitutions.rend(); ++it) {
    const auto& [var, sub] = *it;
    Rational rest = sub.constant;
    for (std::size_t v = 0; v < n; ++v)
      if (v != var && sub.coeffs[v] != 0) rest += sub.coeffs[v] * point[v];
    point[var] = -rest / sub.coeffs[var];
  }

  result.feasible = true;
  result.witness = std::move(point);
  return result;
}

bool verify_witness(const LinSystem& sys, const QVector& point) {
  if (point.size() != sys.num_vars) return false;
  for (const auto& eq : sys.equalities)
    if (eq.value_at(point) != 0) return false;
  for (const auto& in : sys.strict_inequalities)
    if (in.value_at(point) <= 0) return false;
  return true;
}

bool verify_refutation(const LinSystem& sys, const FmRefutation& ref) {
  if (ref.equality_multipliers.size() != sys.equalities.size()) return false;
  if (ref.inequality_multipliers.size() != sys.strict_inequalities.size()) return false;

  bool any_strict = false;
  for (const Rational& m : ref.inequality_multipliers) {
    if (m < 0) return false;
    if (m > 0) any_strict = true;
  }

  QVector combo(sys.num_vars, Rational(0));
  Rational constant = 0;
  for (std::size_t e = 0; e < sys.equalities.size(); ++e) {
    const Rational& m = ref.equality_multipliers[e];
    if (m == 0) continue;
    for (std::size_t v = 0; v < sys.num_vars; ++v) combo[v] += m * sys.equalities[e].coeffs[v];
    constant += m * sys.equalities[e].constant;
  }
  for (std::size_t i = 0; i < sys.strict_inequalities.size(); ++i) {
    const Rational& m = ref.inequality_multipliers[i];
    if (m == 0) continue;
    for (std::size_t v = 0; v < sys.num_vars; ++v)
      combo[v] += m * sys.strict_inequalities[i].coeffs[v];
    constant += m * sys.strict_inequalities[i].constant;
  }

  for (const Rational& c : combo)
    if (c != 0) return false;

  // with a strict row in play the combination must claim 0 > constant >= 0;
  // with equalities only it must claim 0 = constant != 0
  if (any_strict) return constant <= 0;
  return constant != 0;
}

}  // namespace eqos

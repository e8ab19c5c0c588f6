#include "eqos/gf2_matrix.hpp"

#include <stdexcept>

namespace eqos {

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Vector Gf2Matrix::apply(const Gf2Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Gf2Matrix::apply size mismatch");
  Gf2Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    // parity of <row, v>
    bool acc = false;
    for (std::size_t c = 0; c < cols_; ++c)
      if (row_data_[r].get(c) && v.get(c)) acc = !acc;
    out.set(r, acc);
  }
  return out;
}

namespace {

// Row echelon, pivoting columns left to right.  Returns pivot column of
// each eliminated row, in order.
std::vector<std::size_t> echelonize(Gf2Matrix& a) {
  std::vector<std::size_t> pivot_cols;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < a.cols() && next_row < a.rows(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < a.rows() && !a.get(pivot, col)) ++pivot;
    if (pivot == a.rows()) continue;
    std::swap(a.row(next_row), a.row(pivot));
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (r != next_row && a.get(r, col)) a.row(r) ^= a.row(next_row);
    pivot_cols.push_back(col);
    ++next_row;
  }
  return pivot_cols;
}

}  // namespace

std::size_t Gf2Matrix::rank() const {
  Gf2Matrix a = *this;
  return echelonize(a).size();
}

std::vector<Gf2Vector> gf2_kernel_basis(const Gf2Matrix& m) {
  Gf2Matrix a = m;
  std::vector<std::size_t> pivot_cols = echelonize(a);

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<Gf2Vector> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Gf2Vector v(m.cols());
    v.set(free_col, true);
    // pivot rows are in RREF: row r has its pivot at pivot_cols[r]
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
      if (a.get(r, free_col)) v.set(pivot_cols[r], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace eqos

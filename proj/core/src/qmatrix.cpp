#include "eqos/qmatrix.hpp"

#include <stdexcept>

namespace eqos {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) return QMatrix(0, 0);
  QMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged rows in QMatrix::from_rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::size_t qrank(const QMatrix& m) {
  QMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    // first nonzero entry in this column at or below `rank`
    std::size_t pivot = rank;
    while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t c = col; c < a.cols(); ++c) std::swap(a.at(rank, c), a.at(pivot, c));
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (a.at(r, col) == 0) continue;
      Rational f = a.at(r, col) / a.at(rank, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace eqos

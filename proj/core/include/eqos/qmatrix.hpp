#ifndef EQOS_QMATRIX_HPP
#define EQOS_QMATRIX_HPP

#include <cstddef>
#include <vector>

#include "eqos/rational.hpp"

namespace eqos {

/// Dense rational matrix, row-major.  Immutable value type once filled;
/// rank is computed by exact Gaussian elimination (deterministic
/// left-to-right pivoting), so results are reproducible.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  QMatrix transposed() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> entries_;
};

/// Rank over the rationals, exact.
std::size_t qrank(const QMatrix& m);

}  // namespace eqos

#endif

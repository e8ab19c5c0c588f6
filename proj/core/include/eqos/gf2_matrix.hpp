#ifndef EQOS_GF2_MATRIX_HPP
#define EQOS_GF2_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace eqos {

/// Bit vector over GF(2), packed into 64-bit words.
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t size) : size_(size), words_((size + 63) / 64) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void operator^=(const Gf2Vector& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  }
  bool is_zero() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool operator==(const Gf2Vector&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix with word-packed rows.  Elimination always pivots
/// left-to-right, so ranks, kernels, and reduced forms are reproducible.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), row_data_(rows, Gf2Vector(cols)) {}

  static Gf2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return row_data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { row_data_[r].set(c, v); }

  const Gf2Vector& row(std::size_t r) const { return row_data_[r]; }
  Gf2Vector& row(std::size_t r) { return row_data_[r]; }

  /// m * v over GF(2); v.size() must equal cols().
  Gf2Vector apply(const Gf2Vector& v) const;

  std::size_t rank() const;
  std::size_t nullity() const { return cols_ - rank(); }

  bool operator==(const Gf2Matrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Gf2Vector> row_data_;
};

/// Basis of the right kernel {v : m v = 0}.  Size is cols - rank; basis
/// vectors come out in free-column order (one per non-pivot column).
std::vector<Gf2Vector> gf2_kernel_basis(const Gf2Matrix& m);

/// Random invertible matrix over GF(2) (rejection sampling); used by the
/// isomorphism-invariance tests.  `rng` is any callable returning uint64.
template <typename Rng>
Gf2Matrix random_invertible_gf2(std::size_t n, Rng&& rng) {
  for (;;) {
    Gf2Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng() & 1);
    if (m.rank() == n) return m;
  }
}

}  // namespace eqos

#endif

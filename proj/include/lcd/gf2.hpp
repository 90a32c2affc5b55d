#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcd {

/// Dense matrix over GF(2) with bit-packed rows.
///
/// Rows are stored as little-endian 64-bit words: column c of a row lives in
/// bit (c % 64) of word (c / 64). Padding bits beyond cols() are always zero.
/// A matrix with zero rows is legal and represents the zero code.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);

  static BinaryMatrix identity(std::size_t n);
  static BinaryMatrix all_ones(std::size_t rows, std::size_t cols);
  /// Builds a matrix from rows written as strings over {0,1}; all rows must
  /// have the same length. `cols` is only used when `rows` is empty.
  static BinaryMatrix from_strings(const std::vector<std::string>& rows, std::size_t cols = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value) {
    auto& w = data_[r * words_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = value ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * words_, words_}; }
  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * words_, words_}; }

  /// row(dst) += row(src)
  void add_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  void append_row(std::span<const std::uint64_t> words);
  void append_row_string(std::string_view bits);
  bool row_is_zero(std::size_t r) const;
  std::size_t row_weight(std::size_t r) const;

  BinaryMatrix transpose() const;
  /// Rows [first, first + count).
  BinaryMatrix slice_rows(std::size_t first, std::size_t count) const;
  /// Matrix with column `c` removed.
  BinaryMatrix delete_column(std::size_t c) const;
  /// (left | right), both with the same number of rows.
  static BinaryMatrix hconcat(const BinaryMatrix& left, const BinaryMatrix& right);
  /// Rows of `top` followed by rows of `bottom`.
  static BinaryMatrix vconcat(const BinaryMatrix& top, const BinaryMatrix& bottom);

  /// One string of '0'/'1' per row.
  std::vector<std::string> to_strings() const;

  bool operator==(const BinaryMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

struct RrefResult {
  BinaryMatrix matrix;  ///< same shape as the input, zero rows at the bottom
  std::vector<std::size_t> pivots;
};

RrefResult rref(const BinaryMatrix& m);
std::size_t rank(const BinaryMatrix& m);
BinaryMatrix mat_mul(const BinaryMatrix& a, const BinaryMatrix& b);
/// Throws DimensionError for non-square input.
bool is_nonsingular(const BinaryMatrix& m);
/// Basis of {x : M x^T = 0}; has cols - rank(M) rows.
BinaryMatrix nullspace_basis(const BinaryMatrix& m);

/// Mod-2 inner product of two packed rows of equal width.
bool dot(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

}  // namespace lcd

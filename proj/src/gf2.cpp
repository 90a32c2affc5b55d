#include "lcd/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "lcd/errors.hpp"

namespace lcd {

namespace {

std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

}  // namespace

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BinaryMatrix BinaryMatrix::all_ones(std::size_t rows, std::size_t cols) {
  BinaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, true);
  return m;
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  BinaryMatrix m(0, cols);
  for (const auto& r : rows) m.append_row_string(r);
  return m;
}

void BinaryMatrix::add_row(std::size_t dst, std::size_t src) {
  std::uint64_t* d = data_.data() + dst * words_;
  const std::uint64_t* s = data_.data() + src * words_;
  for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * words_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * words_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * words_));
}

void BinaryMatrix::append_row(std::span<const std::uint64_t> words) {
  if (words.size() != words_) throw DimensionError("append_row: word count mismatch");
  data_.insert(data_.end(), words.begin(), words.end());
  ++rows_;
}

void BinaryMatrix::append_row_string(std::string_view bits) {
  if (bits.size() != cols_)
    throw DimensionError("row has " + std::to_string(bits.size()) + " entries, expected " +
                         std::to_string(cols_));
  data_.resize(data_.size() + words_, 0);
  ++rows_;
  for (std::size_t c = 0; c < bits.size(); ++c) {
    if (bits[c] == '1') {
      set(rows_ - 1, c, true);
    } else if (bits[c] != '0') {
      throw DimensionError(std::string("illegal character '") + bits[c] + "' in binary row");
    }
  }
}

bool BinaryMatrix::row_is_zero(std::size_t r) const {
  const auto words = row(r);
  return std::all_of(words.begin(), words.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const {
  std::size_t weight = 0;
  for (const auto w : row(r)) weight += static_cast<std::size_t>(std::popcount(w));
  return weight;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

BinaryMatrix BinaryMatrix::slice_rows(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw DimensionError("slice_rows: range out of bounds");
  BinaryMatrix out(count, cols_);
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(first * words_), count * words_,
              out.data_.begin());
  return out;
}

BinaryMatrix BinaryMatrix::delete_column(std::size_t c) const {
  if (c >= cols_) throw DimensionError("delete_column: column out of range");
  BinaryMatrix out(rows_, cols_ - 1);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0, o = 0; j < cols_; ++j) {
      if (j == c) continue;
      if (get(r, j)) out.set(r, o, true);
      ++o;
    }
  return out;
}

BinaryMatrix BinaryMatrix::hconcat(const BinaryMatrix& left, const BinaryMatrix& right) {
  if (left.rows() != right.rows()) throw DimensionError("hconcat: row count mismatch");
  BinaryMatrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c)
      if (left.get(r, c)) out.set(r, c, true);
    for (std::size_t c = 0; c < right.cols(); ++c)
      if (right.get(r, c)) out.set(r, left.cols() + c, true);
  }
  return out;
}

BinaryMatrix BinaryMatrix::vconcat(const BinaryMatrix& top, const BinaryMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw DimensionError("vconcat: column count mismatch");
  BinaryMatrix out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

std::vector<std::string> BinaryMatrix::to_strings() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) out[r][c] = '1';
  return out;
}

RrefResult rref(const BinaryMatrix& m) {
  RrefResult result{m, {}};
  BinaryMatrix& a = result.matrix;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < a.rows() && !a.get(r, c)) ++r;
    if (r == a.rows()) continue;
    a.swap_rows(pivot_row, r);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != pivot_row && a.get(i, c)) a.add_row(i, pivot_row);
    result.pivots.push_back(c);
    ++pivot_row;
  }
  return result;
}

std::size_t rank(const BinaryMatrix& m) { return rref(m).pivots.size(); }

BinaryMatrix mat_mul(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  BinaryMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a.get(i, j)) continue;
      const auto src = b.row(j);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

bool is_nonsingular(const BinaryMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionError("is_nonsingular: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  return rank(m) == m.rows();
}

BinaryMatrix nullspace_basis(const BinaryMatrix& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  BinaryMatrix basis(0, m.cols());
  std::vector<std::uint64_t> v(basis.words_per_row());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[f / 64] |= std::uint64_t{1} << (f % 64);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (reduced.get(r, f)) v[pivots[r] / 64] |= std::uint64_t{1} << (pivots[r] % 64);
    basis.append_row(v);
  }
  return basis;
}

bool dot(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < a.size(); ++w) acc ^= a[w] & b[w];
  return std::popcount(acc) & 1;
}

}  // namespace lcd

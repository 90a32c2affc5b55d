#include "lcd/code.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "lcd/errors.hpp"

namespace lcd {

namespace {

void check_enumerable(std::size_t k) {
  if (k > kEnumerationCap)
    throw ScaleGuardError("codeword enumeration limited to k <= " +
                          std::to_string(kEnumerationCap) + " (got k = " + std::to_string(k) + ")");
}

// Calls visit(weight) for every nonzero codeword, walking the code in Gray-code order.
template <typename Visit>
void for_each_nonzero_weight(const BinaryMatrix& g, Visit&& visit) {
  const std::size_t k = g.rows();
  const std::uint64_t count = std::uint64_t{1} << k;
  if (g.words_per_row() <= 1) {
    std::vector<std::uint64_t> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = g.cols() ? g.row(i)[0] : 0;
    std::uint64_t word = 0;
    for (std::uint64_t step = 1; step < count; ++step) {
      word ^= rows[static_cast<std::size_t>(std::countr_zero(step))];
      visit(static_cast<std::size_t>(std::popcount(word)));
    }
    return;
  }
  std::vector<std::uint64_t> word(g.words_per_row(), 0);
  for (std::uint64_t step = 1; step < count; ++step) {
    const auto row = g.row(static_cast<std::size_t>(std::countr_zero(step)));
    std::size_t weight = 0;
    for (std::size_t w = 0; w < word.size(); ++w) {
      word[w] ^= row[w];
      weight += static_cast<std::size_t>(std::popcount(word[w]));
    }
    visit(weight);
  }
}

}  // namespace

LinearCode::LinearCode(const BinaryMatrix& generator) {
  auto reduced = rref(generator);
  if (reduced.pivots.size() != generator.rows())
    throw PreconditionError("generator matrix is rank deficient (rank " +
                            std::to_string(reduced.pivots.size()) + " < " +
                            std::to_string(generator.rows()) + " rows)");
  generator_ = std::move(reduced.matrix);
  pivots_ = std::move(reduced.pivots);
}

LinearCode LinearCode::span_of(const BinaryMatrix& rows) {
  auto reduced = rref(rows);
  LinearCode code;
  code.generator_ = reduced.matrix.slice_rows(0, reduced.pivots.size());
  code.pivots_ = std::move(reduced.pivots);
  return code;
}

LinearCode LinearCode::zero(std::size_t n) { return LinearCode(BinaryMatrix(0, n)); }

LinearCode LinearCode::full_space(std::size_t n) { return LinearCode(BinaryMatrix::identity(n)); }

LinearCode LinearCode::repetition(std::size_t n) { return LinearCode(BinaryMatrix::all_ones(1, n)); }

bool LinearCode::contains(std::span<const std::uint64_t> v) const {
  std::vector<std::uint64_t> rest(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if ((rest[p / 64] >> (p % 64)) & 1u) {
      const auto row = generator_.row(r);
      for (std::size_t w = 0; w < rest.size(); ++w) rest[w] ^= row[w];
    }
  }
  return std::all_of(rest.begin(), rest.end(), [](std::uint64_t w) { return w == 0; });
}

LinearCode dual(const LinearCode& code) { return LinearCode(nullspace_basis(code.generator())); }

std::size_t min_weight(const LinearCode& code) {
  if (code.dimension() == 0) throw DegenerateCode("the zero code has no minimum weight");
  check_enumerable(code.dimension());
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_nonzero_weight(code.generator(), [&](std::size_t w) { best = std::min(best, w); });
  return best;
}

std::optional<std::size_t> dual_distance(const LinearCode& code) {
  if (code.dimension() == code.length()) return std::nullopt;
  return min_weight(dual(code));
}

std::vector<std::uint64_t> weight_enumerator(const LinearCode& code) {
  check_enumerable(code.dimension());
  std::vector<std::uint64_t> counts(code.length() + 1, 0);
  counts[0] = 1;
  for_each_nonzero_weight(code.generator(), [&](std::size_t w) { ++counts[w]; });
  return counts;
}

BinaryMatrix gram_matrix(const LinearCode& code) {
  const auto& g = code.generator();
  return mat_mul(g, g.transpose());
}

std::size_t hull_dim(const LinearCode& code) { return code.dimension() - rank(gram_matrix(code)); }

LinearCode puncture(const LinearCode& code, std::size_t coordinate) {
  if (coordinate >= code.length())
    throw PreconditionError("puncture: coordinate " + std::to_string(coordinate) +
                            " out of range for length " + std::to_string(code.length()));
  return LinearCode::span_of(code.generator().delete_column(coordinate));
}

LinearCode shorten(const LinearCode& code, std::size_t coordinate) {
  if (coordinate >= code.length())
    throw PreconditionError("shorten: coordinate " + std::to_string(coordinate) +
                            " out of range for length " + std::to_string(code.length()));
  BinaryMatrix g = code.generator();
  std::size_t source = g.rows();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    if (!g.get(r, coordinate)) continue;
    if (source == g.rows()) {
      source = r;
    } else {
      g.add_row(r, source);
    }
  }
  if (source == g.rows()) return LinearCode::span_of(g.delete_column(coordinate));
  BinaryMatrix kept(0, g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r)
    if (r != source) kept.append_row(g.row(r));
  return LinearCode::span_of(kept.delete_column(coordinate));
}

ParityFlags parity_flags(const LinearCode& code) {
  ParityFlags flags;
  const auto& g = code.generator();
  flags.even_like = true;
  for (std::size_t r = 0; r < g.rows(); ++r)
    if (g.row_weight(r) % 2) flags.even_like = false;
  const BinaryMatrix ones = BinaryMatrix::all_ones(1, code.length());
  flags.has_all_ones = code.length() > 0 && code.contains(ones.row(0));
  return flags;
}

CodeMetrics compute_metrics(const LinearCode& code) {
  CodeMetrics m;
  if (code.dimension() > 0) m.d = min_weight(code);
  m.d_dual = dual_distance(code);
  m.hull_dim = hull_dim(code);
  m.weight_enumerator = weight_enumerator(code);
  const auto flags = parity_flags(code);
  m.is_even_like = flags.even_like;
  m.has_all_ones = flags.has_all_ones;
  return m;
}

std::vector<std::uint64_t> column_values(const LinearCode& code) {
  const auto& g = code.generator();
  if (g.rows() > 64) throw ScaleGuardError("column_values: dimension above 64");
  std::vector<std::uint64_t> cols(g.cols(), 0);
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (g.get(r, c)) cols[c] |= std::uint64_t{1} << r;
  return cols;
}

LinearCode code_from_columns(std::size_t k, const std::vector<std::uint64_t>& columns) {
  BinaryMatrix g(k, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < k; ++r)
      if ((columns[c] >> r) & 1u) g.set(r, c, true);
  return LinearCode::span_of(g);
}

}  // namespace lcd

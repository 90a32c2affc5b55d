#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lcd/gf2.hpp"

namespace lcd {

/// Largest dimension for which codewords are enumerated exhaustively.
inline constexpr std::size_t kEnumerationCap = 28;

/// A binary linear [n, k] code. The generator is kept in reduced row echelon
/// form, so two codes compare equal exactly when their row spaces coincide.
class LinearCode {
 public:
  /// Throws PreconditionError when `generator` is rank deficient.
  explicit LinearCode(const BinaryMatrix& generator);

  /// The code spanned by the rows of `rows`; dependent rows are dropped.
  static LinearCode span_of(const BinaryMatrix& rows);
  static LinearCode zero(std::size_t n);
  static LinearCode full_space(std::size_t n);
  static LinearCode repetition(std::size_t n);

  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  const BinaryMatrix& generator() const noexcept { return generator_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Whether the packed vector `v` (length() bits) is a codeword.
  bool contains(std::span<const std::uint64_t> v) const;

  bool operator==(const LinearCode& other) const { return generator_ == other.generator_; }

 private:
  LinearCode() = default;
  BinaryMatrix generator_;
  std::vector<std::size_t> pivots_;
};

struct ParityFlags {
  bool even_like = false;
  bool has_all_ones = false;
};

struct CodeMetrics {
  std::optional<std::size_t> d;       ///< absent for the zero code
  std::optional<std::size_t> d_dual;  ///< absent when the dual is the zero code
  std::size_t hull_dim = 0;
  std::vector<std::uint64_t> weight_enumerator;  ///< A_0 .. A_n
  bool is_even_like = false;
  bool has_all_ones = false;

  bool is_lcd() const noexcept { return hull_dim == 0; }
  bool operator==(const CodeMetrics&) const = default;
};

LinearCode dual(const LinearCode& code);
/// Minimum nonzero weight by exhaustive enumeration.
/// Throws DegenerateCode for k = 0 and ScaleGuardError for k > kEnumerationCap.
std::size_t min_weight(const LinearCode& code);
/// Minimum weight of the dual; nullopt when the dual is the zero code (k = n).
std::optional<std::size_t> dual_distance(const LinearCode& code);
std::vector<std::uint64_t> weight_enumerator(const LinearCode& code);
/// dim(C ∩ C^⊥) = k - rank(G G^T).
std::size_t hull_dim(const LinearCode& code);
BinaryMatrix gram_matrix(const LinearCode& code);
LinearCode puncture(const LinearCode& code, std::size_t coordinate);
LinearCode shorten(const LinearCode& code, std::size_t coordinate);
ParityFlags parity_flags(const LinearCode& code);
CodeMetrics compute_metrics(const LinearCode& code);

/// Column j of the generator as a k-bit integer (row i -> bit i). Requires k <= 64.
std::vector<std::uint64_t> column_values(const LinearCode& code);
/// The code generated by the k x columns.size() matrix whose columns are given
/// as k-bit integers (row i -> bit i); dependent rows are dropped.
LinearCode code_from_columns(std::size_t k, const std::vector<std::uint64_t>& columns);

}  // namespace lcd

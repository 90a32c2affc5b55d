#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lcd/code.hpp"
#include "lcd/gf2.hpp"

namespace lcd {

/// Massey's criterion: G G^T nonsingular. Throws DegenerateCode for k = 0.
bool is_lcd(const LinearCode& code);

/// C ∩ C^⊥ = {0}. Unlike is_lcd this accepts the zero code (which qualifies).
inline bool is_lcd_or_zero(const LinearCode& code) { return hull_dim(code) == 0; }

enum class BasisKind { Orthonormal, Hyperbolic };

/// A basis with a prescribed Gram matrix. Orthonormal: c_i . c_j = [i == j].
/// Hyperbolic: rows come in pairs (c_i, c'_i) with c_i . c'_i = 1 and every
/// other product (including self products) zero.
struct StructuredBasis {
  BasisKind kind;
  BinaryMatrix rows;
};

/// Checks the Gram-matrix conditions of `basis` (not its span).
bool satisfies_invariants(const StructuredBasis& basis);

/// Requires an odd-like LCD code.
StructuredBasis orthonormal_basis(const LinearCode& code);
/// Requires an even-like LCD code (its dimension is then even).
StructuredBasis hyperbolic_basis(const LinearCode& code);

/// Prepends a 1 to every vector of a structured basis. For an LCD code of even
/// dimension the result is an LCD [n+1, k] code of the opposite parity class
/// with minimum weight d or d+1.
LinearCode extend_parity(const LinearCode& code);

/// The code generated by (v^T | v^T | G), where G is the stored generator of
/// `code` and v has k bits. The Gram matrix is unchanged.
LinearCode duplicate_column(const LinearCode& code, const std::vector<bool>& v);

struct SplitWitness {
  std::size_t coordinate;
  bool shortened_is_lcd;
  bool punctured_is_lcd;
};

/// LCD-ness of the shortened and punctured codes at `coordinate`. Requires an
/// LCD code with d >= 2 and d^⊥ >= 2; exactly one flag is then set.
SplitWitness split_witness(const LinearCode& code, std::size_t coordinate);

struct OddLikeWitnesses {
  std::vector<std::size_t> shorten_coords;   ///< ascending
  std::vector<std::size_t> puncture_coords;  ///< ascending
};

/// Coordinates whose shortened / punctured codes are LCD, for an odd-like LCD code.
OddLikeWitnesses odd_like_witnesses(const LinearCode& code);

/// Verifies that every punctured code of an even-like LCD code is LCD.
bool even_punctured_all_lcd(const LinearCode& code);

/// An even-like LCD [n, k] code with dual distance >= 2. Requires k even,
/// n > k, and n odd when k = 2.
LinearCode even_like_lcd_code(std::size_t n, std::size_t k);
/// An odd-like LCD [n, k] code with dual distance >= 2; requires k >= 2,
/// n >= k + 2. None exists for k = 2 with n odd (every LCD [odd, 2] code
/// without zero columns is even-like), so that case throws.
LinearCode odd_like_lcd_code(std::size_t n, std::size_t k);

}  // namespace lcd

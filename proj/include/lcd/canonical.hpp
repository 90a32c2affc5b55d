#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lcd/code.hpp"
#include "lcd/gf2.hpp"

namespace lcd {

/// Canonical representative of a permutation-equivalence class of codes.
///
/// The certificate is the comparison key: two codes are equivalent exactly
/// when their certificates are byte-identical. It encodes n and k as 16-bit
/// big-endian integers followed by the canonical matrix, row-major, packed
/// most-significant bit first.
struct CanonicalForm {
  BinaryMatrix matrix;
  std::string certificate;

  bool operator==(const CanonicalForm& other) const { return certificate == other.certificate; }
  auto operator<=>(const CanonicalForm& other) const { return certificate <=> other.certificate; }
};

/// Canonical form together with the automorphism orbits found while computing it.
struct CanonicalLabeling {
  CanonicalForm form;
  /// For each input column, the smallest input column index in its orbit
  /// under the automorphism group of the code.
  std::vector<std::size_t> column_orbit;
  /// For each input column, its value (row i -> bit i) in the canonical matrix.
  std::vector<std::uint64_t> column_image;
  /// Number of search leaves visited; a rough cost measure.
  std::size_t leaves = 0;
};

/// Canonical labeling of the code whose k x n generator has the given columns
/// (row i -> bit i). The columns must span GF(2)^k; k <= 64.
CanonicalLabeling canonical_labeling(std::size_t k, std::span<const std::uint64_t> columns);

CanonicalForm canonical_form(const LinearCode& code);

/// Permutation equivalence; codes with different (n, k) are never equivalent.
bool are_equivalent(const LinearCode& a, const LinearCode& b);

/// Serialization used for certificates.
std::string certificate_of(const BinaryMatrix& matrix);

}  // namespace lcd

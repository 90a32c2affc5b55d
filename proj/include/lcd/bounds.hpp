#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcd/errors.hpp"

namespace lcd {

/// Exact d_LCD(n, k) where a closed formula is known, otherwise nullopt.
/// Requires 1 <= k <= n.
std::optional<std::size_t> formula_dlcd(std::size_t n, std::size_t k);

/// Largest d with sum_{i<k} ceil(d / 2^i) <= n.
std::size_t griesmer_upper(std::size_t n, std::size_t k);

struct CellRef {
  std::size_t n = 0;
  std::size_t k = 0;
  bool operator==(const CellRef&) const = default;
};

enum class BoundSide { Lower, Upper };

/// One tightening of a cell endpoint.
struct Provenance {
  BoundSide side = BoundSide::Lower;
  std::size_t value = 0;
  std::string rule;
  std::vector<CellRef> antecedents;
};

struct BoundsCell {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t lower = 1;
  std::size_t upper = 1;
  /// Bit d set: an LCD [n, k] code of minimum distance exactly d is known.
  std::uint64_t witnesses = 0;
  std::vector<Provenance> provenance;

  bool exact() const noexcept { return lower == upper; }
  /// Latest record for the given side, nullptr if none.
  const Provenance* last(BoundSide side) const;
};

/// An exact value or a ceiling for one cell, as read from a seeds/ceilings file.
struct CellValue {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t value = 0;
};

inline constexpr std::size_t kBoundsMaxLength = 64;

class BoundsTable {
 public:
  explicit BoundsTable(std::size_t n_max = 0);

  std::size_t n_max() const noexcept { return n_max_; }
  bool contains(std::size_t n, std::size_t k) const noexcept {
    return k >= 1 && k <= n && n <= n_max_;
  }
  BoundsCell& at(std::size_t n, std::size_t k);
  const BoundsCell& at(std::size_t n, std::size_t k) const;
  const std::vector<BoundsCell>& cells() const noexcept { return cells_; }

  /// Raise lower / lower upper; returns whether the cell changed.
  bool raise_lower(std::size_t n, std::size_t k, std::size_t value, std::string rule,
                   std::vector<CellRef> antecedents = {});
  bool lower_upper(std::size_t n, std::size_t k, std::size_t value, std::string rule,
                   std::vector<CellRef> antecedents = {});
  bool add_witness(std::size_t n, std::size_t k, std::size_t d);

  /// Human-readable chain of the records that led to the endpoints of (n, k).
  std::string provenance_chain(std::size_t n, std::size_t k) const;

 private:
  std::size_t index(std::size_t n, std::size_t k) const;
  void check(std::size_t n, std::size_t k) const;

  std::size_t n_max_;
  std::vector<BoundsCell> cells_;
};

/// lower > upper somewhere; the message carries the provenance chain.
class BoundsContradiction : public Error {
 public:
  BoundsContradiction(CellRef cell, const std::string& message) : Error(message), cell_(cell) {}
  CellRef cell() const noexcept { return cell_; }

 private:
  CellRef cell_;
};

/// Applies every rule until nothing changes. Never widens a cell.
BoundsTable propagate(BoundsTable table);

/// Initial table (lower 1, upper Griesmer or the given ceiling), formulas,
/// seeds, then propagate. Requires n_max <= 64.
BoundsTable build_table(std::size_t n_max, const std::vector<CellValue>& seeds = {},
                        const std::vector<CellValue>& ceilings = {});

/// One entry of a published interval table.
struct ReferenceEntry {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::string annotation;
};

}  // namespace lcd

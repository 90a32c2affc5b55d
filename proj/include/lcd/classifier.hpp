#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lcd/canonical.hpp"
#include "lcd/code.hpp"

namespace lcd {

/// Parameters of an exhaustive search for LCD [n, k, >= d_min] codes with
/// dual distance >= d_dual_min.
struct SearchSpec {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d_min = 1;
  std::size_t d_dual_min = 1;
  /// Entry m-1 caps dim(hull) of the intermediate [n-k+m, m] codes; the last
  /// entry must be 0. Empty means the default k - m, which every shortening
  /// chain of an LCD code respects.
  std::vector<std::size_t> max_hull_schedule;

  std::vector<std::size_t> effective_schedule() const;
};

enum class IsomorphRejection {
  /// Keep one representative per certificate at every level.
  LevelDedup,
  /// Accept a child only if its new coordinate lies in the automorphism orbit
  /// of its canonical parent coordinate; only children of the same parent are
  /// compared against each other.
  CanonicalAugmentation,
};

struct ClassifyOptions {
  unsigned threads = 1;
  IsomorphRejection strategy = IsomorphRejection::CanonicalAugmentation;
  /// Lift the desk-scale guard (n <= 28, k <= 14).
  bool allow_large = false;
};

struct ClassifyStats {
  /// Inequivalent codes kept at level m = 1..k (index m-1).
  std::vector<std::size_t> level_counts;
  /// Children examined at each level before isomorph rejection.
  std::vector<std::size_t> candidates;
};

struct ClassificationRecord {
  CanonicalForm canonical;
  CodeMetrics metrics;

  LinearCode code() const { return LinearCode(canonical.matrix); }
};

inline constexpr std::size_t kDeskMaxLength = 28;
inline constexpr std::size_t kDeskMaxDimension = 14;

/// All inequivalent LCD codes matching `spec`, sorted by certificate.
/// Throws ScaleGuardError outside desk scale unless options.allow_large.
std::vector<ClassificationRecord> classify(const SearchSpec& spec, const ClassifyOptions& options = {},
                                           ClassifyStats* stats = nullptr);

using CodePredicate = std::function<bool(const LinearCode&)>;

/// LCD, minimum weight >= d_min and dual distance >= d_dual_min.
CodePredicate lcd_predicate(std::size_t d_min, std::size_t d_dual_min);

/// Number of k-dimensional subspaces of GF(2)^n, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k);

inline constexpr std::uint64_t kOracleMaxCodes = 10'000'000;

/// Brute force: visits every [n, k] code once (one rref generator per pivot
/// pattern and free-entry assignment), keeps those satisfying `predicate`
/// and deduplicates them by canonical form. `visited`, when given, receives
/// the number of codes examined.
std::vector<ClassificationRecord> oracle_enumerate(std::size_t n, std::size_t k,
                                                   const CodePredicate& predicate,
                                                   std::uint64_t* visited = nullptr,
                                                   std::uint64_t max_codes = kOracleMaxCodes);

/// Largest d admitting an LCD [n, k, d] code, searched downward from the
/// Griesmer bound.
std::size_t d_lcd_exact(std::size_t n, std::size_t k, const ClassifyOptions& options = {});

}  // namespace lcd

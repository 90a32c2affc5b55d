#include "lcd/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "lcd/bounds.hpp"
#include "lcd/errors.hpp"
#include "lcd/lcd_theory.hpp"

namespace lcd {

namespace {

using Columns = std::vector<std::uint64_t>;

// Rank of the Gram matrix of the `dim`-row code with the given columns.
std::size_t gram_rank(std::size_t dim, const Columns& columns) {
  std::vector<std::uint64_t> rows(dim, 0);
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::uint64_t c = columns[j]; c; c &= c - 1)
      rows[static_cast<std::size_t>(std::countr_zero(c))] |= std::uint64_t{1} << j;
  std::vector<std::uint64_t> gram(dim, 0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j)
      if (std::popcount(rows[i] & rows[j]) & 1) {
        gram[i] |= std::uint64_t{1} << j;
        gram[j] |= std::uint64_t{1} << i;
      }
  std::size_t rank = 0;
  for (std::size_t bit = 0; bit < dim; ++bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    std::size_t r = rank;
    while (r < dim && !(gram[r] & mask)) ++r;
    if (r == dim) continue;
    std::swap(gram[rank], gram[r]);
    for (std::size_t i = 0; i < dim; ++i)
      if (i != rank && (gram[i] & mask)) gram[i] ^= gram[rank];
    ++rank;
  }
  return rank;
}

std::size_t hull_of(std::size_t dim, const Columns& columns) { return dim - gram_rank(dim, columns); }

// Columns of the code shortened at a coordinate whose column is `p` (nonzero),
// with that coordinate removed. Rows are re-indexed to skip the lowest bit of p.
Columns shortened_columns(const Columns& columns, std::size_t skip, std::uint64_t p) {
  const int t = std::countr_zero(p);
  const std::uint64_t low = (std::uint64_t{1} << t) - 1;
  Columns out;
  out.reserve(columns.size() - 1);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (j == skip) continue;
    std::uint64_t c = columns[j];
    if ((c >> t) & 1u) c ^= p;  // c_i ^= p_i * c_t for every row i
    out.push_back((c & low) | ((c >> (t + 1)) << t));
  }
  return out;
}

struct Extension {
  std::string certificate;
  Columns columns;  // canonical columns
};

struct Level {
  std::size_t dim = 0;
  std::vector<Extension> codes;
};

struct ExtendContext {
  std::size_t final_dim;
  std::size_t d_min;
  std::size_t d_dual_min;
  std::vector<std::size_t> schedule;
  IsomorphRejection strategy;
};

// Enumerates the new rows v (as lift counts per column class) such that every
// word of the coset v + C has weight >= d_min - 1 and v is a coset leader.
class RowEnumerator {
 public:
  RowEnumerator(const Columns& parent, std::size_t dim, std::size_t d_min, bool lift_all_zero)
      : dim_(dim), target_(d_min > 0 ? d_min - 1 : 0), lift_all_zero_(lift_all_zero) {
    std::map<std::uint64_t, std::size_t> counts;
    for (auto c : parent) ++counts[c];
    for (auto [value, count] : counts) classes_.push_back({value, count});
    std::stable_sort(classes_.begin(), classes_.end(),
                     [](const Class& a, const Class& b) { return a.count > b.count; });
    remaining_.assign(classes_.size() + 1, 0);
    for (std::size_t j = classes_.size(); j-- > 0;) remaining_[j] = remaining_[j + 1] + classes_[j].count;
    lifts_.assign(classes_.size(), 0);
  }

  template <typename Emit>
  void run(Emit&& emit) {
    std::vector<std::size_t> partial(std::size_t{1} << dim_, 0);
    descend(0, partial, emit);
  }

  Columns child_columns() const {
    const std::uint64_t top = std::uint64_t{1} << dim_;
    Columns cols{top};
    for (std::size_t j = 0; j < classes_.size(); ++j) {
      for (std::size_t i = 0; i < lifts_[j]; ++i) cols.push_back(classes_[j].value | top);
      for (std::size_t i = lifts_[j]; i < classes_[j].count; ++i) cols.push_back(classes_[j].value);
    }
    return cols;
  }

 private:
  struct Class {
    std::uint64_t value;
    std::size_t count;
  };

  template <typename Emit>
  void descend(std::size_t j, std::vector<std::size_t>& partial, Emit& emit) {
    const std::size_t rest = remaining_[j];
    for (std::size_t u = 0; u < partial.size(); ++u) {
      if (partial[u] + rest < target_) return;
      if (partial[0] > partial[u] + rest) return;
    }
    if (j == classes_.size()) {
      emit(*this);
      return;
    }
    const auto [value, count] = classes_[j];
    std::size_t lo = 0;
    if (lift_all_zero_ && value == 0) lo = count;
    for (std::size_t a = lo; a <= count; ++a) {
      lifts_[j] = a;
      for (std::size_t u = 0; u < partial.size(); ++u)
        partial[u] += (std::popcount(u & value) & 1) ? count - a : a;
      descend(j + 1, partial, emit);
      for (std::size_t u = 0; u < partial.size(); ++u)
        partial[u] -= (std::popcount(u & value) & 1) ? count - a : a;
    }
  }

  std::size_t dim_;
  std::size_t target_;
  bool lift_all_zero_;
  std::vector<Class> classes_;
  std::vector<std::size_t> remaining_;
  std::vector<std::size_t> lifts_;
};

bool final_checks(const ExtendContext& ctx, const Columns& cols) {
  if (hull_of(ctx.final_dim, cols) != 0) return false;
  if (ctx.d_dual_min >= 2 && std::find(cols.begin(), cols.end(), 0) != cols.end()) return false;
  if (ctx.d_dual_min >= 3) {
    const auto dd = dual_distance(code_from_columns(ctx.final_dim, cols));
    if (dd && *dd < ctx.d_dual_min) return false;
  }
  return true;
}

// Whether column 0 (the coordinate just added) is in the orbit of the
// canonical parent coordinate of the child.
bool is_canonical_child(const ExtendContext& ctx, std::size_t dim, const Columns& cols,
                        const CanonicalLabeling& lab) {
  const std::size_t parent_dim = dim - 1;
  std::size_t chosen = cols.size();
  std::map<std::uint64_t, bool> admissible;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (!cols[j]) continue;
    if (chosen < cols.size() && lab.column_image[j] >= lab.column_image[chosen]) continue;
    auto it = admissible.find(cols[j]);
    if (it == admissible.end()) {
      bool ok = true;
      if (parent_dim > 0)
        ok = hull_of(parent_dim, shortened_columns(cols, j, cols[j])) <= ctx.schedule[parent_dim - 1];
      it = admissible.emplace(cols[j], ok).first;
    }
    if (it->second) chosen = j;
  }
  if (chosen == cols.size()) throw VerificationError("canonical augmentation: no admissible parent");
  return lab.column_orbit[0] == lab.column_orbit[chosen];
}

std::vector<Extension> extend_parent(const ExtendContext& ctx, std::size_t dim, const Columns& parent,
                                     std::size_t* candidates) {
  const std::size_t child_dim = dim + 1;
  const bool last = child_dim == ctx.final_dim;
  std::vector<Extension> out;
  std::set<std::string> seen;
  RowEnumerator rows(parent, dim, ctx.d_min, last && ctx.d_dual_min >= 2);
  rows.run([&](const RowEnumerator& e) {
    ++*candidates;
    Columns cols = e.child_columns();
    if (last) {
      if (!final_checks(ctx, cols)) return;
    } else if (hull_of(child_dim, cols) > ctx.schedule[child_dim - 1]) {
      return;
    }
    CanonicalLabeling lab = canonical_labeling(child_dim, cols);
    if (ctx.strategy == IsomorphRejection::CanonicalAugmentation &&
        !is_canonical_child(ctx, child_dim, cols, lab))
      return;
    if (!seen.insert(lab.form.certificate).second) return;
    out.push_back({std::move(lab.form.certificate), {}});
    out.back().columns = column_values(LinearCode::span_of(lab.form.matrix));
  });
  return out;
}

template <typename Work>
void parallel_for(std::size_t count, unsigned threads, Work&& work) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    });
  for (auto& th : pool) th.join();
}

void check_spec(const SearchSpec& spec, const ClassifyOptions& options) {
  if (spec.k == 0 || spec.k > spec.n)
    throw PreconditionError("classify: requires 1 <= k <= n (got n = " + std::to_string(spec.n) +
                            ", k = " + std::to_string(spec.k) + ")");
  if (spec.n > 63) throw ScaleGuardError("classify: length above 63 is not supported");
  if (!options.allow_large && (spec.n > kDeskMaxLength || spec.k > kDeskMaxDimension))
    throw ScaleGuardError("classify: [" + std::to_string(spec.n) + "," + std::to_string(spec.k) +
                          "] exceeds the desk-scale guard (n <= " + std::to_string(kDeskMaxLength) +
                          ", k <= " + std::to_string(kDeskMaxDimension) + ")");
}

}  // namespace

std::vector<std::size_t> SearchSpec::effective_schedule() const {
  if (max_hull_schedule.empty()) {
    std::vector<std::size_t> s(k);
    for (std::size_t m = 1; m <= k; ++m) s[m - 1] = k - m;
    return s;
  }
  if (max_hull_schedule.size() != k)
    throw PreconditionError("max_hull_schedule must have k entries");
  if (max_hull_schedule.back() != 0)
    throw PreconditionError("max_hull_schedule must end with 0");
  return max_hull_schedule;
}

std::vector<ClassificationRecord> classify(const SearchSpec& spec, const ClassifyOptions& options,
                                           ClassifyStats* stats) {
  check_spec(spec, options);
  const ExtendContext ctx{spec.k, std::max<std::size_t>(spec.d_min, 1), spec.d_dual_min,
                          spec.effective_schedule(), options.strategy};
  if (stats) *stats = {};

  Level level;
  level.codes.push_back({certificate_of(BinaryMatrix(0, spec.n - spec.k)), Columns(spec.n - spec.k, 0)});
  for (std::size_t dim = 0; dim < spec.k && !level.codes.empty(); ++dim) {
    std::vector<std::vector<Extension>> produced(level.codes.size());
    std::vector<std::size_t> candidates(level.codes.size(), 0);
    parallel_for(level.codes.size(), options.threads, [&](std::size_t i) {
      produced[i] = extend_parent(ctx, dim, level.codes[i].columns, &candidates[i]);
    });
    Level next{dim + 1, {}};
    for (auto& batch : produced)
      for (auto& e : batch) next.codes.push_back(std::move(e));
    std::sort(next.codes.begin(), next.codes.end(),
              [](const Extension& a, const Extension& b) { return a.certificate < b.certificate; });
    auto dup = std::adjacent_find(next.codes.begin(), next.codes.end(),
                                  [](const Extension& a, const Extension& b) {
                                    return a.certificate == b.certificate;
                                  });
    if (dup != next.codes.end()) {
      if (options.strategy == IsomorphRejection::CanonicalAugmentation)
        throw VerificationError("canonical augmentation accepted two equivalent codes");
      next.codes.erase(std::unique(next.codes.begin(), next.codes.end(),
                                   [](const Extension& a, const Extension& b) {
                                     return a.certificate == b.certificate;
                                   }),
                       next.codes.end());
    }
    if (stats) {
      stats->level_counts.push_back(next.codes.size());
      std::size_t total = 0;
      for (auto c : candidates) total += c;
      stats->candidates.push_back(total);
    }
    level = std::move(next);
  }
  if (level.dim != spec.k) level.codes.clear();

  std::vector<ClassificationRecord> records;
  for (const auto& e : level.codes) {
    LinearCode code = code_from_columns(spec.k, e.columns);
    ClassificationRecord rec{canonical_form(code), compute_metrics(code)};
    if (rec.canonical.certificate != e.certificate)
      throw VerificationError("classify: certificate changed on recomputation");
    if (!rec.metrics.is_lcd() || rec.metrics.d.value_or(0) < ctx.d_min ||
        (rec.metrics.d_dual && *rec.metrics.d_dual < spec.d_dual_min))
      throw VerificationError("classify: output code violates the search specification");
    records.push_back(std::move(rec));
  }
  return records;
}

CodePredicate lcd_predicate(std::size_t d_min, std::size_t d_dual_min) {
  return [d_min, d_dual_min](const LinearCode& code) {
    if (code.dimension() == 0 || hull_dim(code) != 0) return false;
    if (min_weight(code) < d_min) return false;
    if (d_dual_min > 1) {
      const auto dd = dual_distance(code);
      if (dd && *dd < d_dual_min) return false;
    }
    return true;
  };
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  // [n, k] = [n-1, k-1] + 2^k [n-1, k]
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t j = std::min(m, k); j >= 1; --j) {
      const std::uint64_t scale = j >= 64 ? kMax : (std::uint64_t{1} << j);
      std::uint64_t term = row[j] == 0 ? 0 : (row[j] > kMax / scale ? kMax : row[j] * scale);
      row[j] = row[j - 1] > kMax - term ? kMax : row[j - 1] + term;
    }
  return row[k];
}

std::vector<ClassificationRecord> oracle_enumerate(std::size_t n, std::size_t k,
                                                   const CodePredicate& predicate,
                                                   std::uint64_t* visited, std::uint64_t max_codes) {
  if (k > n) throw PreconditionError("oracle_enumerate: k > n");
  if (n > 64) throw ScaleGuardError("oracle_enumerate: length above 64");
  const std::uint64_t total = gaussian_binomial(n, k);
  if (total > max_codes)
    throw ScaleGuardError("oracle_enumerate: " + std::to_string(total) + " codes exceed the limit of " +
                          std::to_string(max_codes));
  std::map<std::string, LinearCode> classes;
  std::uint64_t count = 0;
  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    // Free entries: row i, column c > pivots[i], c not a pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = pivots[i] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(i, c);
    const std::uint64_t assignments = std::uint64_t{1} << free.size();
    BinaryMatrix g(k, n);
    for (std::size_t i = 0; i < k; ++i) g.set(i, pivots[i], true);
    for (std::uint64_t a = 0; a < assignments; ++a) {
      for (std::size_t f = 0; f < free.size(); ++f) g.set(free[f].first, free[f].second, (a >> f) & 1u);
      ++count;
      LinearCode code(g);
      if (!predicate(code)) continue;
      CanonicalForm form = canonical_form(code);
      classes.emplace(std::move(form.certificate), std::move(code));
    }
    // next k-subset of pivot columns
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  if (visited) *visited = count;
  std::vector<ClassificationRecord> records;
  for (auto& [cert, code] : classes) {
    ClassificationRecord rec{canonical_form(code), compute_metrics(code)};
    records.push_back(std::move(rec));
  }
  return records;
}

std::size_t d_lcd_exact(std::size_t n, std::size_t k, const ClassifyOptions& options) {
  for (std::size_t d = griesmer_upper(n, k); d >= 1; --d) {
    SearchSpec spec{n, k, d, 1, {}};
    if (!classify(spec, options).empty()) return d;
  }
  throw VerificationError("d_lcd_exact: no LCD [" + std::to_string(n) + "," + std::to_string(k) +
                          "] code found");
}

}  // namespace lcd

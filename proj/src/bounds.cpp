#include "lcd/bounds.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

namespace lcd {

namespace {

std::size_t floor_div(std::size_t a, std::size_t b) { return a / b; }

std::string cell_name(std::size_t n, std::size_t k) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

}  // namespace

std::optional<std::size_t> formula_dlcd(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) return std::nullopt;
  if (k == n) return 1;
  if (k == n - 1) return n % 2 ? 2 : 1;
  if (k == 1) return n % 2 ? n : n - 1;
  if (k == 2) {
    const std::size_t r = n % 6;
    const std::size_t base = floor_div(2 * n, 3);
    return (r >= 1 && r <= 4) ? base : base - 1;
  }
  if (k == 3) {
    const std::size_t r = n % 7;
    const std::size_t base = floor_div(4 * n, 7);
    return (r == 3 || r == 5) ? base : base - 1;
  }
  if (k == 4) {
    const std::size_t r = n % 15;
    const std::size_t base = floor_div(8 * n, 15);
    if (r == 5 || r == 9 || r == 13) return base;
    return r == 0 ? base - 2 : base - 1;
  }
  if (k == 5) {
    const std::size_t r = n % 31;
    const std::size_t base = floor_div(16 * n, 31);
    for (std::size_t s : {3, 5, 7, 11, 19, 20, 22, 26})
      if (r == s) return base - 1;
    if (r == 4) return base - 2;
  }
  // d(n, n - i) = 2 for i >= 2 and n >= 2^i
  const std::size_t i = n - k;
  if (i >= 2 && i < 63 && n >= (std::size_t{1} << i)) return 2;
  return std::nullopt;
}

std::size_t griesmer_upper(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) return 0;
  auto length = [k](std::size_t d) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < k && i < 64; ++i) total += (d + (std::size_t{1} << i) - 1) >> i;
    if (k > 64) total += k - 64;  // ceil(d / 2^i) = 1 for huge i
    return total;
  };
  std::size_t d = 1;
  while (d < n && length(d + 1) <= n) ++d;
  return d;
}

const Provenance* BoundsCell::last(BoundSide side) const {
  for (auto it = provenance.rbegin(); it != provenance.rend(); ++it)
    if (it->side == side) return &*it;
  return nullptr;
}

BoundsTable::BoundsTable(std::size_t n_max) : n_max_(n_max) {
  cells_.reserve(n_max * (n_max + 1) / 2);
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      BoundsCell c;
      c.n = n;
      c.k = k;
      c.lower = 1;
      c.upper = n - k + 1;
      cells_.push_back(std::move(c));
    }
}

void BoundsTable::check(std::size_t n, std::size_t k) const {
  if (!contains(n, k))
    throw PreconditionError("bounds table has no cell " + cell_name(n, k));
}

std::size_t BoundsTable::index(std::size_t n, std::size_t k) const {
  check(n, k);
  return (n - 1) * n / 2 + (k - 1);
}

BoundsCell& BoundsTable::at(std::size_t n, std::size_t k) { return cells_[index(n, k)]; }
const BoundsCell& BoundsTable::at(std::size_t n, std::size_t k) const { return cells_[index(n, k)]; }

bool BoundsTable::raise_lower(std::size_t n, std::size_t k, std::size_t value, std::string rule,
                              std::vector<CellRef> antecedents) {
  BoundsCell& c = at(n, k);
  if (value <= c.lower) return false;
  c.lower = value;
  c.provenance.push_back({BoundSide::Lower, value, std::move(rule), std::move(antecedents)});
  if (c.lower > c.upper)
    throw BoundsContradiction({n, k}, "contradiction at " + cell_name(n, k) + ": lower " +
                                          std::to_string(c.lower) + " > upper " +
                                          std::to_string(c.upper) + "\n" + provenance_chain(n, k));
  return true;
}

bool BoundsTable::lower_upper(std::size_t n, std::size_t k, std::size_t value, std::string rule,
                              std::vector<CellRef> antecedents) {
  BoundsCell& c = at(n, k);
  if (value >= c.upper) return false;
  c.upper = value;
  c.provenance.push_back({BoundSide::Upper, value, std::move(rule), std::move(antecedents)});
  if (c.lower > c.upper)
    throw BoundsContradiction({n, k}, "contradiction at " + cell_name(n, k) + ": lower " +
                                          std::to_string(c.lower) + " > upper " +
                                          std::to_string(c.upper) + "\n" + provenance_chain(n, k));
  return true;
}

bool BoundsTable::add_witness(std::size_t n, std::size_t k, std::size_t d) {
  if (d >= 64) return false;
  BoundsCell& c = at(n, k);
  const std::uint64_t bit = std::uint64_t{1} << d;
  if (c.witnesses & bit) return false;
  c.witnesses |= bit;
  return true;
}

std::string BoundsTable::provenance_chain(std::size_t n, std::size_t k) const {
  std::ostringstream out;
  std::deque<std::pair<CellRef, BoundSide>> queue{{{n, k}, BoundSide::Lower}, {{n, k}, BoundSide::Upper}};
  std::set<std::tuple<std::size_t, std::size_t, int>> seen;
  std::size_t printed = 0;
  while (!queue.empty() && printed < 64) {
    auto [ref, side] = queue.front();
    queue.pop_front();
    if (!seen.insert({ref.n, ref.k, side == BoundSide::Lower ? 0 : 1}).second) continue;
    const Provenance* p = at(ref.n, ref.k).last(side);
    if (!p) continue;
    out << "  " << cell_name(ref.n, ref.k) << (side == BoundSide::Lower ? " lower >= " : " upper <= ")
        << p->value << " by " << p->rule;
    for (std::size_t i = 0; i < p->antecedents.size(); ++i) {
      out << (i ? ", " : " from ") << cell_name(p->antecedents[i].n, p->antecedents[i].k);
      queue.push_back({p->antecedents[i], side});
    }
    out << '\n';
    ++printed;
  }
  return out.str();
}

namespace {

int odd_witness_max(std::uint64_t witnesses) {
  for (int d = 63; d >= 1; d -= 2)
    if (d % 2 == 1 && (witnesses >> d) & 1u) return d;
  return -1;
}

// One pass over every cell; returns whether anything changed.
bool sweep(BoundsTable& t) {
  bool changed = false;
  const std::size_t N = t.n_max();
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      // lower bounds: an LCD code with d >= lower exists
      if (t.contains(n - 1, k)) {
        const BoundsCell& p = t.at(n - 1, k);
        changed |= t.raise_lower(n, k, p.lower, "extend", {{n - 1, k}});
        // a zero coordinate keeps the minimum distance
        for (std::uint64_t w = p.witnesses; w; w &= w - 1)
          changed |= t.add_witness(n, k, static_cast<std::size_t>(std::countr_zero(w)));
      }
      if (t.contains(n, k + 1))
        changed |= t.raise_lower(n, k, t.at(n, k + 1).lower, "dim-step", {{n, k + 1}});
      if ((k + 1) % 2 == 1 && t.contains(n + 1, k + 1))
        changed |= t.raise_lower(n, k, t.at(n + 1, k + 1).lower, "odd-dim-step", {{n + 1, k + 1}});
      if ((n + 1 - k) % 2 == 1 && t.contains(n + 1, k) && t.at(n + 1, k).lower >= 2)
        changed |= t.raise_lower(n, k, t.at(n + 1, k).lower - 1, "odd-redundancy", {{n + 1, k}});
      if (k % 2 == 0 && t.contains(n - 1, k)) {
        const int w = odd_witness_max(t.at(n - 1, k).witnesses);
        if (w > 0) {
          changed |= t.raise_lower(n, k, static_cast<std::size_t>(w) + 1, "odd-witness-1", {{n - 1, k}});
          changed |= t.add_witness(n, k, static_cast<std::size_t>(w) + 1);
        }
      }
      if (t.contains(n - 2, k)) {
        const int w = odd_witness_max(t.at(n - 2, k).witnesses);
        if (w > 0) changed |= t.raise_lower(n, k, static_cast<std::size_t>(w) + 1, "odd-witness-2", {{n - 2, k}});
      }
      if (k >= 2 && k + 2 <= n) changed |= t.raise_lower(n, k, 2, "exists");

      // upper bounds
      if (t.contains(n + 1, k))
        changed |= t.lower_upper(n, k, t.at(n + 1, k).upper, "extend", {{n + 1, k}});
      if (t.contains(n, k - 1))
        changed |= t.lower_upper(n, k, t.at(n, k - 1).upper, "dim-step", {{n, k - 1}});
      if (k % 2 == 1 && k >= 2 && t.contains(n - 1, k - 1))
        changed |= t.lower_upper(n, k, t.at(n - 1, k - 1).upper, "odd-dim-step", {{n - 1, k - 1}});
      if ((n - k) % 2 == 1 && t.contains(n - 1, k))
        changed |= t.lower_upper(n, k, t.at(n - 1, k).upper + 1, "odd-redundancy", {{n - 1, k}});
      if (k >= 2 && n >= 5 && k + 2 <= n && t.contains(n - 1, k - 1)) {
        const BoundsCell& p = t.at(n - 1, k - 1);
        if (p.exact() && p.lower == 2) changed |= t.lower_upper(n, k, 2, "distance-two", {{n - 1, k - 1}});
      }

      BoundsCell& c = t.at(n, k);
      if (c.exact()) changed |= t.add_witness(n, k, c.lower);
      if (c.witnesses) {
        const auto top = static_cast<std::size_t>(63 - std::countl_zero(c.witnesses));
        changed |= t.raise_lower(n, k, top, "witness", {{n, k}});
      }
    }
  return changed;
}

}  // namespace

BoundsTable propagate(BoundsTable table) {
  while (sweep(table)) {
  }
  return table;
}

BoundsTable build_table(std::size_t n_max, const std::vector<CellValue>& seeds,
                        const std::vector<CellValue>& ceilings) {
  if (n_max > kBoundsMaxLength)
    throw PreconditionError("build_table: n_max " + std::to_string(n_max) + " exceeds " +
                            std::to_string(kBoundsMaxLength));
  BoundsTable t(n_max);
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      t.at(n, k).provenance.push_back({BoundSide::Upper, n - k + 1, "singleton", {}});
      t.lower_upper(n, k, griesmer_upper(n, k), "griesmer");
    }
  for (const auto& c : ceilings)
    if (t.contains(c.n, c.k)) t.lower_upper(c.n, c.k, c.value, "ceiling");
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      if (auto v = formula_dlcd(n, k)) {
        t.lower_upper(n, k, *v, "formula");
        t.raise_lower(n, k, *v, "formula");
      }
  for (const auto& s : seeds) {
    if (!t.contains(s.n, s.k)) continue;
    t.lower_upper(s.n, s.k, s.value, "seed");
    t.raise_lower(s.n, s.k, s.value, "seed");
  }
  return propagate(std::move(t));
}

}  // namespace lcd

#include "lcd/canonical.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <numeric>
#include <utility>

#include "lcd/errors.hpp"

namespace lcd {

namespace {

// Codes are viewed as multisets of column vectors ("points") in GF(2)^k.
// Equivalence under column permutation is equivalence of these multisets
// under GL(k, 2). The canonical form is the multiset written in the basis
// b_1..b_k, chosen among the points, that maximizes the key
//   label(B x) for x = 1, 2, ..., 2^k - 1
// where label() is an isomorphism-invariant tag (multiplicity plus a weight
// distribution fingerprint) and label(non-point) = 0. Block r of the key
// (indices 2^r .. 2^{r+1}-1) depends only on b_1..b_{r+1}, which drives a
// depth-first branch and bound over basis choices.

constexpr std::size_t kFingerprintMaxDim = 12;

struct Entry {
  std::uint64_t offset;
  std::uint32_t label;
  bool operator==(const Entry&) const = default;
};
using Block = std::vector<Entry>;

// Dense lexicographic comparison of sparse blocks (absent entries are 0).
int compare_blocks(const Block& a, const Block& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i].offset != b[i].offset) return a[i].offset < b[i].offset ? 1 : -1;
    if (a[i].label != b[i].label) return a[i].label > b[i].label ? 1 : -1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() > b.size() ? 1 : -1;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Echelon form of the chosen basis prefix. reduce() returns the unique coset
// representative of x modulo the span, and the basis coordinates of the
// removed part.
struct Echelon {
  std::vector<std::uint64_t> vec;
  std::vector<std::uint64_t> expr;  // vec[j] as a combination of basis vectors
  std::vector<std::uint64_t> pivot;

  std::pair<std::uint64_t, std::uint64_t> reduce(std::uint64_t x) const {
    std::uint64_t comb = 0;
    for (std::size_t j = 0; j < vec.size(); ++j)
      if (x & pivot[j]) {
        x ^= vec[j];
        comb ^= expr[j];
      }
    return {x, comb};
  }
  void insert(std::uint64_t b, std::size_t basis_index) {
    auto [residual, comb] = reduce(b);
    vec.push_back(residual);
    expr.push_back(comb ^ (std::uint64_t{1} << basis_index));
    pivot.push_back(std::uint64_t{1} << (63 - std::countl_zero(residual)));
  }
};

struct Point {
  std::uint64_t value;
  std::uint32_t mult;
  std::uint32_t label;
};

std::vector<std::uint32_t> point_labels(std::size_t k, std::size_t n, const std::vector<Point>& points) {
  std::vector<std::uint64_t> fingerprint(points.size(), 0);
  if (k <= kFingerprintMaxDim) {
    const std::uint64_t total = std::uint64_t{1} << k;
    std::vector<std::uint32_t> weight(total, 0);
    for (std::uint64_t u = 1; u < total; ++u)
      for (const auto& p : points)
        if (std::popcount(u & p.value) & 1) weight[u] += p.mult;
    std::vector<std::uint64_t> counts(n + 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint64_t u = 1; u < total; ++u)
        if (std::popcount(u & points[i].value) & 1) ++counts[weight[u]];
      std::uint64_t h = 1469598103934665603ull;
      for (auto c : counts) h = (h ^ c) * 1099511628211ull;
      fingerprint[i] = h;
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint64_t>> keys;
  for (std::size_t i = 0; i < points.size(); ++i) keys.emplace_back(points[i].mult, fingerprint[i]);
  auto distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::uint32_t> labels(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    labels[i] = static_cast<std::uint32_t>(
        std::lower_bound(distinct.begin(), distinct.end(), keys[i]) - distinct.begin() + 1);
  return labels;
}

class Search {
 public:
  Search(std::size_t k, std::vector<Point> points)
      : k_(k), points_(std::move(points)), orbits_(points_.size()) {}

  void run() {
    echelons_.assign(1, Echelon{});
    descend(0);
  }

  const std::vector<std::uint64_t>& best_coordinates() const { return best_coord_; }
  UnionFind& orbits() { return orbits_; }
  std::size_t leaves() const { return leaves_; }

 private:
  struct Outside {
    std::uint64_t residual;
    std::uint64_t comb;
    std::size_t point;
  };

  struct LeafRecord {
    std::vector<Block> key;
    std::vector<std::uint64_t> coord;
    std::vector<std::size_t> path;
  };

  int compare_with_best(const Block& last) const {
    const std::size_t r = key_.size();
    for (std::size_t i = 0; i < r; ++i)
      if (int c = compare_blocks(key_[i], best_.key[i]); c != 0) return c;
    return compare_blocks(last, best_.key[r]);
  }

  // Orbits of the group generated by the automorphisms fixing path_[0..r).
  UnionFind stabilizer_orbits(std::size_t r) const {
    UnionFind uf(points_.size());
    for (const auto& g : generators_) {
      bool fixes = true;
      for (std::size_t i = 0; i < r && fixes; ++i) fixes = g[path_[i]] == path_[i];
      if (!fixes) continue;
      for (std::size_t p = 0; p < g.size(); ++p) uf.unite(p, g[p]);
    }
    return uf;
  }

  void descend(std::size_t r) {
    const Echelon& ech = echelons_[r];
    if (r == k_) {
      leaf(ech);
      return;
    }
    std::vector<Outside> outside;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      auto [residual, comb] = ech.reduce(points_[i].value);
      if (residual) outside.push_back({residual, comb, i});
    }
    std::sort(outside.begin(), outside.end(), [](const Outside& a, const Outside& b) {
      return a.residual != b.residual ? a.residual < b.residual : a.point < b.point;
    });
    // One block per candidate b; candidates sharing a coset share entries.
    std::vector<std::pair<Block, std::size_t>> blocks;
    for (std::size_t lo = 0; lo < outside.size();) {
      std::size_t hi = lo;
      while (hi < outside.size() && outside[hi].residual == outside[lo].residual) ++hi;
      for (std::size_t c = lo; c < hi; ++c) {
        Block block;
        for (std::size_t q = lo; q < hi; ++q)
          block.push_back({outside[q].comb ^ outside[c].comb, points_[outside[q].point].label});
        std::sort(block.begin(), block.end(),
                  [](const Entry& a, const Entry& b) { return a.offset < b.offset; });
        blocks.emplace_back(std::move(block), outside[c].point);
      }
      lo = hi;
    }
    std::size_t top = 0;
    for (std::size_t i = 1; i < blocks.size(); ++i)
      if (compare_blocks(blocks[i].first, blocks[top].first) > 0) top = i;
    const Block best_block = blocks[top].first;
    if (have_best_ && compare_with_best(best_block) < 0) return;

    std::vector<std::size_t> explored;
    std::size_t known_generators = generators_.size();
    UnionFind local = stabilizer_orbits(r);
    for (auto& [block, point] : blocks) {
      if (!(block == best_block)) continue;
      // Candidates in one orbit of the prefix stabilizer give isomorphic subtrees.
      if (generators_.size() != known_generators) {
        local = stabilizer_orbits(r);
        known_generators = generators_.size();
      }
      const std::size_t root = local.find(point);
      if (std::any_of(explored.begin(), explored.end(), [&](std::size_t e) { return local.find(e) == root; }))
        continue;
      explored.push_back(point);
      if (have_best_ && compare_with_best(best_block) < 0) return;
      Echelon next = echelons_[r];
      next.insert(points_[point].value, r);
      echelons_.resize(r + 1);
      echelons_.push_back(std::move(next));
      key_.push_back(block);
      path_.push_back(point);
      descend(r + 1);
      path_.pop_back();
      key_.pop_back();
      if (jump_) {
        if (jump_level_ < r) return;
        jump_ = false;
      }
    }
  }

  // Point permutation p -> q with coord[q] = target.coord[p]; an automorphism
  // when the two leaves have equal keys.
  void record_automorphism(const std::vector<std::uint64_t>& coord, const LeafRecord& target) {
    std::vector<std::pair<std::uint64_t, std::size_t>> at;
    for (std::size_t i = 0; i < points_.size(); ++i) at.emplace_back(coord[i], i);
    std::sort(at.begin(), at.end());
    std::vector<std::size_t> perm(points_.size());
    for (std::size_t p = 0; p < points_.size(); ++p) {
      auto it = std::lower_bound(at.begin(), at.end(), std::make_pair(target.coord[p], std::size_t{0}));
      perm[p] = it->second;
      orbits_.unite(p, it->second);
    }
    generators_.push_back(std::move(perm));
    std::size_t common = 0;
    while (common < k_ && path_[common] == target.path[common]) ++common;
    jump_ = true;
    jump_level_ = common;
  }

  static int compare_keys(const std::vector<Block>& a, const std::vector<Block>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (int c = compare_blocks(a[i], b[i]); c != 0) return c;
    return 0;
  }

  void leaf(const Echelon& ech) {
    ++leaves_;
    std::vector<std::uint64_t> coord(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) coord[i] = ech.reduce(points_[i].value).second;
    if (!have_best_) {
      first_ = best_ = {key_, coord, path_};
      best_coord_ = std::move(coord);
      have_best_ = true;
      return;
    }
    if (compare_keys(key_, first_.key) == 0) {
      record_automorphism(coord, first_);
      return;
    }
    const int cmp = compare_keys(key_, best_.key);
    if (cmp > 0) {
      best_ = {key_, coord, path_};
      best_coord_ = std::move(coord);
    } else if (cmp == 0) {
      record_automorphism(coord, best_);
    }
  }

  std::size_t k_;
  std::vector<Point> points_;
  UnionFind orbits_;
  std::vector<Echelon> echelons_;
  std::vector<Block> key_;
  std::vector<std::size_t> path_;
  LeafRecord first_;
  LeafRecord best_;
  std::vector<std::uint64_t> best_coord_;
  std::vector<std::vector<std::size_t>> generators_;
  bool have_best_ = false;
  bool jump_ = false;
  std::size_t jump_level_ = 0;
  std::size_t leaves_ = 0;
};

}  // namespace

std::string certificate_of(const BinaryMatrix& matrix) {
  std::string cert;
  for (const std::size_t v : {matrix.cols(), matrix.rows()}) {
    cert.push_back(static_cast<char>((v >> 8) & 0xff));
    cert.push_back(static_cast<char>(v & 0xff));
  }
  unsigned char byte = 0;
  int filled = 0;
  for (std::size_t r = 0; r < matrix.rows(); ++r)
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      byte = static_cast<unsigned char>((byte << 1) | (matrix.get(r, c) ? 1 : 0));
      if (++filled == 8) {
        cert.push_back(static_cast<char>(byte));
        byte = 0;
        filled = 0;
      }
    }
  if (filled) cert.push_back(static_cast<char>(byte << (8 - filled)));
  return cert;
}

CanonicalLabeling canonical_labeling(std::size_t k, std::span<const std::uint64_t> columns) {
  if (k > 64) throw ScaleGuardError("canonical_labeling: dimension above 64");
  const std::size_t n = columns.size();
  CanonicalLabeling out;
  out.column_orbit.assign(n, 0);
  out.column_image.assign(n, 0);

  std::vector<std::uint64_t> values;
  for (auto c : columns)
    if (c) values.push_back(c);
  std::sort(values.begin(), values.end());
  std::vector<Point> points;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    points.push_back({values[i], static_cast<std::uint32_t>(j - i), 0});
    i = j;
  }
  {
    Echelon span;
    for (const auto& p : points)
      if (span.reduce(p.value).first) span.insert(p.value, span.vec.size());
    if (span.vec.size() != k)
      throw PreconditionError("canonical_labeling: columns span dimension " +
                              std::to_string(span.vec.size()) + ", expected " + std::to_string(k));
  }
  const auto labels = point_labels(k, n, points);
  for (std::size_t i = 0; i < points.size(); ++i) points[i].label = labels[i];

  auto point_of = [&](std::uint64_t value) {
    return static_cast<std::size_t>(
        std::lower_bound(points.begin(), points.end(), value,
                         [](const Point& p, std::uint64_t v) { return p.value < v; }) -
        points.begin());
  };

  std::vector<std::uint64_t> image;
  std::vector<std::size_t> orbit_of_point(points.size());
  if (k > 0) {
    Search search(k, points);
    search.run();
    out.leaves = search.leaves();
    image = search.best_coordinates();
    for (std::size_t i = 0; i < points.size(); ++i) orbit_of_point[i] = search.orbits().find(i);
  }

  std::vector<std::uint64_t> canonical_columns;
  std::vector<std::size_t> orbit_rep(points.size() + 1, n);  // last slot: zero columns
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t orbit = points.size();
    if (columns[j]) {
      const std::size_t p = point_of(columns[j]);
      out.column_image[j] = image[p];
      orbit = orbit_of_point[p];
    }
    if (orbit_rep[orbit] == n) orbit_rep[orbit] = j;
    out.column_orbit[j] = orbit_rep[orbit];
    canonical_columns.push_back(out.column_image[j]);
  }
  std::sort(canonical_columns.begin(), canonical_columns.end());
  BinaryMatrix m(k, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < k; ++r)
      if ((canonical_columns[c] >> r) & 1u) m.set(r, c, true);
  out.form.certificate = certificate_of(m);
  out.form.matrix = std::move(m);
  return out;
}

CanonicalForm canonical_form(const LinearCode& code) {
  const auto cols = column_values(code);
  return canonical_labeling(code.dimension(), cols).form;
}

bool are_equivalent(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length() || a.dimension() != b.dimension()) return false;
  return canonical_form(a).certificate == canonical_form(b).certificate;
}

}  // namespace lcd

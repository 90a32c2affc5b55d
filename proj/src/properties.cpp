#include "lcd/properties.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "lcd/classifier.hpp"
#include "lcd/code.hpp"
#include "lcd/errors.hpp"
#include "lcd/gf2.hpp"
#include "lcd/lcd_theory.hpp"

namespace lcd {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

BinaryMatrix random_matrix(Rng& rng, std::size_t k, std::size_t n) {
  BinaryMatrix m(k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (rng() & 1u) m.set(r, c, true);
  return m;
}

BinaryMatrix random_full_rank(Rng& rng, std::size_t k, std::size_t n) {
  while (true) {
    BinaryMatrix m = random_matrix(rng, k, n);
    if (rank(m) == k) return m;
  }
}

// Rejection sampling; `accept` sees a full-rank code of the requested shape.
LinearCode sample(Rng& rng, std::size_t k, std::size_t n, const std::function<bool(const LinearCode&)>& accept) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    LinearCode c(random_full_rank(rng, k, n));
    if (accept(c)) return c;
  }
  throw VerificationError("property sampler: no code accepted");
}

LinearCode random_lcd(Rng& rng, std::size_t k, std::size_t n) {
  return sample(rng, k, n, [](const LinearCode& c) { return hull_dim(c) == 0; });
}

// Even-weight rows span an even-like code; k must be even for it to be LCD.
LinearCode random_even_like_lcd(Rng& rng, std::size_t k, std::size_t n) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    BinaryMatrix m = random_matrix(rng, k, n);
    for (std::size_t r = 0; r < k; ++r)
      if (m.row_weight(r) % 2) m.flip(r, pick(rng, 0, n - 1));
    if (rank(m) != k) continue;
    LinearCode c(m);
    if (hull_dim(c) == 0) return c;
  }
  throw VerificationError("property sampler: no even-like LCD code found");
}

struct Trial {
  std::ostringstream why;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why << what;
    }
  }
};

std::string describe(const LinearCode& c) {
  std::ostringstream s;
  s << "[" << c.length() << "," << c.dimension() << "]";
  for (const auto& r : c.generator().to_strings()) s << ' ' << r;
  return s.str();
}

using TrialFn = std::function<void(Rng&, Trial&)>;

void massey(Rng& rng, Trial& t) {
  const std::size_t n = pick(rng, 2, 16);
  const std::size_t k = pick(rng, 1, n - 1);
  const BinaryMatrix g = random_full_rank(rng, k, n);
  const LinearCode c(g);
  const LinearCode d = dual(c);
  const BinaryMatrix& h = d.generator();
  const bool i = hull_dim(c) == 0;
  const bool ii = hull_dim(d) == 0;
  const bool iii = is_nonsingular(mat_mul(g, g.transpose()));
  const bool iv = is_nonsingular(mat_mul(h, h.transpose()));
  t.expect(i == ii && ii == iii && iii == iv && is_lcd(c) == i, "Massey conditions disagree on " + describe(c));
}

void direct_sum(Rng& rng, Trial& t) {
  const std::size_t n = pick(rng, 2, 16);
  const std::size_t k = pick(rng, 1, n - 1);
  const LinearCode c(random_full_rank(rng, k, n));
  const bool sum = rank(BinaryMatrix::vconcat(c.generator(), dual(c).generator())) == n;
  t.expect(sum == is_lcd(c), "direct-sum criterion disagrees with LCD on " + describe(c));
}

void split(Rng& rng, Trial& t) {
  const std::size_t n = pick(rng, 4, 14);
  const std::size_t k = pick(rng, 2, n - 2);
  const LinearCode c = sample(rng, k, n, [](const LinearCode& x) {
    if (hull_dim(x) != 0 || min_weight(x) < 2) return false;
    const auto dd = dual_distance(x);
    return dd && *dd >= 2;
  });
  for (std::size_t i = 0; i < n; ++i) {
    const SplitWitness w = split_witness(c, i);
    t.expect(w.shortened_is_lcd != w.punctured_is_lcd,
             "coordinate " + std::to_string(i) + " breaks the dichotomy on " + describe(c));
  }
}

void punctured(Rng& rng, Trial& t) {
  const std::size_t k = 2 * pick(rng, 1, 5);
  const std::size_t n = pick(rng, k + 1, 16);
  const LinearCode c = random_even_like_lcd(rng, k, n);
  t.expect(parity_flags(c).even_like, "sampler produced an odd-like code");
  for (std::size_t i = 0; i < n; ++i)
    t.expect(is_lcd_or_zero(puncture(c, i)), "puncture " + std::to_string(i) + " not LCD on " + describe(c));
  t.expect(even_punctured_all_lcd(c), "even_punctured_all_lcd false on " + describe(c));
}

void odd_like(Rng& rng, Trial& t) {
  const std::size_t n = pick(rng, 2, 14);
  const std::size_t k = pick(rng, 1, n);
  // the dual of a code containing 1 is even-like, so an LCD one needs n - k even
  const bool want_ones = rng() % 3 == 0 && (n - k) % 2 == 0 && !(k == 1 && n % 2 == 0);
  LinearCode c = LinearCode::zero(n);
  while (true) {
    BinaryMatrix g = random_matrix(rng, k, n);
    if (want_ones)
      for (std::size_t j = 0; j < n; ++j) g.set(0, j, true);
    if (rank(g) != k) continue;
    c = LinearCode(g);
    if (hull_dim(c) == 0 && !parity_flags(c).even_like) break;
  }
  const auto flags = parity_flags(c);
  const OddLikeWitnesses w = odd_like_witnesses(c);
  if (flags.has_all_ones) {
    t.expect(w.shorten_coords.size() == n, "all-ones code with a non-LCD shortening: " + describe(c));
  } else {
    t.expect(!w.shorten_coords.empty() && !w.puncture_coords.empty(), "empty witness list on " + describe(c));
  }
  for (auto i : w.shorten_coords) t.expect(is_lcd_or_zero(shorten(c, i)), "bad shorten witness");
  for (auto i : w.puncture_coords) t.expect(is_lcd_or_zero(puncture(c, i)), "bad puncture witness");
}

void prop2(Rng& rng, Trial& t) {
  const std::size_t n = pick(rng, 1, 14);
  const std::size_t k = pick(rng, 1, n);
  const LinearCode c(random_full_rank(rng, k, n));
  std::vector<bool> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = rng() & 1u;
  BinaryMatrix g = c.generator();
  BinaryMatrix col(k, 1);
  for (std::size_t i = 0; i < k; ++i) col.set(i, 0, v[i]);
  const BinaryMatrix g2 = BinaryMatrix::hconcat(BinaryMatrix::hconcat(col, col), g);
  t.expect(mat_mul(g2, g2.transpose()) == mat_mul(g, g.transpose()), "Gram matrix changed");
  const LinearCode d = duplicate_column(c, v);
  t.expect(d.length() == n + 2 && d.dimension() == k, "wrong shape");
  t.expect(LinearCode(g2) == d, "duplicate_column differs from (v v G)");
  t.expect(is_lcd(d) == is_lcd(c), "LCD status changed on " + describe(c));
  // two equal nonzero columns give a dual word of weight 2; v = 0 adds zero columns
  const bool nonzero = std::find(v.begin(), v.end(), true) != v.end();
  const auto dd = dual_distance(c);
  if (dd && *dd > 1)
    t.expect(dual_distance(d) == std::optional<std::size_t>(nonzero ? 2 : 1), "dual distance of (v v G) wrong");
}

void nplus1(Rng& rng, Trial& t) {
  const std::size_t k = 2 * pick(rng, 1, 5);
  const std::size_t n = pick(rng, k, 15);
  const LinearCode c = (rng() & 1u) && n > k ? random_even_like_lcd(rng, k, n) : random_lcd(rng, k, n);
  const auto before = parity_flags(c);
  const std::size_t d = min_weight(c);
  const LinearCode e = extend_parity(c);
  const auto after = parity_flags(e);
  const std::size_t d1 = min_weight(e);
  t.expect(e.length() == n + 1 && e.dimension() == k, "wrong shape");
  t.expect(is_lcd(e), "extension not LCD for " + describe(c));
  t.expect(after.even_like != before.even_like, "parity class did not flip for " + describe(c));
  t.expect(d1 == d || d1 == d + 1, "minimum weight outside {d, d+1} for " + describe(c));
  if (after.even_like) t.expect(d1 % 2 == 0, "even-like extension with odd minimum weight");
  if (after.even_like) t.expect(even_punctured_all_lcd(e), "punctures of the extension not LCD");
}

void hull_growth(Rng& rng, Trial& t) {
  const std::size_t n = pick(rng, 2, 16);
  const std::size_t k = pick(rng, 1, n);
  const LinearCode c(random_full_rank(rng, k, n));
  const std::size_t h = hull_dim(c);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t hs = hull_dim(shorten(c, i));
    t.expect(hs <= h + 1, "hull grew by more than one at " + std::to_string(i) + " on " + describe(c));
  }
}

void check_basis(const LinearCode& c, Trial& t) {
  const auto f = parity_flags(c);
  const StructuredBasis b = f.even_like ? hyperbolic_basis(c) : orthonormal_basis(c);
  t.expect(b.kind == (f.even_like ? BasisKind::Hyperbolic : BasisKind::Orthonormal), "wrong basis kind");
  t.expect(satisfies_invariants(b), "basis invariants fail on " + describe(c));
  t.expect(LinearCode::span_of(b.rows) == c, "basis does not span " + describe(c));
}

void basis_random(Rng& rng, Trial& t) {
  const std::size_t n = pick(rng, 1, 16);
  const std::size_t k = pick(rng, 1, std::min<std::size_t>(n, 10));
  check_basis(random_lcd(rng, k, n), t);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"massey", "directsum", "split", "punctured", "oddlike",
                                              "prop2",  "nplus1",    "hull",  "basis"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::size_t trials, std::uint64_t seed) {
  TrialFn fn;
  if (name == "massey") fn = massey;
  else if (name == "directsum") fn = direct_sum;
  else if (name == "split") fn = split;
  else if (name == "punctured") fn = punctured;
  else if (name == "oddlike") fn = odd_like;
  else if (name == "prop2") fn = prop2;
  else if (name == "nplus1") fn = nplus1;
  else if (name == "hull") fn = hull_growth;
  else if (name == "basis") fn = basis_random;
  else throw PreconditionError("unknown suite '" + name + "'");

  SuiteResult result{name, 0, 0, {}};
  Rng rng(seed);
  if (name == "basis") {
    // every classifier output of a few small searches, then random codes
    for (std::size_t n = 2; n <= 10; ++n)
      for (std::size_t k = 1; k <= std::min<std::size_t>(n, 6); ++k)
        for (const auto& rec : classify({n, k, 2, 1, {}})) {
          Trial t;
          try {
            check_basis(rec.code(), t);
          } catch (const Error& e) {
            t.expect(false, e.what());
          }
          ++result.trials;
          if (!t.ok && ++result.failures == 1) result.first_failure = t.why.str();
        }
  }
  for (std::size_t i = 0; i < trials; ++i) {
    Trial t;
    try {
      fn(rng, t);
    } catch (const Error& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    ++result.trials;
    if (!t.ok && ++result.failures == 1) result.first_failure = t.why.str();
  }
  return result;
}

}  // namespace lcd

// Acceptance gates. One PASS/FAIL line per criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lcd/bounds.hpp"
#include "lcd/canonical.hpp"
#include "lcd/classifier.hpp"
#include "lcd/code.hpp"
#include "lcd/errors.hpp"
#include "lcd/io.hpp"
#include "lcd/lcd_theory.hpp"
#include "lcd/properties.hpp"

using namespace lcd;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Instance {
  std::size_t n, k, d, expected;
};

const std::vector<Instance> kReferenceCounts = {
    {17, 4, 8, 2},   {18, 4, 8, 20},  {19, 4, 9, 2},  {20, 4, 10, 1}, {21, 4, 10, 10}, {22, 4, 10, 76},
    {23, 4, 11, 2},  {24, 4, 12, 1},  {17, 5, 7, 10}, {20, 5, 9, 1},  {24, 5, 11, 1},
};

std::vector<std::string> certs(const std::vector<ClassificationRecord>& recs) {
  std::vector<std::string> out;
  for (const auto& r : recs) out.push_back(r.canonical.certificate);
  return out;
}

Outcome formula_conformance() {
  std::set<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t k : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{4}, n - 1, n})
      if (k >= 1 && k <= n) cells.insert({n, k});
    if (n >= 4) cells.insert({n, n - 2});
    if (n >= 8) cells.insert({n, n - 3});
  }
  std::size_t checked = 0;
  std::ostringstream bad;
  for (auto [n, k] : cells) {
    const auto f = formula_dlcd(n, k);
    if (!f) continue;
    ++checked;
    const std::size_t d = d_lcd_exact(n, k);
    if (d != *f) bad << " (" << n << "," << k << "): formula " << *f << " search " << d;
  }
  // the high-rate cells must all be covered
  for (std::size_t n = 4; n <= 12; ++n)
    if (formula_dlcd(n, n - 2) != std::optional<std::size_t>(2)) bad << " no high-rate value at (" << n << "," << n - 2 << ")";
  for (std::size_t n = 8; n <= 12; ++n)
    if (formula_dlcd(n, n - 3) != std::optional<std::size_t>(2)) bad << " no high-rate value at (" << n << "," << n - 3 << ")";
  Outcome o;
  o.pass = bad.str().empty() && checked > 0;
  o.detail = std::to_string(checked) + " cells, exact match" + bad.str();
  return o;
}

Outcome reference_counts() {
  std::ostringstream detail, bad;
  for (const auto& t : kReferenceCounts) {
    const auto recs = classify({t.n, t.k, t.d, 2, {}});
    detail << " [" << t.n << "," << t.k << "," << t.d << "]=" << recs.size();
    if (recs.size() != t.expected) bad << " expected " << t.expected << " for [" << t.n << "," << t.k << "," << t.d << "]";
  }
  return {bad.str().empty(), "counts" + detail.str() + bad.str()};
}

Outcome unique_isodual() {
  const auto recs = classify({8, 4, 3, 1, {}});
  if (recs.size() != 1) return {false, std::to_string(recs.size()) + " classes"};
  const auto c = recs[0].code();
  const bool iso = are_equivalent(c, dual(c));
  return {iso, std::string("1 class, equivalent to its dual: ") + (iso ? "yes" : "no")};
}

Outcome oracle_equivalence() {
  std::size_t instances = 0, classes = 0;
  std::ostringstream bad;
  for (std::size_t n = 1; n <= 9; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t d : {2, 3}) {
        const auto got = classify({n, k, d, 1, {}});
        const auto want = oracle_enumerate(n, k, lcd_predicate(d, 1));
        ++instances;
        classes += got.size();
        if (certs(got) != certs(want))
          bad << " [" << n << "," << k << "," << d << "]: " << got.size() << " vs " << want.size();
      }
  return {bad.str().empty(),
          std::to_string(instances) + " instances, " + std::to_string(classes) + " classes, identical sets" + bad.str()};
}

Outcome property_suites() {
  constexpr std::size_t kTrials = 1000;
  constexpr std::uint64_t kSeed = 20240601;
  std::ostringstream detail, bad;
  for (const auto& name : suite_names()) {
    const auto r = run_suite(name, kTrials, kSeed);
    detail << ' ' << name << '=' << r.trials;
    if (!r.passed()) bad << " " << name << ": " << r.failures << " failures (" << r.first_failure << ")";
  }
  // structured bases of every classifier output used by the other gates
  std::size_t bases = 0;
  auto check = [&](const ClassificationRecord& rec) {
    const auto c = rec.code();
    if (c.dimension() > 10) return;
    const auto b = rec.metrics.is_even_like ? hyperbolic_basis(c) : orthonormal_basis(c);
    ++bases;
    if (!satisfies_invariants(b) || LinearCode::span_of(b.rows) != c) bad << " basis failure";
  };
  for (const auto& t : kReferenceCounts)
    for (const auto& rec : classify({t.n, t.k, t.d, 2, {}})) check(rec);
  for (std::size_t n = 1; n <= 9; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      for (const auto& rec : classify({n, k, 2, 1, {}})) check(rec);
  detail << " classifier-bases=" << bases;
  return {bad.str().empty(), "seed " + std::to_string(kSeed) + ", trials" + detail.str() + bad.str()};
}

Outcome bounds_consistency() {
  std::ostringstream bad;
  std::ifstream seeds_in(LCD_DATA_DIR "/table_exact_seeds.tsv");
  std::ifstream ref_in(LCD_DATA_DIR "/table_reference.tsv");
  if (!seeds_in || !ref_in) return {false, "reference data missing"};
  const auto seeds = read_cell_values(seeds_in);
  const auto reference = read_reference(ref_in);
  try {
    const auto t = build_table(40, seeds);
    for (const auto& e : reference) {
      const auto& c = t.at(e.n, e.k);
      if (c.lower > e.lower || c.upper < e.upper)
        bad << " seeded (" << e.n << "," << e.k << ") " << c.lower << "-" << c.upper;
    }
  } catch (const BoundsContradiction& e) {
    bad << " contradiction: " << e.what();
  }
  const auto bare = build_table(40);
  std::size_t contained = 0;
  for (const auto& e : reference) {
    const auto& c = bare.at(e.n, e.k);
    if (c.lower <= e.lower && e.upper <= c.upper)
      ++contained;
    else
      bad << " unseeded (" << e.n << "," << e.k << ") " << c.lower << "-" << c.upper << " vs " << e.lower << "-" << e.upper;
  }
  const auto w2 = build_table(25, {{23, 7, 9}}, {{25, 7, 10}}).at(25, 7);
  if (!(w2.exact() && w2.lower == 10 && w2.last(BoundSide::Lower)->rule == "odd-witness-2")) bad << " (25,7) not 10 via odd-witness-2";
  const auto w1 = build_table(25, {{24, 14, 5}}, {{25, 14, 6}}).at(25, 14);
  if (!(w1.exact() && w1.lower == 6 && w1.last(BoundSide::Lower)->rule == "odd-witness-1")) bad << " (25,14) not 6 via odd-witness-1";
  return {bad.str().empty(), std::to_string(seeds.size()) + " seeds without contradiction, " + std::to_string(contained) +
                                 "/" + std::to_string(reference.size()) + " reference intervals contained, odd-witness derivations" +
                                 bad.str()};
}

Outcome determinism() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  // 8 as well, so the merge is exercised on single-core machines
  std::vector<unsigned> counts{1u, 4u, hw, 8u};
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
  std::string label;
  for (auto c : counts) label += (label.empty() ? "" : ",") + std::to_string(c);
  std::ostringstream bad;
  for (const auto& t : kReferenceCounts) {
    std::string first;
    for (unsigned threads : counts) {
      ClassifyOptions o;
      o.threads = threads;
      std::ostringstream out;
      write_code_db(out, {t.n, t.k, t.d, 2, ""}, classify({t.n, t.k, t.d, 2, {}}, o));
      if (first.empty())
        first = out.str();
      else if (out.str() != first)
        bad << " [" << t.n << "," << t.k << "," << t.d << "] differs at " << threads << " threads";
    }
  }
  return {bad.str().empty(), "threads {" + label + "} (max " + std::to_string(hw) + "), byte-identical databases" + bad.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"C1 formula conformance", formula_conformance},
      {"C2 classification counts", reference_counts},
      {"C3 [8,4,3] unique and isodual", unique_isodual},
      {"C4 oracle equivalence n<=9", oracle_equivalence},
      {"C5 property suites", property_suites},
      {"C6 bounds consistency", bounds_consistency},
      {"C7 thread determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}

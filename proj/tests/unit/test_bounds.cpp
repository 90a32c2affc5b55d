#include <doctest.h>

#include <fstream>

#include "lcd/bounds.hpp"
#include "lcd/classifier.hpp"
#include "lcd/io.hpp"

using namespace lcd;

TEST_CASE("formula examples") {
  CHECK(formula_dlcd(10, 2) == std::optional<std::size_t>(6));
  CHECK(formula_dlcd(13, 3) == std::optional<std::size_t>(6));
  CHECK(formula_dlcd(15, 4) == std::optional<std::size_t>(6));
  CHECK(formula_dlcd(16, 12) == std::optional<std::size_t>(2));
  CHECK(formula_dlcd(12, 1) == std::optional<std::size_t>(11));
  CHECK(formula_dlcd(13, 1) == std::optional<std::size_t>(13));
  CHECK(formula_dlcd(9, 9) == std::optional<std::size_t>(1));
  CHECK(formula_dlcd(9, 8) == std::optional<std::size_t>(2));
  CHECK(formula_dlcd(10, 9) == std::optional<std::size_t>(1));
  CHECK(formula_dlcd(34, 5) == std::optional<std::size_t>(16));  // 34 = 3 mod 31
  CHECK_FALSE(formula_dlcd(32, 5).has_value());
  CHECK_FALSE(formula_dlcd(20, 8).has_value());
  CHECK_FALSE(formula_dlcd(3, 0).has_value());
}

TEST_CASE("griesmer") {
  CHECK(griesmer_upper(8, 4) == 4);
  CHECK(griesmer_upper(7, 4) == 3);
  for (std::size_t n = 1; n < 30; ++n) CHECK(griesmer_upper(n, 1) == n);
  CHECK(griesmer_upper(5, 5) == 1);
}

TEST_CASE("formulas agree with exhaustive search") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      if (auto f = formula_dlcd(n, k)) {
        CAPTURE(n);
        CAPTURE(k);
        CHECK(*f == d_lcd_exact(n, k));
      }
}

TEST_CASE("worked derivations") {
  {
    const auto t = build_table(25, {{23, 7, 9}}, {{25, 7, 10}});
    const auto& c = t.at(25, 7);
    CHECK(c.lower == 10);
    CHECK(c.upper == 10);
    REQUIRE(c.last(BoundSide::Lower));
    CHECK(c.last(BoundSide::Lower)->rule == "odd-witness-2");
  }
  {
    const auto t = build_table(25, {{24, 14, 5}}, {{25, 14, 6}});
    const auto& c = t.at(25, 14);
    CHECK(c.lower == 6);
    CHECK(c.upper == 6);
    CHECK(c.last(BoundSide::Lower)->rule == "odd-witness-1");
  }
  {
    // dd2: (n0, k0) = 2 forces 2 along the diagonal
    const auto t = build_table(20, {{6, 3, 2}});
    for (std::size_t i = 1; i + 6 <= 20; ++i) {
      CHECK(t.at(6 + i, 3 + i).upper == 2);
      CHECK(t.at(6 + i, 3 + i).lower == 2);
    }
  }
}

TEST_CASE("contradictions carry provenance") {
  try {
    build_table(12, {{10, 2, 4}});
    FAIL("expected a contradiction");
  } catch (const BoundsContradiction& e) {
    CHECK(std::string(e.what()).find("(10,2)") != std::string::npos);
  }
  CHECK_THROWS_AS(build_table(65), PreconditionError);
}

TEST_CASE("propagation is idempotent and monotone") {
  const auto t = build_table(30);
  const auto again = propagate(t);
  for (std::size_t i = 0; i < t.cells().size(); ++i) {
    CHECK(t.cells()[i].lower == again.cells()[i].lower);
    CHECK(t.cells()[i].upper == again.cells()[i].upper);
  }
  for (const auto& c : t.cells()) {
    CHECK(1 <= c.lower);
    CHECK(c.lower <= c.upper);
    CHECK(c.upper <= c.n - c.k + 1);
  }
}

TEST_CASE("oracle exact values lie inside propagated intervals") {
  std::vector<CellValue> seeds;
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 1; k <= n; ++k) seeds.push_back({n, k, d_lcd_exact(n, k)});
  const auto seeded = build_table(14, seeds);
  const auto bare = build_table(14);
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      if (n > 9 && k > 4) continue;
      const std::size_t d = d_lcd_exact(n, k);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(bare.at(n, k).lower <= d);
      CHECK(d <= bare.at(n, k).upper);
      CHECK(seeded.at(n, k).lower <= d);
      CHECK(d <= seeded.at(n, k).upper);
    }
}

TEST_CASE("shipped reference data is consistent") {
  std::ifstream seeds_in(LCD_DATA_DIR "/table_exact_seeds.tsv");
  REQUIRE(seeds_in);
  const auto seeds = read_cell_values(seeds_in);
  CHECK(seeds.size() > 300);
  CHECK_NOTHROW(build_table(40, seeds));
}

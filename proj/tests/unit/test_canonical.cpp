#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lcd/canonical.hpp"
#include "lcd/code.hpp"
#include "lcd/errors.hpp"

using namespace lcd;

namespace {

LinearCode random_code(std::mt19937_64& rng, std::size_t k, std::size_t n) {
  while (true) {
    BinaryMatrix m(k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng() & 1u);
    if (rank(m) == k) return LinearCode(m);
  }
}

LinearCode permuted(const LinearCode& c, const std::vector<std::size_t>& perm) {
  BinaryMatrix m(c.dimension(), c.length());
  for (std::size_t i = 0; i < c.dimension(); ++i)
    for (std::size_t j = 0; j < c.length(); ++j) m.set(i, perm[j], c.generator().get(i, j));
  return LinearCode(m);
}

std::vector<std::vector<std::size_t>> automorphisms(const LinearCode& c) {
  std::vector<std::size_t> perm(c.length());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    if (permuted(c, perm) == c) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool brute_equivalent(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length() || a.dimension() != b.dimension()) return false;
  std::vector<std::size_t> perm(a.length());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (permuted(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("certificate layout") {
  const auto m = BinaryMatrix::from_strings({"101", "011"});
  const std::string cert = certificate_of(m);
  REQUIRE(cert.size() == 5);
  CHECK(cert[0] == 0);
  CHECK(cert[1] == 3);
  CHECK(cert[2] == 0);
  CHECK(cert[3] == 2);
  CHECK(static_cast<unsigned char>(cert[4]) == 0b10101100);
}

TEST_CASE("canonical form is invariant under column permutations") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 1 + rng() % 20, k = 1 + rng() % std::min<std::size_t>(n, 8);
    const auto c = random_code(rng, k, n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto f = canonical_form(c);
    CHECK(f == canonical_form(permuted(c, perm)));
    CHECK(rref(f.matrix).matrix == f.matrix);
    CHECK(f.matrix.rows() == k);
    CHECK(are_equivalent(c, LinearCode(f.matrix)));
  }
}

TEST_CASE("equivalence agrees with brute force over all permutations") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + rng() % 6, k = 1 + rng() % n;
    const auto a = random_code(rng, k, n);
    const auto b = random_code(rng, k, n);
    CHECK(are_equivalent(a, b) == brute_equivalent(a, b));
  }
  CHECK_FALSE(are_equivalent(LinearCode::full_space(2), LinearCode::repetition(2)));
}

TEST_CASE("column orbits match the automorphism group") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 2 + rng() % 6, k = 1 + rng() % n;
    const auto c = random_code(rng, k, n);
    const auto cols = column_values(c);
    const auto lab = canonical_labeling(k, cols);
    const auto autos = automorphisms(c);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        bool same = false;
        for (const auto& p : autos) same |= p[i] == j;
        CHECK((lab.column_orbit[i] == lab.column_orbit[j]) == same);
      }
  }
}

TEST_CASE("column images follow the canonical matrix") {
  const auto c = LinearCode(BinaryMatrix::from_strings({"1101000", "0110100", "0011010", "0001101"}));
  const auto cols = column_values(c);
  const auto lab = canonical_labeling(4, cols);
  auto images = lab.column_image;
  std::sort(images.begin(), images.end());
  CHECK(images == column_values(LinearCode(lab.form.matrix)));
}

TEST_CASE("labeling preconditions") {
  const std::vector<std::uint64_t> cols{1, 1};
  CHECK_THROWS_AS(canonical_labeling(2, cols), PreconditionError);
}

TEST_CASE("orbits of highly symmetric codes") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    // few distinct columns, each repeated
    const std::size_t k = 1 + rng() % 4;
    std::vector<std::uint64_t> cols;
    while (cols.size() < 8) {
      const std::uint64_t v = rng() % (std::uint64_t{1} << k);
      const std::size_t reps = 1 + rng() % 3;
      for (std::size_t i = 0; i < reps && cols.size() < 8; ++i) cols.push_back(v);
    }
    for (std::size_t i = 0; i < k; ++i) cols[i] = std::uint64_t{1} << i;
    const auto c = code_from_columns(k, cols);
    const auto lab = canonical_labeling(k, column_values(c));
    const auto autos = automorphisms(c);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        bool same = false;
        for (const auto& p : autos) same |= p[i] == j;
        CHECK((lab.column_orbit[i] == lab.column_orbit[j]) == same);
      }
  }
  // parity-check code [n, n-1]: every column in one orbit
  for (std::size_t n = 3; n <= 20; ++n) {
    std::vector<std::uint64_t> cols;
    for (std::size_t i = 0; i + 1 < n; ++i) cols.push_back(std::uint64_t{1} << i);
    cols.push_back((std::uint64_t{1} << (n - 1)) - 1);
    const auto lab = canonical_labeling(n - 1, cols);
    for (std::size_t i = 0; i < n; ++i) CHECK(lab.column_orbit[i] == 0);
    CHECK(lab.leaves < 10 * n * n);
  }
}

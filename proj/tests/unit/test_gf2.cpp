#include <doctest.h>

#include <random>

#include "lcd/errors.hpp"
#include "lcd/gf2.hpp"

using namespace lcd;

namespace {

BinaryMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  BinaryMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1u);
  return m;
}

// naive O(n^3) elimination on vector<vector<int>>
std::size_t naive_rank(const BinaryMatrix& m) {
  std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.get(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && !a[p][c]) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != r && a[i][c])
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] ^= a[r][j];
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("construction and access") {
  auto m = BinaryMatrix::from_strings({"101", "011"});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.get(0, 0));
  CHECK_FALSE(m.get(0, 1));
  CHECK(m.to_strings() == std::vector<std::string>{"101", "011"});
  m.flip(1, 0);
  CHECK(m.to_strings()[1] == "111");
  CHECK(m.row_weight(1) == 3);
  CHECK_THROWS_AS(BinaryMatrix::from_strings({"10", "1"}), DimensionError);
  CHECK_THROWS_AS(BinaryMatrix::from_strings({"1x"}), DimensionError);
  CHECK(BinaryMatrix::from_strings({}, 4).cols() == 4);
}

TEST_CASE("identity has full rank, all-ones has rank 1") {
  for (std::size_t n : {1u, 7u, 64u, 65u, 130u}) {
    CHECK(rank(BinaryMatrix::identity(n)) == n);
    CHECK(rank(BinaryMatrix::all_ones(n, n)) == 1);
  }
}

TEST_CASE("rref matches naive elimination and keeps the shape") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 140;
    const auto m = random_matrix(rng, r, c);
    const auto res = rref(m);
    CHECK(res.matrix.rows() == r);
    CHECK(res.matrix.cols() == c);
    CHECK(res.pivots.size() == naive_rank(m));
    CHECK(rank(m) == res.pivots.size());
    for (std::size_t i = 0; i < res.pivots.size(); ++i)
      for (std::size_t j = 0; j < r; ++j) CHECK(res.matrix.get(j, res.pivots[i]) == (i == j));
    for (std::size_t i = res.pivots.size(); i < r; ++i) CHECK(res.matrix.row_is_zero(i));
  }
}

TEST_CASE("mat_mul, transpose and nullspace") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 70;
    const auto m = random_matrix(rng, r, c);
    CHECK(m.transpose().transpose() == m);
    const auto ns = nullspace_basis(m);
    CHECK(ns.rows() == c - rank(m));
    CHECK(rank(ns) == ns.rows());
    if (ns.rows()) {
      const auto prod = mat_mul(m, ns.transpose());
      for (std::size_t i = 0; i < prod.rows(); ++i) CHECK(prod.row_is_zero(i));
    }
  }
  CHECK_THROWS_AS(mat_mul(BinaryMatrix(2, 3), BinaryMatrix(2, 3)), DimensionError);
}

TEST_CASE("is_nonsingular") {
  CHECK(is_nonsingular(BinaryMatrix::identity(5)));
  CHECK_FALSE(is_nonsingular(BinaryMatrix::all_ones(2, 2)));
  CHECK(is_nonsingular(BinaryMatrix::from_strings({"01", "11"})));
  CHECK_THROWS_AS(is_nonsingular(BinaryMatrix(2, 3)), DimensionError);
}

TEST_CASE("row and column edits") {
  auto m = BinaryMatrix::from_strings({"1100", "0110"});
  CHECK(m.delete_column(0).to_strings() == std::vector<std::string>{"100", "110"});
  CHECK(BinaryMatrix::hconcat(m, m).to_strings()[0] == "11001100");
  CHECK(BinaryMatrix::vconcat(m, m).rows() == 4);
  m.add_row(0, 1);
  CHECK(m.to_strings()[0] == "1010");
  m.swap_rows(0, 1);
  CHECK(m.to_strings()[0] == "0110");
  CHECK(m.slice_rows(1, 1).to_strings()[0] == "1010");
  CHECK(dot(m.row(0), m.row(1)) == true);
}

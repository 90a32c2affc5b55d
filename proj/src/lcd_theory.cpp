#include "lcd/lcd_theory.hpp"

#include <string>
#include <utility>

#include "lcd/errors.hpp"

namespace lcd {

namespace {

using Row = std::vector<std::uint64_t>;

Row row_of(const BinaryMatrix& m, std::size_t r) { return Row(m.row(r).begin(), m.row(r).end()); }

bool dot(const Row& a, const Row& b) { return lcd::dot(a, b); }

void add_into(Row& dst, const Row& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

Row sum(const Row& a, const Row& b) {
  Row out = a;
  add_into(out, b);
  return out;
}

BinaryMatrix matrix_of(const std::vector<Row>& rows, std::size_t cols) {
  BinaryMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void require_lcd(const LinearCode& code, const char* op) {
  if (code.dimension() == 0) throw DegenerateCode(std::string(op) + ": zero code");
  if (!is_lcd(code)) throw PreconditionError(std::string(op) + ": code is not LCD");
}

// w <- w + (w.y) x + (w.x) y, making w orthogonal to a hyperbolic pair (x, y).
void reduce_against_pair(Row& w, const Row& x, const Row& y) {
  const bool wy = dot(w, y);
  const bool wx = dot(w, x);
  if (wy) add_into(w, x);
  if (wx) add_into(w, y);
}

StructuredBasis checked(StructuredBasis basis, const LinearCode& code) {
  if (!satisfies_invariants(basis))
    throw VerificationError("structured basis violates its Gram conditions");
  if (LinearCode::span_of(basis.rows) != code)
    throw VerificationError("structured basis does not span the code");
  return basis;
}

}  // namespace

bool is_lcd(const LinearCode& code) {
  if (code.dimension() == 0) throw DegenerateCode("is_lcd: the zero code is not a valid input");
  return is_nonsingular(gram_matrix(code));
}

bool satisfies_invariants(const StructuredBasis& basis) {
  const BinaryMatrix gram = mat_mul(basis.rows, basis.rows.transpose());
  const std::size_t k = gram.rows();
  if (basis.kind == BasisKind::Orthonormal) return gram == BinaryMatrix::identity(k);
  if (k % 2) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const bool paired = (i / 2 == j / 2) && i != j;
      if (gram.get(i, j) != paired) return false;
    }
  return true;
}

StructuredBasis orthonormal_basis(const LinearCode& code) {
  require_lcd(code, "orthonormal_basis");
  if (parity_flags(code).even_like)
    throw PreconditionError("orthonormal_basis: code is even-like");
  const auto& g = code.generator();
  std::vector<Row> rest;
  for (std::size_t r = 0; r < g.rows(); ++r) rest.push_back(row_of(g, r));
  std::vector<Row> chosen;
  while (!rest.empty()) {
    std::size_t odd = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (dot(rest[i], rest[i])) {
        odd = i;
        break;
      }
    if (odd < rest.size()) {
      Row c = std::move(rest[odd]);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(odd));
      for (auto& w : rest)
        if (dot(w, c)) add_into(w, c);
      chosen.push_back(std::move(c));
      continue;
    }
    // The remainder carries an alternating nonsingular form: take a hyperbolic
    // pair (x, y) from it and trade it, together with an already chosen c,
    // for the orthonormal triple c+x+y, c+x, c+y.
    if (chosen.empty()) throw VerificationError("orthonormal_basis: no odd vector available");
    Row x = std::move(rest.front());
    rest.erase(rest.begin());
    std::size_t partner = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (dot(x, rest[i])) {
        partner = i;
        break;
      }
    if (partner == rest.size()) throw VerificationError("orthonormal_basis: degenerate remainder");
    Row y = std::move(rest[partner]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(partner));
    for (auto& w : rest) reduce_against_pair(w, x, y);
    Row c = std::move(chosen.back());
    chosen.pop_back();
    chosen.push_back(sum(sum(c, x), y));
    chosen.push_back(sum(c, x));
    chosen.push_back(sum(c, y));
  }
  return checked({BasisKind::Orthonormal, matrix_of(chosen, code.length())}, code);
}

StructuredBasis hyperbolic_basis(const LinearCode& code) {
  require_lcd(code, "hyperbolic_basis");
  if (!parity_flags(code).even_like)
    throw PreconditionError("hyperbolic_basis: code is odd-like");
  if (code.dimension() % 2)
    throw VerificationError("hyperbolic_basis: even-like LCD code of odd dimension");
  const auto& g = code.generator();
  std::vector<Row> rest;
  for (std::size_t r = 0; r < g.rows(); ++r) rest.push_back(row_of(g, r));
  std::vector<Row> chosen;
  while (!rest.empty()) {
    Row x = std::move(rest.front());
    rest.erase(rest.begin());
    std::size_t partner = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (dot(x, rest[i])) {
        partner = i;
        break;
      }
    if (partner == rest.size()) throw VerificationError("hyperbolic_basis: degenerate Gram form");
    Row y = std::move(rest[partner]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(partner));
    for (auto& w : rest) reduce_against_pair(w, x, y);
    chosen.push_back(std::move(x));
    chosen.push_back(std::move(y));
  }
  return checked({BasisKind::Hyperbolic, matrix_of(chosen, code.length())}, code);
}

LinearCode extend_parity(const LinearCode& code) {
  require_lcd(code, "extend_parity");
  if (code.dimension() % 2)
    throw PreconditionError("extend_parity: dimension must be even (got " +
                            std::to_string(code.dimension()) + ")");
  const StructuredBasis basis =
      parity_flags(code).even_like ? hyperbolic_basis(code) : orthonormal_basis(code);
  const BinaryMatrix ones = BinaryMatrix::all_ones(basis.rows.rows(), 1);
  return LinearCode(BinaryMatrix::hconcat(ones, basis.rows));
}

LinearCode duplicate_column(const LinearCode& code, const std::vector<bool>& v) {
  if (v.size() != code.dimension())
    throw DimensionError("duplicate_column: vector has " + std::to_string(v.size()) +
                         " entries, expected " + std::to_string(code.dimension()));
  BinaryMatrix column(code.dimension(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) column.set(i, 0, v[i]);
  return LinearCode(
      BinaryMatrix::hconcat(BinaryMatrix::hconcat(column, column), code.generator()));
}

SplitWitness split_witness(const LinearCode& code, std::size_t coordinate) {
  require_lcd(code, "split_witness");
  if (coordinate >= code.length())
    throw PreconditionError("split_witness: coordinate out of range");
  if (min_weight(code) < 2) throw PreconditionError("split_witness: requires d >= 2");
  const auto dd = dual_distance(code);
  if (dd && *dd < 2) throw PreconditionError("split_witness: requires dual distance >= 2");
  return {coordinate, is_lcd_or_zero(shorten(code, coordinate)),
          is_lcd_or_zero(puncture(code, coordinate))};
}

OddLikeWitnesses odd_like_witnesses(const LinearCode& code) {
  require_lcd(code, "odd_like_witnesses");
  if (parity_flags(code).even_like)
    throw PreconditionError("odd_like_witnesses: code is even-like");
  OddLikeWitnesses out;
  for (std::size_t i = 0; i < code.length(); ++i) {
    if (is_lcd_or_zero(shorten(code, i))) out.shorten_coords.push_back(i);
    if (is_lcd_or_zero(puncture(code, i))) out.puncture_coords.push_back(i);
  }
  return out;
}

bool even_punctured_all_lcd(const LinearCode& code) {
  require_lcd(code, "even_punctured_all_lcd");
  if (!parity_flags(code).even_like)
    throw PreconditionError("even_punctured_all_lcd: code is odd-like");
  for (std::size_t i = 0; i < code.length(); ++i)
    if (!is_lcd_or_zero(puncture(code, i))) return false;
  return true;
}

namespace {

// Pads `code` with Prop. 2 column pairs (v = e_1) until it reaches length n.
LinearCode pad_with_pairs(LinearCode code, std::size_t n) {
  std::vector<bool> v(code.dimension(), false);
  v[0] = true;
  while (code.length() + 2 <= n) code = duplicate_column(code, v);
  return code;
}

}  // namespace

LinearCode even_like_lcd_code(std::size_t n, std::size_t k) {
  if (k == 0 || k % 2 || n <= k)
    throw PreconditionError("even_like_lcd_code: requires even k >= 2 and n > k");
  if (k == 2) {
    if (n % 2 == 0) throw PreconditionError("even_like_lcd_code: k = 2 needs odd n");
    // <1^a 1^b 0^c, 1^a 0^b 1^c> with a = n - 2, b = c = 1
    BinaryMatrix g(2, n);
    for (std::size_t c = 0; c < n - 2; ++c) {
      g.set(0, c, true);
      g.set(1, c, true);
    }
    g.set(0, n - 2, true);
    g.set(1, n - 1, true);
    return LinearCode(g);
  }
  if (n % 2) return pad_with_pairs(dual(LinearCode::repetition(k + 1)), n);
  // dual of <1110...0, 11...1>, length k + 2
  BinaryMatrix g(2, k + 2);
  for (std::size_t c = 0; c < k + 2; ++c) {
    g.set(0, c, c < 3);
    g.set(1, c, true);
  }
  return pad_with_pairs(dual(LinearCode(g)), n);
}

LinearCode odd_like_lcd_code(std::size_t n, std::size_t k) {
  if (k < 2 || n < k + 2) throw PreconditionError("odd_like_lcd_code: requires k >= 2, n >= k + 2");
  // Column counts decide the Gram matrix; for k = 2 and odd n every LCD code
  // without zero columns is even-like.
  if (k == 2 && n % 2) throw PreconditionError("odd_like_lcd_code: no such code for k = 2, odd n");
  std::vector<std::uint64_t> columns;
  std::size_t first_single = 0;
  if ((n - k) % 2) {
    // e1+e2+e3, e1+e2, e1+e3, e2+e3: Gram contribution I_3 from four columns.
    columns = {0b111, 0b011, 0b101, 0b110};
    first_single = 3;
  }
  for (std::size_t i = first_single; i < k; ++i) columns.push_back(std::uint64_t{1} << i);
  return pad_with_pairs(code_from_columns(k, columns), n);
}

}  // namespace lcd

#include "lcd/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "lcd/errors.hpp"

namespace lcd {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + tok + "'");
  return v;
}

}  // namespace

std::vector<CodeFileRecord> parse_code_records(std::istream& in) {
  std::vector<CodeFileRecord> records;
  std::vector<std::string> comments, pending;
  std::size_t lineno = 0;
  std::size_t n = 0, k = 0, header_line = 0;
  bool in_record = false;
  BinaryMatrix rows;

  auto finish = [&](std::size_t at) {
    if (!in_record) return;
    if (rows.rows() != k)
      throw ParseError(at, "expected " + std::to_string(k) + " rows, got " + std::to_string(rows.rows()));
    if (rank(rows) != k) throw ParseError(header_line, "generator rows are linearly dependent");
    records.push_back({rows, LinearCode(rows), std::move(comments), header_line});
    comments.clear();
    in_record = false;
  };

  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = trim(raw);
    if (line == "---") {
      if (!in_record) throw ParseError(lineno, "separator without a preceding record");
      finish(lineno);
      continue;
    }
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      auto text = trim(line.substr(hash + 1));
      if (in_record && rows.rows() < k)
        comments.push_back(std::move(text));
      else
        pending.push_back(std::move(text));
      line = trim(line.substr(0, hash));
    }
    if (line.empty()) continue;
    if (!in_record || rows.rows() == k) {
      if (in_record) throw ParseError(lineno, "too many rows (expected " + std::to_string(k) + ")");
      const auto toks = split_ws(line);
      if (toks.size() != 2) throw ParseError(lineno, "expected header 'n k'");
      n = parse_count(toks[0], lineno, "n");
      k = parse_count(toks[1], lineno, "k");
      if (k > n) throw ParseError(lineno, "k exceeds n");
      header_line = lineno;
      comments = std::move(pending);
      pending.clear();
      rows = BinaryMatrix(0, n);
      in_record = true;
      continue;
    }
    if (line.size() != n)
      throw ParseError(lineno, "row has length " + std::to_string(line.size()) + ", expected " + std::to_string(n));
    if (line.find_first_not_of("01") != std::string::npos)
      throw ParseError(lineno, "illegal character in row (only 0 and 1 allowed)");
    rows.append_row_string(line);
  }
  if (in_record) finish(lineno);
  return records;
}

std::vector<CodeFileRecord> parse_code_records(const std::string& text) {
  std::istringstream in(text);
  return parse_code_records(in);
}

LinearCode parse_code(std::istream& in) {
  auto records = parse_code_records(in);
  if (records.size() != 1)
    throw ParseError(0, "expected exactly one code, found " + std::to_string(records.size()));
  return std::move(records.front().code);
}

LinearCode parse_code(const std::string& text) {
  std::istringstream in(text);
  return parse_code(in);
}

void write_code(std::ostream& out, const BinaryMatrix& generator) {
  out << generator.cols() << ' ' << generator.rows() << '\n';
  for (const auto& row : generator.to_strings()) out << row << '\n';
}

void write_code_db(std::ostream& out, const DatabaseHeader& header,
                   const std::vector<ClassificationRecord>& records) {
  out << "# lcd-db n=" << header.n << " k=" << header.k << " dmin=" << header.d_min
      << " ddualmin=" << header.d_dual_min << " count=" << records.size() << '\n';
  if (!header.timestamp.empty()) out << "# generated " << header.timestamp << '\n';
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) out << "---\n";
    const auto& m = records[i].metrics;
    out << "# d=" << (m.d ? std::to_string(*m.d) : "-") << " ddual="
        << (m.d_dual ? std::to_string(*m.d_dual) : "-") << " hull=" << m.hull_dim << '\n';
    write_code(out, records[i].canonical.matrix);
  }
}

std::vector<CellValue> read_cell_values(std::istream& in) {
  std::vector<CellValue> out;
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 3) throw ParseError(lineno, "expected 'n k value'");
    CellValue v{parse_count(toks[0], lineno, "n"), parse_count(toks[1], lineno, "k"),
                parse_count(toks[2], lineno, "value")};
    if (v.k == 0 || v.k > v.n) throw ParseError(lineno, "need 1 <= k <= n");
    if (v.value == 0 || v.value > v.n - v.k + 1)
      throw ParseError(lineno, "value outside 1..n-k+1");
    out.push_back(v);
  }
  return out;
}

std::vector<ReferenceEntry> read_reference(std::istream& in) {
  std::vector<ReferenceEntry> out;
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 5) throw ParseError(lineno, "expected 'n k lower upper annotation'");
    ReferenceEntry e{parse_count(toks[0], lineno, "n"), parse_count(toks[1], lineno, "k"),
                     parse_count(toks[2], lineno, "lower"), parse_count(toks[3], lineno, "upper"), toks[4]};
    if (e.lower > e.upper) throw ParseError(lineno, "lower exceeds upper");
    out.push_back(std::move(e));
  }
  return out;
}

void write_bounds_tsv(std::ostream& out, const BoundsTable& table) {
  out << "n\tk\tlower\tupper\tstatus\tprovenance\n";
  for (const auto& c : table.cells()) {
    out << c.n << '\t' << c.k << '\t' << c.lower << '\t' << c.upper << '\t'
        << (c.exact() ? "exact" : "interval") << '\t';
    const Provenance* lo = c.last(BoundSide::Lower);
    const Provenance* up = c.last(BoundSide::Upper);
    auto describe = [&](const Provenance* p) {
      if (!p) return std::string("init");
      std::string s = p->rule;
      for (const auto& a : p->antecedents) s += "(" + std::to_string(a.n) + "," + std::to_string(a.k) + ")";
      return s;
    };
    out << "L:" << describe(lo) << " U:" << describe(up) << '\n';
  }
}

}  // namespace lcd

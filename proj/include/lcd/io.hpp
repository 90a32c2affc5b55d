#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "lcd/bounds.hpp"
#include "lcd/classifier.hpp"
#include "lcd/code.hpp"
#include "lcd/gf2.hpp"

namespace lcd {

/// One code as it appeared in a file.
struct CodeFileRecord {
  BinaryMatrix raw;  ///< rows exactly as written
  LinearCode code;   ///< rref-normalized
  std::vector<std::string> comments;
  std::size_t line = 0;  ///< line of the "n k" header
};

/// Parses one or more code records ("---" separates records). Throws
/// ParseError with the offending line on a bad header, ragged rows, illegal
/// characters or rank deficiency.
std::vector<CodeFileRecord> parse_code_records(std::istream& in);
std::vector<CodeFileRecord> parse_code_records(const std::string& text);

/// Exactly one code.
LinearCode parse_code(std::istream& in);
LinearCode parse_code(const std::string& text);

void write_code(std::ostream& out, const BinaryMatrix& generator);

struct DatabaseHeader {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d_min = 1;
  std::size_t d_dual_min = 1;
  std::string timestamp;  ///< written as a comment when non-empty
};

/// Records must be sorted by certificate.
void write_code_db(std::ostream& out, const DatabaseHeader& header,
                   const std::vector<ClassificationRecord>& records);

/// "n k value" lines with '#' comments.
std::vector<CellValue> read_cell_values(std::istream& in);
/// "n k lower upper annotation" lines with '#' comments.
std::vector<ReferenceEntry> read_reference(std::istream& in);

/// Columns n, k, lower, upper, status, provenance; one header line.
void write_bounds_tsv(std::ostream& out, const BoundsTable& table);

}  // namespace lcd

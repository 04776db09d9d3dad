#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ontobench {

struct CsvRow {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

/// A CSV file with a header row. Blank lines and lines starting with '#'
/// are skipped.
struct CsvDocument {
  std::string file;
  std::vector<std::string> header;
  std::vector<CsvRow> rows;

  /// Index of `name` in the header; throws `LoadError` if missing.
  std::size_t column(std::string_view name) const;
  /// Field `name` of `row`, or "" when the row is short.
  const std::string& get(const CsvRow& row, std::size_t column) const;
};

/// RFC 4180 style: quoted fields may contain commas, doubled quotes and
/// newlines. Throws `ParseError` for an unterminated quote.
CsvDocument parse_csv(std::string_view text, const std::string& file = {});

/// Quotes a field when it contains a comma, quote or line break.
std::string csv_escape(std::string_view field);
/// One LF-terminated line.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace ontobench

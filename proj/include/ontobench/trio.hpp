#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontobench/errors.hpp"
#include "ontobench/zinc.hpp"

namespace ontobench {

/// Lines of the source file a record was read from (1-based, inclusive).
struct SourceSpan {
  std::string file;
  std::size_t start_line = 0;
  std::size_t end_line = 0;

  std::string to_string() const;
};

/// One dict of a Trio file: the name/value pairs between `---` separators.
struct TrioRecord {
  std::vector<std::pair<std::string, zinc::Scalar>> pairs;
  SourceSpan span;

  /// The value of `name`, or nullptr.
  const zinc::Scalar* find(std::string_view name) const;

  /// Structural equality of the pairs; the span is ignored.
  bool same_pairs(const TrioRecord& other) const { return pairs == other.pairs; }
};

struct TrioParseResult {
  std::vector<TrioRecord> records;
  /// Per-record errors. A record with an error is skipped and parsing resumes
  /// after the next separator line.
  std::vector<ParseError> errors;

  bool ok() const { return errors.empty(); }
};

/// Parses Trio text. Supported per line: `name` (marker), `name: value` with a
/// Zinc scalar, unquoted single-line strings, `name:` followed by an
/// indented multi-line string, and list/dict values spanning several lines.
/// Lines starting with `//` are comments. Never throws on bad input.
TrioParseResult parse_trio(std::string_view text, const std::string& file = {});

/// Trio text for `records`; `parse_trio` of the result yields the same pairs.
std::string serialize_trio(const std::vector<TrioRecord>& records);

}  // namespace ontobench

#include "ontobench/csv.hpp"

#include "ontobench/errors.hpp"

namespace ontobench {

std::size_t CsvDocument::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw LoadError((file.empty() ? std::string("<input>") : file) +
                  ": missing required column '" + std::string(name) + "'");
}

const std::string& CsvDocument::get(const CsvRow& row, std::size_t column) const {
  static const std::string empty;
  return column < row.fields.size() ? row.fields[column] : empty;
}

CsvDocument parse_csv(std::string_view text, const std::string& file) {
  CsvDocument doc;
  doc.file = file;
  std::size_t pos = 0;
  std::size_t line = 1;
  bool have_header = false;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;
  while (pos < text.size()) {
    std::size_t row_line = line;
    if (text[pos] == '\n' || text[pos] == '\r' || text[pos] == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      if (pos < text.size()) ++pos;
      ++line;
      continue;
    }
    CsvRow row;
    row.line = row_line;
    std::string field;
    bool done = false;
    while (!done) {
      if (pos < text.size() && text[pos] == '"') {
        std::size_t quote_line = line;
        ++pos;
        while (true) {
          if (pos >= text.size()) {
            throw ParseError(SourceLocation{file, quote_line, 0}, "unterminated quoted field");
          }
          char c = text[pos++];
          if (c == '"') {
            if (pos < text.size() && text[pos] == '"') {
              field += '"';
              ++pos;
              continue;
            }
            break;
          }
          if (c == '\n') ++line;
          field += c;
        }
      }
      while (pos < text.size() && text[pos] != ',' && text[pos] != '\n') {
        if (text[pos] != '\r') field += text[pos];
        ++pos;
      }
      row.fields.push_back(std::move(field));
      field.clear();
      if (pos >= text.size()) {
        done = true;
      } else if (text[pos] == ',') {
        ++pos;
      } else {
        ++pos;
        ++line;
        done = true;
      }
    }
    if (!have_header) {
      doc.header = std::move(row.fields);
      have_header = true;
    } else {
      doc.rows.push_back(std::move(row));
    }
  }
  return doc;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(fields[i]);
  }
  out += '\n';
  return out;
}

}  // namespace ontobench

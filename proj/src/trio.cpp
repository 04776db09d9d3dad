#include "ontobench/trio.hpp"

#include <algorithm>
#include <set>

namespace ontobench {

namespace {

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  std::size_t number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), is_space);
}

bool is_separator(std::string_view s) {
  std::size_t n = 0;
  while (n < s.size() && s[n] == '-') ++n;
  return n >= 3 && is_blank(s.substr(n));
}

bool is_comment(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return s.substr(i, 2) == "//";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

/// Net bracket depth of `s`, ignoring brackets inside string literals.
int bracket_depth(std::string_view s) {
  int depth = 0;
  bool in_str = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (in_str) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_str = false;
      }
      continue;
    }
    if (c == '"') in_str = true;
    if (c == '[' || c == '{') ++depth;
    if (c == ']' || c == '}') --depth;
  }
  return depth;
}

class TrioReader {
 public:
  TrioReader(std::string_view text, const std::string& file)
      : lines_(split_lines(text)), file_(file) {}

  TrioParseResult run() {
    std::size_t i = 0;
    while (i < lines_.size()) {
      const Line& line = lines_[i];
      if (is_separator(line.text)) {
        finish_record(line.number > 0 ? line.number - 1 : 0);
        ++i;
        continue;
      }
      if (skipping_ || is_comment(line.text) || is_blank(line.text)) {
        ++i;
        continue;
      }
      i = read_pair(i);
    }
    finish_record(lines_.empty() ? 0 : lines_.back().number);
    return std::move(result_);
  }

 private:
  void error(std::size_t line, std::size_t column, const std::string& message) {
    result_.errors.emplace_back(SourceLocation{file_, line, column}, message);
    skipping_ = true;
  }

  void finish_record(std::size_t end_line) {
    if (!skipping_ && !current_.pairs.empty()) {
      current_.span.file = file_;
      current_.span.end_line = end_line;
      result_.records.push_back(std::move(current_));
    }
    current_ = TrioRecord{};
    names_.clear();
    skipping_ = false;
  }

  /// Reads the pair starting at line `i`; returns the index of the next
  /// unread line.
  std::size_t read_pair(std::size_t i) {
    const Line& line = lines_[i];
    std::string_view text = line.text;
    if (is_space(text.front())) {
      error(line.number, 1, "unexpected indented line");
      return i + 1;
    }
    std::size_t n = 0;
    while (n < text.size() && !is_space(text[n]) && text[n] != ':') ++n;
    std::string name(text.substr(0, n));
    if (!zinc::is_tag_name(name)) {
      error(line.number, 1, "invalid tag name '" + name + "'");
      return i + 1;
    }
    if (names_.count(name)) {
      error(line.number, 1, "duplicate tag '" + name + "' in record");
      return i + 1;
    }
    if (current_.pairs.empty()) current_.span.start_line = line.number;

    std::size_t p = n;
    while (p < text.size() && is_space(text[p])) ++p;
    if (p == text.size()) {
      add(std::move(name), zinc::Marker{});
      return i + 1;
    }
    if (text[p] != ':') {
      error(line.number, p + 1, "expected ':' after tag name");
      return i + 1;
    }
    ++p;
    while (p < text.size() && is_space(text[p])) ++p;
    std::string_view rest = trim(text.substr(p));
    std::size_t value_column = p + 1;

    if (rest.empty()) return read_multiline_string(i, std::move(name));

    std::string value(rest);
    std::size_t j = i + 1;
    if (rest.front() == '[' || rest.front() == '{') {
      while (bracket_depth(value) > 0 && j < lines_.size() &&
             !is_separator(lines_[j].text)) {
        value += '\n';
        value += lines_[j].text;
        ++j;
      }
    }

    zinc::Scalar scalar;
    std::string message;
    std::size_t offset = 0;
    if (zinc::parse_scalar(value, scalar, message, offset)) {
      add(std::move(name), std::move(scalar));
      return j;
    }
    char first = rest.front();
    bool letter = (first >= 'a' && first <= 'z') || (first >= 'A' && first <= 'Z');
    if (letter && j == i + 1) {
      add(std::move(name), zinc::Str{std::string(rest)});
      return j;
    }
    // Map the offset back onto a source line and column.
    std::size_t err_line = line.number;
    std::size_t err_col = value_column + offset;
    std::size_t line_start = 0;
    for (std::size_t k = 0; k < offset && k < value.size(); ++k) {
      if (value[k] == '\n') {
        ++err_line;
        line_start = k + 1;
      }
    }
    if (err_line != line.number) err_col = offset - line_start + 1;
    error(err_line, err_col, message);
    return j;
  }

  std::size_t read_multiline_string(std::size_t i, std::string name) {
    std::size_t j = i + 1;
    std::vector<std::string_view> body;
    while (j < lines_.size() && !lines_[j].text.empty() &&
           is_space(lines_[j].text.front()) && !is_separator(lines_[j].text)) {
      body.push_back(lines_[j].text);
      ++j;
    }
    while (!body.empty() && is_blank(body.back())) body.pop_back();
    std::size_t indent = 0;
    if (!body.empty()) {
      while (indent < body.front().size() && is_space(body.front()[indent])) ++indent;
    }
    std::string value;
    for (std::size_t k = 0; k < body.size(); ++k) {
      std::string_view l = body[k];
      std::size_t strip = 0;
      while (strip < indent && strip < l.size() && is_space(l[strip])) ++strip;
      if (k) value += '\n';
      value += l.substr(strip);
    }
    add(std::move(name), zinc::Str{std::move(value)});
    return j;
  }

  void add(std::string name, zinc::Scalar value) {
    names_.insert(name);
    current_.pairs.emplace_back(std::move(name), std::move(value));
  }

  std::vector<Line> lines_;
  std::string file_;
  TrioParseResult result_;
  TrioRecord current_;
  std::set<std::string> names_;
  bool skipping_ = false;
};

}  // namespace

std::string SourceSpan::to_string() const {
  return (file.empty() ? std::string("<input>") : file) + ':' +
         std::to_string(start_line) + '-' + std::to_string(end_line);
}

const zinc::Scalar* TrioRecord::find(std::string_view name) const {
  for (const auto& [n, v] : pairs) {
    if (n == name) return &v;
  }
  return nullptr;
}

TrioParseResult parse_trio(std::string_view text, const std::string& file) {
  return TrioReader(text, file).run();
}

std::string serialize_trio(const std::vector<TrioRecord>& records) {
  std::string out;
  for (const auto& record : records) {
    for (const auto& [name, value] : record.pairs) {
      out += name;
      if (!value.is<zinc::Marker>()) {
        out += ": ";
        out += zinc::to_zinc(value);
      }
      out += '\n';
    }
    out += "---\n";
  }
  return out;
}

}  // namespace ontobench

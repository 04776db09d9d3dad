#include "ontobench/zinc.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace ontobench::zinc {

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_alpha(char c) { return is_lower(c) || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident(char c) { return is_alpha(c) || is_digit(c) || c == '_'; }
bool is_unit_char(char c) {
  return is_alpha(c) || c == '%' || c == '_' || c == '/' || c == '$' ||
         static_cast<unsigned char>(c) >= 0x80;
}
bool is_symbol_char(char c) {
  return is_ident(c) || c == '-' || c == ':' || c == '.' || c == '~';
}

void append_utf8(std::string& out, unsigned cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  bool parse_top(Scalar& out) {
    skip_ws();
    if (!parse_value(out)) return false;
    skip_ws();
    if (pos_ != text_.size()) return fail("unexpected trailing text");
    return true;
  }

  std::string error;
  std::size_t error_offset = 0;

 private:
  bool fail(std::string message) {
    if (error.empty()) {
      error = std::move(message);
      error_offset = pos_;
    }
    return false;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                         peek() == '\r')) {
      ++pos_;
    }
  }

  bool keyword(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    if (is_ident(peek(word.size()))) return false;
    pos_ += word.size();
    return true;
  }

  bool parse_value(Scalar& out) {
    if (at_end()) return fail("expected a value");
    if (depth_ >= kMaxDepth) return fail("values nested too deeply");
    char c = peek();
    if (c == '"') return parse_str(out);
    if (c == '^') return parse_symbol(out);
    if (c == '[') return parse_list(out);
    if (c == '{') return parse_dict(out);
    if (c == '-' || is_digit(c)) return parse_number(out);
    if (keyword("M")) {
      out = Marker{};
      return true;
    }
    if (keyword("T") || keyword("true")) {
      out = true;
      return true;
    }
    if (keyword("F") || keyword("false")) {
      out = false;
      return true;
    }
    if (keyword("INF")) {
      out = Number{std::numeric_limits<double>::infinity(), {}};
      return true;
    }
    if (keyword("NaN")) {
      out = Number{std::numeric_limits<double>::quiet_NaN(), {}};
      return true;
    }
    return fail("unsupported value");
  }

  bool parse_str(Scalar& out) {
    std::size_t start = pos_;
    ++pos_;
    std::string value;
    while (true) {
      if (at_end()) {
        pos_ = start;
        return fail("unterminated string");
      }
      char c = text_[pos_++];
      if (c == '"') break;
      if (c == '\n') {
        pos_ = start;
        return fail("unterminated string");
      }
      if (c != '\\') {
        value += c;
        continue;
      }
      if (at_end()) {
        pos_ = start;
        return fail("unterminated string");
      }
      char e = text_[pos_++];
      switch (e) {
        case 'b': value += '\b'; break;
        case 'f': value += '\f'; break;
        case 'n': value += '\n'; break;
        case 'r': value += '\r'; break;
        case 't': value += '\t'; break;
        case '"': value += '"'; break;
        case '\\': value += '\\'; break;
        case '$': value += '$'; break;
        case 'u': {
          if (pos_ + 4 > text_.size()) return fail("truncated \\u escape");
          unsigned cp = 0;
          auto r = std::from_chars(text_.data() + pos_, text_.data() + pos_ + 4,
                                   cp, 16);
          if (r.ec != std::errc{} || r.ptr != text_.data() + pos_ + 4) {
            return fail("invalid \\u escape");
          }
          pos_ += 4;
          append_utf8(value, cp);
          break;
        }
        default:
          --pos_;
          return fail(std::string("invalid escape '\\") + e + "'");
      }
    }
    out = Str{std::move(value)};
    return true;
  }

  bool parse_symbol(Scalar& out) {
    ++pos_;
    std::size_t start = pos_;
    while (!at_end() && is_symbol_char(peek())) ++pos_;
    if (pos_ == start) return fail("empty symbol literal");
    out = SymbolLiteral{std::string(text_.substr(start, pos_ - start))};
    return true;
  }

  bool parse_number(Scalar& out) {
    std::size_t start = pos_;
    if (peek() == '-' && text_.substr(pos_, 4) == "-INF" && !is_ident(peek(4))) {
      pos_ += 4;
      out = Number{-std::numeric_limits<double>::infinity(), {}};
      return true;
    }
    if (peek() == '-') ++pos_;
    if (!is_digit(peek())) return fail("invalid number");
    while (is_digit(peek())) ++pos_;
    if (peek() == '.' && is_digit(peek(1))) {
      ++pos_;
      while (is_digit(peek())) ++pos_;
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (is_digit(peek(1)) ||
         ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
      pos_ += 2;
      while (is_digit(peek())) ++pos_;
    }
    double value = 0;
    auto r = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (r.ec != std::errc{} || r.ptr != text_.data() + pos_) {
      pos_ = start;
      return fail("invalid number");
    }
    std::size_t unit_start = pos_;
    while (!at_end() && is_unit_char(peek())) ++pos_;
    out = Number{value, std::string(text_.substr(unit_start, pos_ - unit_start))};
    return true;
  }

  bool parse_list(Scalar& out) {
    ++pos_;
    Nest nest(depth_);
    List items;
    skip_ws();
    while (true) {
      if (at_end()) return fail("unterminated list");
      if (peek() == ']') {
        ++pos_;
        break;
      }
      Scalar item;
      if (!parse_value(item)) return false;
      items.push_back(std::move(item));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        skip_ws();
      } else if (peek() != ']') {
        return fail(at_end() ? "unterminated list" : "expected ',' or ']'");
      }
    }
    out = std::move(items);
    return true;
  }

  bool parse_dict(Scalar& out) {
    ++pos_;
    Nest nest(depth_);
    Dict entries;
    skip_ws();
    while (true) {
      if (at_end()) return fail("unterminated dict");
      if (peek() == '}') {
        ++pos_;
        break;
      }
      std::size_t start = pos_;
      if (!is_lower(peek())) return fail("expected tag name in dict");
      while (!at_end() && is_ident(peek())) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      skip_ws();
      Scalar value = Marker{};
      if (peek() == ':') {
        ++pos_;
        skip_ws();
        if (!parse_value(value)) return false;
        skip_ws();
      }
      for (const auto& [existing, _] : entries) {
        if (existing == name) {
          pos_ = start;
          return fail("duplicate dict tag '" + name + "'");
        }
      }
      entries.emplace_back(std::move(name), std::move(value));
      if (peek() == ',') {
        ++pos_;
        skip_ws();
      }
    }
    out = std::move(entries);
    return true;
  }

  struct Nest {
    explicit Nest(int& d) : depth(d) { ++depth; }
    ~Nest() { --depth; }
    int& depth;
  };
  static constexpr int kMaxDepth = 64;

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

void quote(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '$': out += "\\$"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          static const char* hex = "0123456789abcdef";
          out += "\\u00";
          out += hex[(c >> 4) & 0xF];
          out += hex[c & 0xF];
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void write(std::string& out, const Scalar& s);

struct Writer {
  std::string& out;
  void operator()(const Marker&) const { out += 'M'; }
  void operator()(const Str& s) const { quote(out, s.value); }
  void operator()(const SymbolLiteral& s) const { out += '^' + s.name; }
  void operator()(const Number& n) const {
    if (std::isnan(n.value)) {
      out += "NaN";
    } else if (std::isinf(n.value)) {
      out += n.value > 0 ? "INF" : "-INF";
    } else {
      char buf[64];
      auto r = std::to_chars(buf, buf + sizeof buf, n.value);
      out.append(buf, r.ptr);
    }
    out += n.unit;
  }
  void operator()(bool b) const { out += b ? 'T' : 'F'; }
  void operator()(const List& items) const {
    out += '[';
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ", ";
      write(out, items[i]);
    }
    out += ']';
  }
  void operator()(const Dict& entries) const {
    out += '{';
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) out += ", ";
      out += entries[i].first;
      if (!entries[i].second.is<Marker>()) {
        out += ':';
        write(out, entries[i].second);
      }
    }
    out += '}';
  }
};

void write(std::string& out, const Scalar& s) { std::visit(Writer{out}, s.value); }

}  // namespace

bool parse_scalar(std::string_view text, Scalar& out, std::string& error,
                  std::size_t& error_offset) {
  Parser p(text);
  if (p.parse_top(out)) return true;
  error = p.error;
  error_offset = p.error_offset;
  return false;
}

std::string to_zinc(const Scalar& scalar) {
  std::string out;
  write(out, scalar);
  return out;
}

bool is_tag_name(std::string_view name) noexcept {
  if (name.empty() || !is_lower(name.front())) return false;
  for (char c : name) {
    if (!is_ident(c)) return false;
  }
  return true;
}

}  // namespace ontobench::zinc

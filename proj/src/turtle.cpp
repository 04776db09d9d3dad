#include "ontobench/turtle.hpp"

#include "ontobench/errors.hpp"

namespace ontobench {

namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_high(char c) { return static_cast<unsigned char>(c) >= 0x80; }
bool is_name_start(char c) { return is_alpha(c) || c == '_' || is_high(c); }
bool is_name_char(char c) {
  return is_name_start(c) || is_digit(c) || c == '-' || c == '.';
}

class TurtleParser {
 public:
  TurtleParser(std::string_view text, const std::string& file)
      : text_(text), file_(file) {}

  TripleStore run() {
    while (true) {
      skip_ws();
      if (at_end()) break;
      statement();
    }
    return std::move(store_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) { fail_at(line_, col_, message); }
  [[noreturn]] void fail_at(std::size_t line, std::size_t col, const std::string& message) {
    throw ParseError(SourceLocation{file_, line, col}, message);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        get();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (at_end()) fail(std::string("unexpected end of input, expected ") + what);
    if (peek() != c) fail(std::string("expected ") + what);
    get();
  }

  bool starts_with_word(std::string_view word, bool case_insensitive) const {
    if (text_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      char a = text_[pos_ + i];
      char b = word[i];
      if (case_insensitive && a >= 'a' && a <= 'z') a = static_cast<char>(a - 32);
      if (a != b) return false;
    }
    char next = peek(word.size());
    return !(is_name_char(next) || next == ':');
  }

  void statement() {
    if (peek() == '@') {
      if (text_.substr(pos_, 7) == "@prefix") {
        for (int i = 0; i < 7; ++i) get();
        prefix_directive(true);
        return;
      }
      if (text_.substr(pos_, 5) == "@base") fail("@base is not supported");
      fail("unknown directive");
    }
    if (starts_with_word("PREFIX", true)) {
      for (int i = 0; i < 6; ++i) get();
      prefix_directive(false);
      return;
    }
    if (starts_with_word("BASE", true)) fail("BASE is not supported");
    triples();
    expect('.', "'.' at end of statement");
  }

  void prefix_directive(bool dotted) {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && is_name_char(peek())) get();
    std::string name(text_.substr(start, pos_ - start));
    if (peek() != ':') fail("expected ':' after prefix name");
    get();
    skip_ws();
    if (peek() != '<') fail("expected IRI in prefix declaration");
    std::string iri = iriref();
    store_.set_prefix(name, iri);
    if (dotted) expect('.', "'.' after @prefix");
  }

  void triples() {
    skip_ws();
    Term subject;
    if (peek() == '[') {
      std::size_t line = line_, col = col_;
      get();
      skip_ws();
      if (peek() == ']') {
        get();
        subject = fresh_blank();
        predicate_object_list(subject);
        return;
      }
      subject = fresh_blank();
      predicate_object_list(subject);
      skip_ws();
      if (at_end()) fail_at(line, col, "unbalanced '['");
      if (peek() != ']') fail("expected ']'");
      get();
      skip_ws();
      if (peek() == '.') return;
      predicate_object_list(subject);
      return;
    }
    subject = node(false);
    predicate_object_list(subject);
  }

  void predicate_object_list(const Term& subject) {
    while (true) {
      skip_ws();
      Term predicate = verb();
      object_list(subject, predicate);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        get();
        skip_ws();
      }
      char c = peek();
      if (c == '.' || c == ']' || at_end()) return;
    }
  }

  Term verb() {
    if (peek() == 'a' && !is_name_char(peek(1)) && peek(1) != ':') {
      get();
      return Term::iri(rdf::type());
    }
    Term t = node(false);
    if (!t.is_iri()) fail("predicate must be an IRI");
    return t;
  }

  void object_list(const Term& subject, const Term& predicate) {
    while (true) {
      skip_ws();
      Term object = node(true);
      store_.add({subject, predicate, std::move(object)});
      skip_ws();
      if (peek() != ',') return;
      get();
    }
  }

  /// Parses a subject or object term. Literals and property lists are only
  /// allowed when `object` is true.
  Term node(bool object) {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (c == '<') return Term::iri(iriref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '(') return collection();
    if (c == '[') {
      if (!object) fail("unexpected '['");
      return property_list();
    }
    if (c == '"' || c == '\'') {
      if (!object) fail("literal not allowed here");
      return string_literal();
    }
    if (is_digit(c) || ((c == '+' || c == '-' || c == '.') && is_digit(peek(1)))) {
      fail("numeric literals are not supported");
    }
    if (starts_with_word("true", false) || starts_with_word("false", false)) {
      if (!object) fail("literal not allowed here");
      std::string v = c == 't' ? "true" : "false";
      for (std::size_t i = 0; i < v.size(); ++i) get();
      return Term::literal(v, {}, rdf::xsd_boolean());
    }
    if (c == ']' || c == ')') fail(std::string("unexpected '") + c + "'");
    if (is_name_start(c) || c == ':') return prefixed_name();
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string iriref() {
    std::size_t line = line_, col = col_;
    get();
    std::size_t start = pos_;
    while (!at_end() && peek() != '>') {
      char ch = peek();
      if (ch == '\n' || ch == ' ' || ch == '<' || ch == '"' || ch == '{' || ch == '}' ||
          ch == '|' || ch == '^' || ch == '`' || ch == '\\') {
        fail("invalid character in IRI");
      }
      get();
    }
    if (at_end()) fail_at(line, col, "unterminated IRI");
    std::string iri(text_.substr(start, pos_ - start));
    get();
    std::size_t colon = iri.find(':');
    bool absolute = colon != std::string::npos && colon > 0 && is_alpha(iri[0]);
    for (std::size_t i = 1; absolute && i < colon; ++i) {
      char ch = iri[i];
      absolute = is_alpha(ch) || is_digit(ch) || ch == '+' || ch == '-' || ch == '.';
    }
    if (!absolute) fail_at(line, col, "relative IRI <" + iri + "> is not supported");
    return iri;
  }

  Term prefixed_name() {
    std::size_t line = line_, col = col_;
    std::size_t start = pos_;
    while (!at_end() && is_name_char(peek())) get();
    std::string prefix(text_.substr(start, pos_ - start));
    if (peek() != ':') fail_at(line, col, "expected prefixed name, found '" + prefix + "'");
    get();
    std::size_t local_start = pos_;
    while (!at_end() && (is_name_char(peek()) || peek() == ':')) get();
    // A trailing '.' ends the statement rather than the name.
    while (pos_ > local_start && text_[pos_ - 1] == '.') {
      --pos_;
      --col_;
    }
    if (peek() == '\\' || peek() == '%') fail("escapes in local names are not supported");
    std::string local(text_.substr(local_start, pos_ - local_start));
    auto it = store_.prefixes().find(prefix);
    if (it == store_.prefixes().end()) {
      fail_at(line, col, "undefined prefix '" + prefix + ":'");
    }
    return Term::iri(it->second + local);
  }

  Term blank_label() {
    get();
    get();
    std::size_t start = pos_;
    while (!at_end() && is_name_char(peek())) get();
    while (pos_ > start && text_[pos_ - 1] == '.') {
      --pos_;
      --col_;
    }
    if (pos_ == start) fail("empty blank node label");
    return Term::blank(std::string(text_.substr(start, pos_ - start)));
  }

  Term fresh_blank() { return Term::blank("anon" + std::to_string(++anon_)); }

  struct Nest {
    Nest(TurtleParser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) parser.fail("brackets nested too deeply");
    }
    ~Nest() { --parser.depth_; }
    TurtleParser& parser;
  };

  Term property_list() {
    Nest nest(*this);
    std::size_t line = line_, col = col_;
    get();
    Term subject = fresh_blank();
    skip_ws();
    if (peek() != ']') {
      predicate_object_list(subject);
      skip_ws();
    }
    if (at_end()) fail_at(line, col, "unbalanced '['");
    if (peek() != ']') fail("expected ']'");
    get();
    return subject;
  }

  Term collection() {
    Nest nest(*this);
    std::size_t line = line_, col = col_;
    get();
    std::vector<Term> items;
    while (true) {
      skip_ws();
      if (at_end()) fail_at(line, col, "unbalanced '('");
      if (peek() == ')') {
        get();
        break;
      }
      items.push_back(node(true));
    }
    if (items.empty()) return Term::iri(rdf::nil());
    std::vector<Term> cells;
    for (std::size_t i = 0; i < items.size(); ++i) cells.push_back(fresh_blank());
    for (std::size_t i = 0; i < items.size(); ++i) {
      store_.add({cells[i], Term::iri(rdf::first()), items[i]});
      store_.add({cells[i], Term::iri(rdf::rest()),
                  i + 1 < items.size() ? cells[i + 1] : Term::iri(rdf::nil())});
    }
    return cells.front();
  }

  Term string_literal() {
    std::size_t line = line_, col = col_;
    char quote = get();
    if (peek() == quote && peek(1) == quote) fail_at(line, col, "long strings are not supported");
    std::string value;
    while (true) {
      if (at_end() || peek() == '\n' || peek() == '\r') {
        fail_at(line, col, "unterminated string");
      }
      char c = get();
      if (c == quote) break;
      if (c != '\\') {
        value += c;
        continue;
      }
      if (at_end()) fail_at(line, col, "unterminated string");
      char e = get();
      switch (e) {
        case 't': value += '\t'; break;
        case 'b': value += '\b'; break;
        case 'n': value += '\n'; break;
        case 'r': value += '\r'; break;
        case 'f': value += '\f'; break;
        case '"': value += '"'; break;
        case '\'': value += '\''; break;
        case '\\': value += '\\'; break;
        case 'u':
        case 'U': fail("numeric escapes are not supported");
        default: fail(std::string("invalid escape '\\") + e + "'");
      }
    }
    std::string lang;
    if (peek() == '@') {
      get();
      std::size_t start = pos_;
      while (!at_end() && (is_alpha(peek()) || (pos_ > start && (peek() == '-' || is_digit(peek()))))) {
        get();
      }
      lang.assign(text_.substr(start, pos_ - start));
      if (lang.empty() || lang.back() == '-') fail("invalid language tag");
    } else if (peek() == '^' && peek(1) == '^') {
      fail("datatyped literals are not supported");
    }
    return Term::literal(std::move(value), std::move(lang));
  }

  static constexpr int kMaxDepth = 256;

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::size_t anon_ = 0;
  int depth_ = 0;
  TripleStore store_;
};

void write_term(std::string& out, const Term& t) {
  switch (t.kind) {
    case Term::Kind::iri:
      out += '<' + t.value + '>';
      return;
    case Term::Kind::blank:
      out += "_:" + t.value;
      return;
    case Term::Kind::literal:
      break;
  }
  if (t.datatype == rdf::xsd_boolean()) {
    out += t.value;
    return;
  }
  out += '"';
  for (char c : t.value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default: out += c;
    }
  }
  out += '"';
  if (!t.lang.empty()) out += '@' + t.lang;
}

}  // namespace

TripleStore parse_turtle(std::string_view text, const std::string& file) {
  return TurtleParser(text, file).run();
}

std::string serialize_ntriples(const TripleStore& store) {
  std::string out;
  for (const auto& t : store.triples()) {
    write_term(out, t.subject);
    out += ' ';
    write_term(out, t.predicate);
    out += ' ';
    write_term(out, t.object);
    out += " .\n";
  }
  return out;
}

}  // namespace ontobench

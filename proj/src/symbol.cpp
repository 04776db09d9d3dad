#include "ontobench/symbol.hpp"

#include "ontobench/errors.hpp"

namespace ontobench {

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_ident(char c) {
  return is_lower(c) || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_';
}

}  // namespace

bool Symbol::is_atomic(std::string_view text) noexcept {
  if (text.empty() || !is_lower(text.front())) return false;
  for (char c : text) {
    if (!is_ident(c)) return false;
  }
  return true;
}

Symbol Symbol::parse(std::string_view text) {
  if (text.empty()) throw ParseError({}, "empty symbol");
  std::size_t start = 0;
  std::size_t parts = 0;
  while (true) {
    std::size_t dash = text.find('-', start);
    std::string_view part = text.substr(
        start, dash == std::string_view::npos ? std::string_view::npos
                                              : dash - start);
    if (part.empty()) {
      throw ParseError({}, "symbol '" + std::string(text) +
                               "' has an empty conjunct part");
    }
    if (!is_atomic(part)) {
      throw ParseError({}, "symbol '" + std::string(text) + "' has invalid part '" +
                               std::string(part) + "'");
    }
    ++parts;
    if (dash == std::string_view::npos) break;
    start = dash + 1;
  }
  return Symbol(std::string(text),
                parts == 1 ? SymbolKind::atomic : SymbolKind::conjunct);
}

std::vector<Symbol> symbol_parts(const Symbol& symbol) {
  if (!symbol.is_conjunct()) return {symbol};
  std::vector<Symbol> parts;
  const std::string& text = symbol.text();
  std::size_t start = 0;
  while (true) {
    std::size_t dash = text.find('-', start);
    parts.push_back(Symbol::parse(text.substr(
        start, dash == std::string::npos ? std::string::npos : dash - start)));
    if (dash == std::string::npos) break;
    start = dash + 1;
  }
  return parts;
}

std::string join_symbol_parts(const std::vector<Symbol>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += '-';
    out += p.text();
  }
  return out;
}

}  // namespace ontobench

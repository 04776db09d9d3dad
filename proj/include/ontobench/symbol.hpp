#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ontobench {

enum class SymbolKind { atomic, conjunct };

/// Identifier of a Haystack def. Atomic symbols look like `ahu` or
/// `chilledWaterPlant`; conjuncts join atomic parts with '-' (`hot-water`).
/// Comparison is exact and case-sensitive.
class Symbol {
 public:
  /// Validates `text`. Throws `ParseError` for empty text, an empty
  /// conjunct part, or a part that is not a lowercase-led identifier.
  static Symbol parse(std::string_view text);

  /// True when `text` is a well-formed atomic symbol.
  static bool is_atomic(std::string_view text) noexcept;

  const std::string& text() const noexcept { return text_; }
  SymbolKind kind() const noexcept { return kind_; }
  bool is_conjunct() const noexcept { return kind_ == SymbolKind::conjunct; }

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.text_ == b.text_;
  }
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    return a.text_.compare(b.text_) <=> 0;
  }

 private:
  Symbol(std::string text, SymbolKind kind)
      : text_(std::move(text)), kind_(kind) {}

  std::string text_;
  SymbolKind kind_;
};

/// The atomic parts of a symbol in order; an atomic symbol yields itself.
std::vector<Symbol> symbol_parts(const Symbol& symbol);

/// Joins parts with '-'.
std::string join_symbol_parts(const std::vector<Symbol>& parts);

}  // namespace ontobench

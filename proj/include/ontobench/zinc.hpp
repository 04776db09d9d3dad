#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ontobench::zinc {

struct Marker {
  friend bool operator==(const Marker&, const Marker&) = default;
};

struct Str {
  std::string value;
  friend bool operator==(const Str&, const Str&) = default;
};

/// `^name` literal. The name is kept verbatim; symbol validation happens when
/// a namespace is assembled.
struct SymbolLiteral {
  std::string name;
  friend bool operator==(const SymbolLiteral&, const SymbolLiteral&) = default;
};

struct Number {
  double value = 0;
  std::string unit;
  friend bool operator==(const Number&, const Number&) = default;
};

struct Scalar;
using List = std::vector<Scalar>;
/// Ordered name/value pairs; a bare name is a marker.
using Dict = std::vector<std::pair<std::string, Scalar>>;

/// The Zinc values that occur in def libraries. Grid encodings, refs,
/// dates and times are not supported.
struct Scalar {
  std::variant<Marker, Str, SymbolLiteral, Number, bool, List, Dict> value;

  Scalar() = default;
  template <class T>
  Scalar(T v) : value(std::move(v)) {}

  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(value);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(value);
  }
  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&value);
  }

  friend bool operator==(const Scalar&, const Scalar&) = default;
};

/// Parses exactly one scalar from `text` (surrounding whitespace allowed).
/// On failure returns false and sets `error` and `error_offset`.
bool parse_scalar(std::string_view text, Scalar& out, std::string& error,
                  std::size_t& error_offset);

/// Zinc text for a scalar, parseable by `parse_scalar`.
std::string to_zinc(const Scalar& scalar);

/// True for tag names accepted in Trio pairs and Zinc dicts.
bool is_tag_name(std::string_view name) noexcept;

}  // namespace ontobench::zinc

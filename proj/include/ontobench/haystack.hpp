#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ontobench/errors.hpp"
#include "ontobench/symbol.hpp"
#include "ontobench/trio.hpp"
#include "ontobench/zinc.hpp"

namespace ontobench {

/// A Haystack def: one record of a def library.
struct HaystackDef {
  Symbol symbol;
  /// The `is` association, in declaration order.
  std::vector<Symbol> supertypes;
  /// Every pair that is not def/is/children and not a symbol-valued ref.
  std::map<std::string, zinc::Scalar> meta;
  /// Pairs whose value is a single symbol literal, e.g. `of: ^site`.
  std::map<std::string, Symbol> refs;
  /// Child prototypes from the `children` list; each a set of tag names.
  std::vector<std::set<Symbol>> child_protos;
  SourceSpan span;
};

struct HaystackLib {
  std::string name;
  std::vector<HaystackDef> defs;
};

/// Defs from one or more libs, indexed by symbol. Immutable once built.
class HaystackNamespace {
 public:
  HaystackNamespace() = default;

  const std::vector<HaystackLib>& libs() const noexcept { return libs_; }
  std::size_t size() const noexcept { return index_.size(); }

  /// The def for `symbol`, or nullptr.
  const HaystackDef* find(std::string_view symbol) const;
  /// The def for `symbol`; throws `LookupError` if absent.
  const HaystackDef& at(std::string_view symbol) const;

  /// All symbols in lexicographic order.
  std::vector<std::string> symbols() const;

  /// Direct supertypes as an adjacency map (symbol text -> supertypes).
  const std::map<std::string, std::vector<std::string>>& supertype_graph() const noexcept {
    return graph_;
  }

  /// Non-fatal problems seen while building (unresolved conjunct parts).
  const std::vector<Diagnostic>& warnings() const noexcept { return warnings_; }

  /// True when `sub` has `super` in its supertype closure.
  bool is_a(std::string_view sub, std::string_view super) const;

 private:
  friend HaystackNamespace build_namespace(
      std::vector<std::pair<std::string, std::vector<TrioRecord>>> libs);

  std::vector<HaystackLib> libs_;
  std::map<std::string, std::pair<std::size_t, std::size_t>, std::less<>> index_;
  std::map<std::string, std::vector<std::string>> graph_;
  std::vector<Diagnostic> warnings_;
};

/// Builds a namespace from named libs. Libs are sorted by name first so the
/// result does not depend on the order they are given in.
/// Throws `LoadError` for records without a symbol `def`, duplicate defs
/// (naming both spans), unresolved `is` targets, malformed `children`;
/// `IntegrityError` for a supertype cycle.
HaystackNamespace build_namespace(
    std::vector<std::pair<std::string, std::vector<TrioRecord>>> libs);

/// Single-lib convenience overload.
HaystackNamespace build_namespace(const std::vector<TrioRecord>& records,
                                  const std::string& lib_name = "lib");

/// Parses every `*.trio` file in `dir` (lib name = file stem) and builds the
/// namespace. Parse errors are appended to `errors` when it is given;
/// otherwise the first one is thrown.
HaystackNamespace load_haystack_dir(const std::string& dir,
                                    std::vector<ParseError>* errors = nullptr);

/// Reflexive-transitive closure over `is`. Throws `LookupError` for an
/// unknown symbol and `IntegrityError` on a cycle.
std::set<std::string> supertype_closure(const HaystackNamespace& ns,
                                        std::string_view symbol);

/// The def kinds the alignment and relationship code care about.
bool is_ref_def(const HaystackNamespace& ns, std::string_view symbol);
bool is_relationship_def(const HaystackNamespace& ns, std::string_view symbol);

}  // namespace ontobench

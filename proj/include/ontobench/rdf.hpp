#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ontobench {

namespace rdf {
inline constexpr const char* kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr const char* kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr const char* kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr const char* kXsd = "http://www.w3.org/2001/XMLSchema#";

inline std::string type() { return std::string(kRdf) + "type"; }
inline std::string first() { return std::string(kRdf) + "first"; }
inline std::string rest() { return std::string(kRdf) + "rest"; }
inline std::string nil() { return std::string(kRdf) + "nil"; }
inline std::string xsd_boolean() { return std::string(kXsd) + "boolean"; }
}  // namespace rdf

/// An RDF node. IRIs are always absolute; blank node values are labels
/// without the `_:` prefix.
struct Term {
  enum class Kind { iri, blank, literal };

  Kind kind = Kind::iri;
  std::string value;
  std::string lang;
  std::string datatype;

  static Term iri(std::string v) { return {Kind::iri, std::move(v), {}, {}}; }
  static Term blank(std::string v) { return {Kind::blank, std::move(v), {}, {}}; }
  static Term literal(std::string v, std::string lang = {}, std::string datatype = {}) {
    return {Kind::literal, std::move(v), std::move(lang), std::move(datatype)};
  }

  bool is_iri() const noexcept { return kind == Kind::iri; }
  bool is_blank() const noexcept { return kind == Kind::blank; }
  bool is_literal() const noexcept { return kind == Kind::literal; }

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Set of triples in insertion order, with subject and predicate indexes.
class TripleStore {
 public:
  /// Adds `t` unless already present. Returns true when it was new.
  bool add(Triple t);

  std::size_t size() const noexcept { return triples_.size(); }
  const std::vector<Triple>& triples() const noexcept { return triples_; }
  bool contains(const Triple& t) const { return seen_.count(t) > 0; }

  void set_prefix(const std::string& name, const std::string& iri) { prefixes_[name] = iri; }
  const std::map<std::string, std::string>& prefixes() const noexcept { return prefixes_; }

  std::vector<const Triple*> with_subject(const Term& subject) const;
  std::vector<const Triple*> with_predicate(const std::string& predicate) const;
  /// Objects of (subject, predicate, *) in insertion order.
  std::vector<Term> objects(const Term& subject, const std::string& predicate) const;

 private:
  std::vector<Triple> triples_;
  std::set<Triple> seen_;
  std::map<Term, std::vector<std::size_t>> by_subject_;
  std::map<std::string, std::vector<std::size_t>> by_predicate_;
  std::map<std::string, std::string> prefixes_;
};

}  // namespace ontobench

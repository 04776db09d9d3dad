#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontobench/errors.hpp"
#include "ontobench/rdf.hpp"

namespace ontobench {

/// The four primary Brick classes.
enum class EntityKind { equipment, point, location, measurable };

inline constexpr EntityKind kAllKinds[] = {EntityKind::equipment, EntityKind::point,
                                           EntityKind::location, EntityKind::measurable};

std::string to_string(EntityKind kind);
/// Accepts "Equipment", "equipment", ...; throws `ConfigError`.
EntityKind parse_entity_kind(std::string_view text);

struct BrickClass {
  std::string iri;
  /// Direct superclasses that are themselves schema classes.
  std::vector<std::string> parents;
  /// Lowercased local names of the associated tag IRIs.
  std::set<std::string> associated_tags;
  std::optional<std::string> label;
};

struct BrickRelationship {
  std::string iri;
  std::optional<std::string> inverse;
  std::set<EntityKind> domain_kinds;
  std::set<EntityKind> range_kinds;
};

/// Predicate IRIs used during extraction. Defaults match the vendored schema.
struct BrickVocabulary {
  std::string subclass_of = std::string(rdf::kRdfs) + "subClassOf";
  std::string inverse_of = std::string(rdf::kOwl) + "inverseOf";
  std::string object_property = std::string(rdf::kOwl) + "ObjectProperty";
  std::string domain = std::string(rdf::kRdfs) + "domain";
  std::string range = std::string(rdf::kRdfs) + "range";
  std::string label = std::string(rdf::kRdfs) + "label";
  /// Local name, appended to the schema namespace.
  std::string associated_tag = "hasAssociatedTag";
};

class BrickSchema {
 public:
  /// The schema namespace, e.g. `https://brickschema.org/schema/1.1/Brick#`.
  const std::string& ns() const noexcept { return ns_; }
  const std::map<std::string, BrickClass>& classes() const noexcept { return classes_; }
  const std::map<std::string, BrickRelationship>& relationships() const noexcept {
    return relationships_;
  }
  /// IRIs of Equipment, Point, Location, Measurable in that order.
  const std::vector<std::string>& roots() const noexcept { return roots_; }
  const std::set<std::string>& tag_vocabulary() const noexcept { return tags_; }
  const std::vector<Diagnostic>& warnings() const noexcept { return warnings_; }
  const std::map<std::string, std::string>& prefixes() const noexcept { return prefixes_; }

  /// Expands `<iri>`, `prefix:Local` or a bare local name to an IRI.
  std::string expand(std::string_view name) const;
  /// Local name of an IRI in the schema namespace, else the IRI itself.
  std::string shorten(const std::string& iri) const;

  const BrickClass* find_class(std::string_view name) const;
  const BrickRelationship* find_relationship(std::string_view name) const;

  /// The primary root kinds `iri` reaches through its parents.
  std::set<EntityKind> kinds_of(const std::string& iri) const;

  std::string root_iri(EntityKind kind) const;

 private:
  friend BrickSchema extract_brick_schema(const TripleStore&, const BrickVocabulary&);

  std::string ns_;
  std::map<std::string, BrickClass> classes_;
  std::map<std::string, BrickRelationship> relationships_;
  std::vector<std::string> roots_;
  std::set<std::string> tags_;
  std::vector<Diagnostic> warnings_;
  std::map<std::string, std::string> prefixes_;
  std::map<std::string, std::set<EntityKind>> kinds_;
};

/// Builds the class hierarchy (everything reachable below the four roots via
/// subclass triples), the declared object properties with inverse pairing,
/// and associated tags. The namespace comes from the store's `brick` prefix.
/// Throws `LoadError` if the prefix or a root is missing, `IntegrityError`
/// for a subclass cycle, a dangling inverse, or conflicting inverses.
BrickSchema extract_brick_schema(const TripleStore& store,
                                 const BrickVocabulary& vocabulary = {});

/// Reads, parses and extracts a schema file.
BrickSchema load_brick_file(const std::string& path);

/// Reflexive-transitive ancestors. Throws `LookupError` for an unknown class.
std::set<std::string> subclass_closure(const BrickSchema& schema, std::string_view iri);

/// Tags of a class, unioned with the tags of its ancestors unless
/// `declared_only`. An empty result is returned with a warning appended to
/// `warnings`. Throws `LookupError` for an unknown class.
std::set<std::string> convert_brick_class_to_tags(const BrickSchema& schema,
                                                  std::string_view iri,
                                                  bool declared_only = false,
                                                  std::vector<Diagnostic>* warnings = nullptr);

}  // namespace ontobench

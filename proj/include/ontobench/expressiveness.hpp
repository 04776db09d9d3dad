#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontobench/alignment.hpp"
#include "ontobench/brick.hpp"
#include "ontobench/dataset.hpp"
#include "ontobench/haystack.hpp"

namespace ontobench {

enum class RelKind {
  sensor_location,
  location_location,
  equipment_location,
  sensor_equipment,
  equipment_equipment,
  location_persons,
  equipment_name
};

/// "Sensor<->Location" etc.
std::string to_string(RelKind kind);
/// Accepts "<->" or the Unicode double arrow between the endpoint names.
RelKind parse_rel_kind(std::string_view text);

enum class Side { air, water, na };

/// "air", "water", "n/a".
std::string to_string(Side side);
Side parse_side(std::string_view text);

/// What a relationship endpoint denotes.
enum class EndKind { equipment, point, location, measurable, name, person };

std::string to_string(EndKind kind);
using EndKindSet = std::set<EndKind>;

/// The two endpoint kinds of a relationship kind (a Sensor is a point).
std::pair<EndKind, EndKind> endpoints_of(RelKind kind);

struct KeyRelationship {
  RelKind kind = RelKind::sensor_equipment;
  System system = System::other;
  Side side = Side::na;

  std::string id() const;
  friend auto operator<=>(const KeyRelationship&, const KeyRelationship&) = default;
  friend bool operator==(const KeyRelationship&, const KeyRelationship&) = default;
};

/// Which relationships to derive and how to read sides from the dataset.
struct KeyConfig {
  std::vector<RelKind> kinds;
  /// Sides assessed per system, e.g. AHU -> {air, water}.
  std::map<System, std::vector<Side>> systems;
  /// Service value -> side (air or water).
  std::map<std::string, Side> service_sides;
  /// Equipment class or type -> side.
  std::map<std::string, Side> equipment_sides;
  std::vector<std::string> location_words;
  std::vector<std::string> person_words;
};

KeyConfig parse_key_config(std::string_view json_text, const std::string& file = {});
KeyConfig load_key_config(const std::string& path);

struct KeyDerivation {
  std::vector<KeyRelationship> expressed;
  std::vector<std::pair<KeyRelationship, std::string>> excluded;
};

/// Crosses the configured kinds with the configured systems and sides and
/// keeps the relationships the dataset gives evidence for:
/// Sensor<->Equipment: an AI/DI point whose service is on the side;
/// Sensor<->Location: the same with a location word in its name;
/// Equipment<->Equipment: an association touching the system's equipment
/// whose child (else parent) is on the side;
/// Equipment<->Location: a point with a location word;
/// Location<->Location: two distinct location words in the system;
/// Location<->Persons: a person word; Equipment<->Name: any point.
/// The last four are assessed once per system with side n/a.
KeyDerivation derive_key_relationships(const Dataset& dataset, const KeyConfig& config);

enum class Direction { fwd, rev };

struct PathStep {
  std::string relationship;
  Direction direction = Direction::fwd;
};

/// "hasPoint:fwd;isPointOf:rev".
std::string to_string(const std::vector<PathStep>& path);
std::vector<PathStep> parse_path(std::string_view text);

struct RelationshipEntry {
  KeyRelationship key;
  OntologyId ontology = OntologyId::haystack;
  /// Empty for a curated no-path entry.
  std::vector<PathStep> path;
  std::string note;
  std::size_t line = 0;
};

/// A relationship vocabulary item with the kinds it connects.
struct StepSignature {
  EndKindSet domain;
  EndKindSet range;
  std::optional<std::string> inverse;
};

/// The relationships an ontology offers for key-relationship paths.
/// Haystack: Ref defs (tagOn -> of), relationship defs (any -> any),
/// `children` (equipment -> equipment or point), str defs such as navName
/// (tagOn -> name). Brick: declared object properties (domain/range kinds)
/// and `label` (any -> name).
class RelationshipVocabulary {
 public:
  static RelationshipVocabulary from_haystack(const HaystackNamespace& ns);
  static RelationshipVocabulary from_brick(const BrickSchema& schema);

  const StepSignature* find(const std::string& name) const;
  const std::map<std::string, StepSignature>& all() const noexcept { return steps_; }

 private:
  std::map<std::string, StepSignature> steps_;
};

struct RelationshipTable {
  std::vector<RelationshipEntry> entries;
};

/// Parses `kind,system,side,ontology,path,label_note`. Every step must name a
/// relationship in the vocabulary of its ontology (`LoadError` otherwise).
RelationshipTable parse_relationship_table(std::string_view text, const std::string& file,
                                           const RelationshipVocabulary* haystack,
                                           const RelationshipVocabulary* brick);
RelationshipTable load_relationship_table(const std::string& path,
                                          const RelationshipVocabulary* haystack,
                                          const RelationshipVocabulary* brick);

enum class RelLabel { maps, does_not_map };

std::string to_string(RelLabel label);

struct RelationshipMapping {
  KeyRelationship key;
  OntologyId ontology = OntologyId::haystack;
  RelLabel label = RelLabel::does_not_map;
  std::vector<PathStep> path;
  /// For Brick: the reverse-direction path through inverses, when every
  /// step has one.
  std::vector<PathStep> inverse_path;
  std::string note;
};

/// True when the path connects `from` to `to` with compatible kinds at
/// every step.
bool path_connects(const std::vector<PathStep>& path, const RelationshipVocabulary& vocab,
                   EndKind from, EndKind to);

/// Reverse of `path` through inverse relationships, or nullopt when a step
/// has no inverse.
std::optional<std::vector<PathStep>> inverse_path(const std::vector<PathStep>& path,
                                                  const RelationshipVocabulary& vocab);

/// Maps iff one of the key's curated entries has a nonempty path that
/// connects the endpoints in either orientation. Throws `ConfigError` when
/// the table has no entry for the key.
RelationshipMapping map_key_relationship(const KeyRelationship& key, OntologyId ontology,
                                         const RelationshipTable& table,
                                         const RelationshipVocabulary& vocab);

struct ExpressivenessSummary {
  OntologyId ontology = OntologyId::haystack;
  std::size_t mapped = 0;
  std::size_t total = 0;
  int pct = 0;
};

struct ExpressivenessReport {
  std::vector<ExpressivenessSummary> summaries;
  std::vector<RelationshipMapping> rows;
  std::vector<std::pair<KeyRelationship, std::string>> excluded;
};

struct OntologyRelationships {
  OntologyId ontology;
  const RelationshipTable* table;
  const RelationshipVocabulary* vocab;
};

/// Throws `ConfigError` for an empty key set.
ExpressivenessReport evaluate_expressiveness(const std::vector<KeyRelationship>& keys,
                                             const std::vector<OntologyRelationships>& ontologies);

}  // namespace ontobench

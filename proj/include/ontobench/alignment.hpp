#pragma once

#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ontobench/brick.hpp"
#include "ontobench/haystack.hpp"

namespace ontobench {

/// Dataset facets in facet-vector order, plus name modifiers.
enum class Facet { equipment_class, point_class, equipment_type, mct, service, modifier };

inline constexpr Facet kVectorFacets[] = {Facet::equipment_class, Facet::point_class,
                                          Facet::equipment_type, Facet::mct, Facet::service};

/// equipmentClass, pointClass, equipmentType, measurementControlType,
/// service, modifier.
std::string to_string(Facet facet);
/// Accepts the camelCase names, snake_case, and ec/pc/et/mct. Throws
/// `ConfigError`.
Facet parse_facet(std::string_view text);

enum class OntologyId { haystack, brick };

std::string to_string(OntologyId id);
OntologyId parse_ontology(std::string_view text);

enum class Relation { equivalence, subsumption };

std::string to_string(Relation relation);

struct AlignmentEntry {
  std::string token;
  Facet facet = Facet::point_class;
  OntologyId ontology = OntologyId::haystack;
  /// Haystack symbols or Brick IRIs; empty for a curated gap.
  std::vector<std::string> targets;
  Relation relation = Relation::equivalence;
  std::string note;
  std::size_t line = 0;

  bool is_gap() const noexcept { return targets.empty(); }
};

/// Curated entries keyed by (lowercased token, facet, ontology).
class AlignmentTable {
 public:
  /// Throws `LoadError` when the key already exists.
  void add(AlignmentEntry entry);

  const AlignmentEntry* find(std::string_view token, Facet facet, OntologyId ontology) const;
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<AlignmentEntry>& entries() const noexcept { return entries_; }

 private:
  std::vector<AlignmentEntry> entries_;
  std::map<std::tuple<std::string, Facet, OntologyId>, std::size_t> index_;
};

struct Resolution {
  enum class Kind { mapped, gap, unresolved };
  Kind kind = Kind::unresolved;
  const AlignmentEntry* entry = nullptr;
};

/// Mapped for an entry with targets, Gap for a curated empty-target entry,
/// Unresolved when no entry exists.
Resolution resolve(const AlignmentTable& table, std::string_view token, Facet facet,
                   OntologyId ontology);

/// Parses `token,facet,ontology,target,relation,note`. Every target is
/// validated against the matching ontology; rows for an ontology that is
/// not supplied are an error. Haystack targets are symbols (optional '^');
/// Brick targets are local names, prefixed names or `<iri>` naming a class
/// or a tag. Throws `LoadError` / `ParseError`; never returns a partial table.
AlignmentTable parse_alignment(std::string_view text, const std::string& file,
                               const HaystackNamespace* haystack, const BrickSchema* brick);
AlignmentTable load_alignment(const std::string& path, const HaystackNamespace* haystack,
                              const BrickSchema* brick);

struct Suggestion {
  std::string target;
  /// 0 exact name, 1 exact part or tag, 2 substring, 3 edit distance <= 2.
  int tier = 0;
  /// Whether the target's kind fits the facet.
  bool kind_match = false;
};

/// Advisory candidates for `token`, best first: by tier, then facet-kind
/// match, then identifier. Edit-distance matches are only tried for tokens
/// of four or more characters. The ontology for `ontology` must be given.
std::vector<Suggestion> suggest_alignments(std::string_view token, Facet facet,
                                           OntologyId ontology,
                                           const HaystackNamespace* haystack,
                                           const BrickSchema* brick);

/// Levenshtein distance, or `limit + 1` once it exceeds `limit`.
std::size_t edit_distance(std::string_view a, std::string_view b, std::size_t limit);

}  // namespace ontobench

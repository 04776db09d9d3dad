#pragma once

#include <array>
#include <string>
#include <vector>

#include "ontobench/alignment.hpp"
#include "ontobench/dataset.hpp"

namespace ontobench {

enum class Outcome { mapped, gap, not_applicable };

enum class ClassLabel { maps, partially_maps, does_not_map };

/// "Maps", "Partially Maps", "Does Not Map".
std::string to_string(ClassLabel label);

/// Gap coding. Declaration order is the report sort order.
enum class GapType { concept_, equipment, measure, medium };

std::string to_string(GapType type);
/// pointClass -> measure; equipmentClass/equipmentType -> equipment;
/// service -> medium; measurementControlType and modifier -> concept.
GapType gap_type_of(Facet facet);

struct FacetOutcome {
  Outcome outcome = Outcome::mapped;
  /// The concept that failed to map (empty unless a gap).
  std::string concept_name;
};

/// Outcomes indexed in `kVectorFacets` order: equipmentClass, pointClass,
/// equipmentType, measurementControlType, service.
struct FacetVector {
  std::array<FacetOutcome, 5> facets;

  FacetOutcome& operator[](Facet f) { return facets[static_cast<std::size_t>(f)]; }
  const FacetOutcome& operator[](Facet f) const { return facets[static_cast<std::size_t>(f)]; }
  std::array<Outcome, 5> outcomes() const;
};

/// Maps iff no facet is a Gap. PartiallyMaps iff equipmentClass and
/// pointClass are Mapped and exactly one of {measurementControlType,
/// service, equipmentType} is a Gap. DoesNotMap otherwise. NotApplicable is
/// neither Mapped nor Gap.
ClassLabel decision_rule(const std::array<Outcome, 5>& outcomes);
ClassLabel decision_rule(const FacetVector& vector);

enum class Significance { significant, insignificant };

/// Significant iff count / size >= 2%, compared exactly. Throws
/// `ConfigError` for size 0.
Significance significance(std::size_t count, std::size_t size);

/// round-half-up(100 * num / den) in integer arithmetic. Throws for den 0.
int percent_round_half_up(std::size_t num, std::size_t den);

/// A gap exhibited by one point.
struct PointGap {
  GapType type = GapType::concept_;
  std::string concept_name;
};

/// A token with no alignment entry, surfaced for curation.
struct CurationTodo {
  OntologyId ontology = OntologyId::haystack;
  Facet facet = Facet::point_class;
  std::string token;
  std::string point;
};

struct ClassificationResult {
  PointType point;
  OntologyId ontology = OntologyId::haystack;
  ClassLabel label = ClassLabel::maps;
  FacetVector vector;
  std::vector<PointGap> gaps;
};

/// Resolves the five facets of `point` through `table`. Unresolved facets
/// count as gaps and are appended to `todo`. A modifier entry whose token
/// words appear contiguously in the point's words and which is a curated
/// gap turns pointClass into a Gap; its concept gap is appended to
/// `modifier_gaps`.
FacetVector resolve_facets(const PointType& point, const AlignmentTable& table,
                           OntologyId ontology, std::vector<CurationTodo>* todo = nullptr,
                           std::vector<PointGap>* modifier_gaps = nullptr);

ClassificationResult classify_point(const PointType& point, const AlignmentTable& table,
                                    OntologyId ontology,
                                    std::vector<CurationTodo>* todo = nullptr);

/// Aggregated gap: distinct points per (type, concept, classification).
struct GapRecord {
  GapType type = GapType::concept_;
  std::string concept_name;
  ClassLabel context = ClassLabel::does_not_map;
  std::size_t count = 0;
  Significance significance = Significance::insignificant;
};

struct CompletenessRow {
  std::string system;
  std::size_t total = 0;
  std::size_t maps = 0;
  std::size_t partially_maps = 0;
  std::size_t does_not_map = 0;
  int pct_maps = 0;
  int pct_maps_or_partial = 0;
};

struct CompletenessReport {
  OntologyId ontology = OntologyId::haystack;
  std::size_t set_size = 0;
  /// Target systems in table order, then "Total".
  std::vector<CompletenessRow> rows;
  /// Sorted: type, significant first, Does Not Map first, count, concept.
  std::vector<GapRecord> gaps;
  std::vector<ClassificationResult> results;
  std::vector<CurationTodo> todo;
  std::vector<std::string> warnings;
};

/// Builds the completeness row for `results` under `label`.
CompletenessRow completeness_row(const std::string& label,
                                 const std::vector<const ClassificationResult*>& results);

/// Sorts and computes significance for aggregated gaps.
std::vector<GapRecord> aggregate_gaps(const std::vector<ClassificationResult>& results,
                                      std::size_t set_size);

/// Classifies every selected point (in parallel for large sets) and builds
/// the per-system rows and gap table.
CompletenessReport evaluate_completeness(const RepresentativeSet& set,
                                         const AlignmentTable& table, OntologyId ontology);

}  // namespace ontobench

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ontobench/dataset.hpp"
#include "ontobench/expressiveness.hpp"
#include "ontobench/metrics.hpp"

namespace ontobench {

enum class ReportFormat { csv, json, markdown };

std::string to_string(ReportFormat format);
/// "csv", "json", "markdown" (or "md"). Throws `ConfigError`.
ReportFormat parse_report_format(std::string_view text);

/// A significant Does Not Map gap of either ontology, with where it occurs.
struct OverlapRow {
  GapType type = GapType::concept_;
  std::string concept_name;
  /// Count of the concept's Does Not Map record in each ontology (0 if none).
  std::size_t haystack_count = 0;
  std::size_t brick_count = 0;
  /// "both", "haystack" or "brick": where the gap is significant.
  std::string presence;
};

/// Significant Does Not Map gaps of both reports, keyed by (type, concept).
/// Sorted by type, then presence (both first), then concept.
std::vector<OverlapRow> compute_overlap(const CompletenessReport& haystack,
                                        const CompletenessReport& brick);

struct RunMetadata {
  std::string haystack_version;
  std::string brick_version;
  /// 16 hex digits.
  std::string config_hash;
  /// ISO 8601 UTC; only written to the JSON bundle.
  std::string timestamp;
  std::string dataset;
  std::size_t dataset_points = 0;
};

struct ReportBundle {
  RepresentativeSet selection;
  /// Haystack first, then Brick.
  std::vector<CompletenessReport> completeness;
  ExpressivenessReport expressiveness;
  std::vector<OverlapRow> overlap;
  RunMetadata meta;
};

const CompletenessReport& completeness_of(const ReportBundle& bundle, OntologyId ontology);

std::string table1_csv(const ReportBundle& bundle);
/// `system,pct_maps,pct_maps_or_partial` per system plus Total.
std::string completeness_csv(const CompletenessReport& report);
/// `system,total,maps,partially_maps,does_not_map`: the counts behind the percentages.
std::string completeness_counts_csv(const CompletenessReport& report);
std::string gaps_csv(const CompletenessReport& report);
std::string expressiveness_csv(const ExpressivenessReport& report);
std::string expressiveness_detail_csv(const ExpressivenessReport& report);
std::string overlap_csv(const std::vector<OverlapRow>& overlap);
std::string selection_csv(const RepresentativeSet& selection);
std::string curation_todo_csv(const ReportBundle& bundle);
/// All tables plus the static qualitative checklist. No timestamp.
std::string report_markdown(const ReportBundle& bundle);
std::string bundle_json(const ReportBundle& bundle);

/// Writes the files for `formats` into `dir` (created if missing) and
/// returns their paths in write order. Throws `IoError`.
std::vector<std::string> emit_reports(const ReportBundle& bundle,
                                      const std::set<ReportFormat>& formats,
                                      const std::string& dir);

}  // namespace ontobench

#include "ontobench/metrics.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <tuple>

namespace ontobench {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> lower_words(const std::vector<std::string>& words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(lower(w));
  return out;
}

bool contains_run(const std::vector<std::string>& words, const std::vector<std::string>& run) {
  if (run.empty() || run.size() > words.size()) return false;
  return std::search(words.begin(), words.end(), run.begin(), run.end()) != words.end();
}

/// Table order for the system rows: the table systems, then Other.
std::vector<System> row_systems(const std::set<System>& targets) {
  std::vector<System> out;
  for (System s : kTableSystems) {
    if (targets.count(s)) out.push_back(s);
  }
  if (targets.count(System::other)) out.push_back(System::other);
  return out;
}

}  // namespace

std::string to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::maps: return "Maps";
    case ClassLabel::partially_maps: return "Partially Maps";
    case ClassLabel::does_not_map: return "Does Not Map";
  }
  return {};
}

std::string to_string(GapType type) {
  switch (type) {
    case GapType::concept_: return "concept";
    case GapType::equipment: return "equipment";
    case GapType::measure: return "measure";
    case GapType::medium: return "medium";
  }
  return {};
}

GapType gap_type_of(Facet facet) {
  switch (facet) {
    case Facet::point_class: return GapType::measure;
    case Facet::equipment_class:
    case Facet::equipment_type: return GapType::equipment;
    case Facet::service: return GapType::medium;
    case Facet::mct:
    case Facet::modifier: return GapType::concept_;
  }
  return GapType::concept_;
}

std::array<Outcome, 5> FacetVector::outcomes() const {
  std::array<Outcome, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) out[i] = facets[i].outcome;
  return out;
}

ClassLabel decision_rule(const std::array<Outcome, 5>& o) {
  auto at = [&](Facet f) { return o[static_cast<std::size_t>(f)]; };
  std::size_t gaps = std::count(o.begin(), o.end(), Outcome::gap);
  if (gaps == 0) return ClassLabel::maps;
  if (at(Facet::equipment_class) == Outcome::mapped && at(Facet::point_class) == Outcome::mapped &&
      gaps == 1) {
    // The single gap is necessarily among mct, service, equipmentType.
    return ClassLabel::partially_maps;
  }
  return ClassLabel::does_not_map;
}

ClassLabel decision_rule(const FacetVector& vector) { return decision_rule(vector.outcomes()); }

Significance significance(std::size_t count, std::size_t size) {
  if (size == 0) throw ConfigError("significance needs a nonempty representative set");
  return 100 * count >= 2 * size ? Significance::significant : Significance::insignificant;
}

int percent_round_half_up(std::size_t num, std::size_t den) {
  if (den == 0) throw ConfigError("percentage of an empty set");
  return static_cast<int>((200 * num + den) / (2 * den));
}

FacetVector resolve_facets(const PointType& point, const AlignmentTable& table,
                           OntologyId ontology, std::vector<CurationTodo>* todo,
                           std::vector<PointGap>* modifier_gaps) {
  FacetVector v;
  auto value_of = [&](Facet f) -> std::optional<std::string> {
    switch (f) {
      case Facet::equipment_class: return point.equipment_class;
      case Facet::point_class: return point.point_class;
      case Facet::equipment_type: return point.equipment_type;
      case Facet::mct: return to_string(point.mct);
      case Facet::service: return point.service;
      case Facet::modifier: break;
    }
    return std::nullopt;
  };
  for (Facet f : kVectorFacets) {
    auto value = value_of(f);
    if (!value) {
      v[f] = {Outcome::not_applicable, {}};
      continue;
    }
    Resolution r = resolve(table, *value, f, ontology);
    if (r.kind == Resolution::Kind::mapped) {
      v[f] = {Outcome::mapped, {}};
    } else {
      v[f] = {Outcome::gap, *value};
      if (r.kind == Resolution::Kind::unresolved && todo) {
        todo->push_back({ontology, f, *value, point.name});
      }
    }
  }

  std::vector<std::string> words = lower_words(point.words);
  for (const auto& e : table.entries()) {
    if (e.facet != Facet::modifier || e.ontology != ontology || !e.is_gap()) continue;
    if (!contains_run(words, lower_words(tokenize_point_name(e.token)))) continue;
    if (v[Facet::point_class].outcome == Outcome::mapped) {
      v[Facet::point_class] = {Outcome::gap, e.token};
    }
    if (modifier_gaps) modifier_gaps->push_back({GapType::concept_, e.token});
  }
  return v;
}

ClassificationResult classify_point(const PointType& point, const AlignmentTable& table,
                                    OntologyId ontology, std::vector<CurationTodo>* todo) {
  ClassificationResult r;
  r.point = point;
  r.ontology = ontology;
  std::vector<PointGap> modifier_gaps;
  r.vector = resolve_facets(point, table, ontology, todo, &modifier_gaps);
  r.label = decision_rule(r.vector);
  bool pc_from_modifier = !modifier_gaps.empty();
  for (Facet f : kVectorFacets) {
    const FacetOutcome& o = r.vector[f];
    if (o.outcome != Outcome::gap) continue;
    if (f == Facet::point_class && pc_from_modifier &&
        o.concept_name == modifier_gaps.front().concept_name) {
      continue;
    }
    r.gaps.push_back({gap_type_of(f), o.concept_name});
  }
  r.gaps.insert(r.gaps.end(), modifier_gaps.begin(), modifier_gaps.end());
  return r;
}

CompletenessRow completeness_row(const std::string& label,
                                 const std::vector<const ClassificationResult*>& results) {
  CompletenessRow row;
  row.system = label;
  row.total = results.size();
  for (const auto* r : results) {
    switch (r->label) {
      case ClassLabel::maps: ++row.maps; break;
      case ClassLabel::partially_maps: ++row.partially_maps; break;
      case ClassLabel::does_not_map: ++row.does_not_map; break;
    }
  }
  if (row.total > 0) {
    row.pct_maps = percent_round_half_up(row.maps, row.total);
    row.pct_maps_or_partial = percent_round_half_up(row.maps + row.partially_maps, row.total);
  }
  return row;
}

std::vector<GapRecord> aggregate_gaps(const std::vector<ClassificationResult>& results,
                                      std::size_t set_size) {
  std::map<std::tuple<GapType, std::string, ClassLabel>, std::set<std::string>> points;
  for (const auto& r : results) {
    for (const auto& g : r.gaps) points[{g.type, g.concept_name, r.label}].insert(r.point.name);
  }
  std::vector<GapRecord> out;
  for (const auto& [key, names] : points) {
    GapRecord g;
    g.type = std::get<0>(key);
    g.concept_name = std::get<1>(key);
    g.context = std::get<2>(key);
    g.count = names.size();
    g.significance = significance(g.count, set_size);
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const GapRecord& a, const GapRecord& b) {
    // ClassLabel order puts partially_maps before does_not_map; reports list
    // Does Not Map first.
    int ca = -static_cast<int>(a.context), cb = -static_cast<int>(b.context);
    return std::tie(a.type, a.significance, ca, a.count, a.concept_name) <
           std::tie(b.type, b.significance, cb, b.count, b.concept_name);
  });
  return out;
}

CompletenessReport evaluate_completeness(const RepresentativeSet& set,
                                         const AlignmentTable& table, OntologyId ontology) {
  CompletenessReport report;
  report.ontology = ontology;
  report.set_size = set.selected.size();
  if (set.selected.empty()) {
    report.warnings.push_back("representative set is empty; no completeness rows");
    return report;
  }

  // Classification is independent per point; split into a few chunks.
  const std::size_t n = set.selected.size();
  const std::size_t chunks = n >= 2048 ? 4 : 1;
  std::vector<std::vector<ClassificationResult>> parts(chunks);
  std::vector<std::vector<CurationTodo>> todos(chunks);
  auto work = [&](std::size_t c) {
    for (std::size_t i = c * n / chunks; i < (c + 1) * n / chunks; ++i) {
      parts[c].push_back(classify_point(set.selected[i], table, ontology, &todos[c]));
    }
  };
  std::vector<std::future<void>> futures;
  for (std::size_t c = 1; c < chunks; ++c) futures.push_back(std::async(std::launch::async, work, c));
  work(0);
  for (auto& f : futures) f.get();
  for (std::size_t c = 0; c < chunks; ++c) {
    for (auto& r : parts[c]) report.results.push_back(std::move(r));
    for (auto& t : todos[c]) report.todo.push_back(std::move(t));
  }

  std::vector<const ClassificationResult*> all;
  for (const auto& r : report.results) all.push_back(&r);
  for (System s : row_systems(set.target_systems)) {
    std::vector<const ClassificationResult*> in_system;
    for (const auto* r : all) {
      if (r->point.system == s) in_system.push_back(r);
    }
    if (in_system.empty()) {
      report.warnings.push_back("no selected points for system " + table_label(s));
    }
    report.rows.push_back(completeness_row(table_label(s), in_system));
  }
  report.rows.push_back(completeness_row("Total", all));
  report.gaps = aggregate_gaps(report.results, report.set_size);
  return report;
}

}  // namespace ontobench

#include "ontobench/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ontobench/csv.hpp"

namespace ontobench {

namespace {

std::string yes_no(Significance s) { return s == Significance::significant ? "Yes" : "No"; }

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + md_escape(c) + " |";
  return out + "\n";
}

std::string md_table(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::string out = md_row(header) + "|";
  for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& r : rows) out += md_row(r);
  return out;
}

std::string side_label(const KeyRelationship& k) { return to_string(k.side); }

/// Static competency questions for the qualitative review; answered by hand.
const std::pair<const char*, const char*> kQualities[] = {
    {"Flexibility",
     "Can the ontology capture uncertainty? Does it use non-restrictive methods to define "
     "concepts?"},
    {"Portability",
     "Can the same applications run across buildings using the ontology? Are concepts "
     "represented consistently in a machine-readable format?"},
    {"Readability",
     "Can domain experts and application developers unambiguously decipher real-world meaning "
     "from the semantics?"},
    {"Extensibility", "Can the ontology be customized to add new semantic concepts?"},
    {"Interoperability",
     "Can the ontology integrate with and convert to other ontologies with little human "
     "effort? Is it serialized in an industry accepted format?"},
    {"Queryability",
     "Can an instantiated model be machine traversed and the needed information retrieved? Is "
     "there low variability in semantic relationships?"},
};

void write_file(const std::filesystem::path& path, const std::string& text,
                std::vector<std::string>& written) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
  written.push_back(path.string());
}

}  // namespace

std::string to_string(ReportFormat format) {
  switch (format) {
    case ReportFormat::csv: return "csv";
    case ReportFormat::json: return "json";
    case ReportFormat::markdown: return "markdown";
  }
  return {};
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::csv;
  if (text == "json") return ReportFormat::json;
  if (text == "markdown" || text == "md") return ReportFormat::markdown;
  throw ConfigError("unknown report format '" + std::string(text) + "'");
}

std::vector<OverlapRow> compute_overlap(const CompletenessReport& haystack,
                                        const CompletenessReport& brick) {
  std::map<std::pair<GapType, std::string>, OverlapRow> rows;
  std::map<std::pair<GapType, std::string>, std::pair<bool, bool>> significant;
  auto collect = [&](const CompletenessReport& r, bool is_haystack) {
    for (const auto& g : r.gaps) {
      if (g.context != ClassLabel::does_not_map) continue;
      auto key = std::make_pair(g.type, g.concept_name);
      OverlapRow& row = rows[key];
      row.type = g.type;
      row.concept_name = g.concept_name;
      (is_haystack ? row.haystack_count : row.brick_count) = g.count;
      if (g.significance == Significance::significant) {
        (is_haystack ? significant[key].first : significant[key].second) = true;
      }
    }
  };
  collect(haystack, true);
  collect(brick, false);
  std::vector<OverlapRow> out;
  for (auto& [key, row] : rows) {
    auto it = significant.find(key);
    if (it == significant.end()) continue;
    auto [h, b] = it->second;
    row.presence = h && b ? "both" : h ? "haystack" : "brick";
    out.push_back(row);
  }
  auto rank = [](const std::string& p) { return p == "both" ? 0 : p == "haystack" ? 1 : 2; };
  std::stable_sort(out.begin(), out.end(), [&](const OverlapRow& a, const OverlapRow& b) {
    int ra = rank(a.presence), rb = rank(b.presence);
    return std::tie(a.type, ra, a.concept_name) < std::tie(b.type, rb, b.concept_name);
  });
  return out;
}

const CompletenessReport& completeness_of(const ReportBundle& bundle, OntologyId ontology) {
  for (const auto& r : bundle.completeness) {
    if (r.ontology == ontology) return r;
  }
  throw ConfigError("no " + to_string(ontology) + " completeness report in bundle");
}

std::string table1_csv(const ReportBundle& bundle) {
  const auto& hs = completeness_of(bundle, OntologyId::haystack);
  const auto& br = completeness_of(bundle, OntologyId::brick);
  std::string out = csv_line({"system", "haystack_pct_maps", "haystack_pct_maps_or_partial",
                              "brick_pct_maps", "brick_pct_maps_or_partial"});
  for (std::size_t i = 0; i < hs.rows.size() && i < br.rows.size(); ++i) {
    out += csv_line({hs.rows[i].system, std::to_string(hs.rows[i].pct_maps),
                     std::to_string(hs.rows[i].pct_maps_or_partial),
                     std::to_string(br.rows[i].pct_maps),
                     std::to_string(br.rows[i].pct_maps_or_partial)});
  }
  return out;
}

std::string completeness_csv(const CompletenessReport& report) {
  std::string out = csv_line({"system", "pct_maps", "pct_maps_or_partial"});
  for (const auto& r : report.rows) {
    out += csv_line({r.system, std::to_string(r.pct_maps), std::to_string(r.pct_maps_or_partial)});
  }
  return out;
}

std::string completeness_counts_csv(const CompletenessReport& report) {
  std::string out = csv_line({"system", "total", "maps", "partially_maps", "does_not_map"});
  for (const auto& r : report.rows) {
    out += csv_line({r.system, std::to_string(r.total), std::to_string(r.maps),
                     std::to_string(r.partially_maps), std::to_string(r.does_not_map)});
  }
  return out;
}

std::string gaps_csv(const CompletenessReport& report) {
  std::string out = csv_line({"gap_type", "significant", "classification", "concept", "count"});
  for (const auto& g : report.gaps) {
    out += csv_line({to_string(g.type), yes_no(g.significance), to_string(g.context),
                     g.concept_name, std::to_string(g.count)});
  }
  return out;
}

std::string expressiveness_csv(const ExpressivenessReport& report) {
  std::string out = csv_line({"ontology", "mapped", "total", "pct_maps"});
  for (const auto& s : report.summaries) {
    out += csv_line({to_string(s.ontology), std::to_string(s.mapped), std::to_string(s.total),
                     std::to_string(s.pct)});
  }
  return out;
}

std::string expressiveness_detail_csv(const ExpressivenessReport& report) {
  std::string out = csv_line(
      {"kind", "system", "side", "ontology", "label", "path", "inverse_path", "note"});
  for (const auto& m : report.rows) {
    out += csv_line({to_string(m.key.kind), to_string(m.key.system), side_label(m.key),
                     to_string(m.ontology), to_string(m.label), to_string(m.path),
                     to_string(m.inverse_path), m.note});
  }
  return out;
}

std::string overlap_csv(const std::vector<OverlapRow>& overlap) {
  std::string out =
      csv_line({"gap_type", "concept", "haystack_count", "brick_count", "presence"});
  for (const auto& o : overlap) {
    out += csv_line({to_string(o.type), o.concept_name, std::to_string(o.haystack_count),
                     std::to_string(o.brick_count), o.presence});
  }
  return out;
}

std::string selection_csv(const RepresentativeSet& selection) {
  struct Row {
    std::string name, system, status, reason;
  };
  std::vector<Row> rows;
  for (const auto& p : selection.selected) rows.push_back({p.name, to_string(p.system), "selected", ""});
  for (const auto& r : selection.rejected) {
    rows.push_back({r.point.name, to_string(r.point.system), "rejected", r.reason});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.name < b.name; });
  std::string out = csv_line({"name", "system", "status", "reason"});
  for (const auto& r : rows) out += csv_line({r.name, r.system, r.status, r.reason});
  return out;
}

std::string curation_todo_csv(const ReportBundle& bundle) {
  std::map<std::tuple<OntologyId, Facet, std::string>, std::set<std::string>> grouped;
  for (const auto& r : bundle.completeness) {
    for (const auto& t : r.todo) grouped[{t.ontology, t.facet, t.token}].insert(t.point);
  }
  std::string out = csv_line({"ontology", "facet", "token", "points"});
  for (const auto& [key, points] : grouped) {
    out += csv_line({to_string(std::get<0>(key)), to_string(std::get<1>(key)), std::get<2>(key),
                     std::to_string(points.size())});
  }
  return out;
}

std::string report_markdown(const ReportBundle& bundle) {
  std::ostringstream md;
  md << "# Ontology comparison report\n\n";
  md << "- Haystack version: " << bundle.meta.haystack_version << "\n";
  md << "- Brick version: " << bundle.meta.brick_version << "\n";
  md << "- Dataset: " << bundle.meta.dataset << " (" << bundle.meta.dataset_points
     << " point types, " << bundle.selection.selected.size() << " selected)\n";
  md << "- Config hash: " << bundle.meta.config_hash << "\n\n";

  md << "## Completeness\n\n";
  std::vector<std::vector<std::string>> rows;
  if (bundle.completeness.size() == 2) {
    const auto& hs = completeness_of(bundle, OntologyId::haystack);
    const auto& br = completeness_of(bundle, OntologyId::brick);
    for (std::size_t i = 0; i < hs.rows.size() && i < br.rows.size(); ++i) {
      rows.push_back({hs.rows[i].system, std::to_string(hs.rows[i].pct_maps) + "%",
                      std::to_string(hs.rows[i].pct_maps_or_partial) + "%",
                      std::to_string(br.rows[i].pct_maps) + "%",
                      std::to_string(br.rows[i].pct_maps_or_partial) + "%"});
    }
  }
  md << md_table({"System", "Haystack Maps", "Haystack Maps or Partial", "Brick Maps",
                  "Brick Maps or Partial"},
                 rows)
     << "\n";

  for (const auto& r : bundle.completeness) {
    md << "### " << (r.ontology == OntologyId::haystack ? "Haystack" : "Brick")
       << " counts\n\n";
    rows.clear();
    for (const auto& row : r.rows) {
      rows.push_back({row.system, std::to_string(row.total), std::to_string(row.maps),
                      std::to_string(row.partially_maps), std::to_string(row.does_not_map)});
    }
    md << md_table({"System", "Total", "Maps", "Partially Maps", "Does Not Map"}, rows) << "\n";
  }

  for (const auto& r : bundle.completeness) {
    md << "## " << (r.ontology == OntologyId::haystack ? "Haystack" : "Brick") << " gaps\n\n";
    rows.clear();
    for (const auto& g : r.gaps) {
      rows.push_back({to_string(g.type), yes_no(g.significance), to_string(g.context),
                      g.concept_name + " (" + std::to_string(g.count) + ")"});
    }
    md << md_table({"Gap Type", "Significant", "Classification", "Concept"}, rows) << "\n";
    for (const auto& w : r.warnings) md << "> warning: " << w << "\n";
    if (!r.warnings.empty()) md << "\n";
  }

  md << "## Significant Does Not Map gaps: overlap\n\n";
  rows.clear();
  for (const auto& o : bundle.overlap) {
    rows.push_back({to_string(o.type), o.concept_name, std::to_string(o.haystack_count),
                    std::to_string(o.brick_count), o.presence});
  }
  md << md_table({"Gap Type", "Concept", "Haystack", "Brick", "Significant In"}, rows) << "\n";

  md << "## Expressiveness\n\n";
  rows.clear();
  for (const auto& s : bundle.expressiveness.summaries) {
    rows.push_back({to_string(s.ontology), std::to_string(s.mapped), std::to_string(s.total),
                    std::to_string(s.pct) + "%"});
  }
  md << md_table({"Ontology", "Mapped", "Total", "Maps"}, rows) << "\n";
  rows.clear();
  for (const auto& m : bundle.expressiveness.rows) {
    rows.push_back({to_string(m.key.kind), to_string(m.key.system), side_label(m.key),
                    to_string(m.ontology), to_string(m.label),
                    m.path.empty() ? "-" : to_string(m.path), m.note});
  }
  md << md_table({"Kind", "System", "Side", "Ontology", "Label", "Path", "Note"}, rows) << "\n";
  if (!bundle.expressiveness.excluded.empty()) {
    md << "Not assessed:\n\n";
    for (const auto& [key, reason] : bundle.expressiveness.excluded) {
      md << "- " << key.id() << ": " << reason << "\n";
    }
    md << "\n";
  }

  md << "## Qualitative checklist\n\n";
  rows.clear();
  for (const auto& [quality, question] : kQualities) rows.push_back({quality, question, "", ""});
  md << md_table({"Quality", "Competency Questions", "Brick", "Haystack"}, rows);
  return md.str();
}

std::string bundle_json(const ReportBundle& bundle) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["metadata"] = {{"haystack_version", bundle.meta.haystack_version},
                   {"brick_version", bundle.meta.brick_version},
                   {"config_hash", bundle.meta.config_hash},
                   {"timestamp", bundle.meta.timestamp},
                   {"dataset", bundle.meta.dataset},
                   {"dataset_points", bundle.meta.dataset_points}};

  ordered_json selection;
  std::vector<std::string> systems;
  for (System s : bundle.selection.target_systems) systems.push_back(to_string(s));
  selection["target_systems"] = systems;
  selection["selected"] = ordered_json::array();
  for (const auto& p : bundle.selection.selected) selection["selected"].push_back(p.name);
  selection["rejected"] = ordered_json::array();
  for (const auto& r : bundle.selection.rejected) {
    selection["rejected"].push_back({{"name", r.point.name}, {"reason", r.reason}});
  }
  selection["warnings"] = bundle.selection.warnings;
  j["selection"] = selection;

  j["completeness"] = ordered_json::array();
  for (const auto& r : bundle.completeness) {
    ordered_json c;
    c["ontology"] = to_string(r.ontology);
    c["set_size"] = r.set_size;
    c["rows"] = ordered_json::array();
    for (const auto& row : r.rows) {
      c["rows"].push_back({{"system", row.system},
                           {"total", row.total},
                           {"maps", row.maps},
                           {"partially_maps", row.partially_maps},
                           {"does_not_map", row.does_not_map},
                           {"pct_maps", row.pct_maps},
                           {"pct_maps_or_partial", row.pct_maps_or_partial}});
    }
    c["gaps"] = ordered_json::array();
    for (const auto& g : r.gaps) {
      c["gaps"].push_back({{"gap_type", to_string(g.type)},
                           {"significant", g.significance == Significance::significant},
                           {"classification", to_string(g.context)},
                           {"concept", g.concept_name},
                           {"count", g.count}});
    }
    c["points"] = ordered_json::array();
    for (const auto& res : r.results) {
      ordered_json facets;
      for (Facet f : kVectorFacets) {
        const auto& o = res.vector[f];
        facets[to_string(f)] = o.outcome == Outcome::mapped ? "Mapped"
                               : o.outcome == Outcome::gap  ? "Gap"
                                                            : "NotApplicable";
      }
      ordered_json gaps = ordered_json::array();
      for (const auto& g : res.gaps) gaps.push_back({{"gap_type", to_string(g.type)}, {"concept", g.concept_name}});
      c["points"].push_back({{"name", res.point.name},
                             {"system", to_string(res.point.system)},
                             {"label", to_string(res.label)},
                             {"facets", facets},
                             {"gaps", gaps}});
    }
    c["warnings"] = r.warnings;
    j["completeness"].push_back(c);
  }

  ordered_json e;
  e["summaries"] = ordered_json::array();
  for (const auto& s : bundle.expressiveness.summaries) {
    e["summaries"].push_back({{"ontology", to_string(s.ontology)},
                              {"mapped", s.mapped},
                              {"total", s.total},
                              {"pct_maps", s.pct}});
  }
  e["relationships"] = ordered_json::array();
  for (const auto& m : bundle.expressiveness.rows) {
    e["relationships"].push_back({{"kind", to_string(m.key.kind)},
                                  {"system", to_string(m.key.system)},
                                  {"side", side_label(m.key)},
                                  {"ontology", to_string(m.ontology)},
                                  {"label", to_string(m.label)},
                                  {"path", to_string(m.path)},
                                  {"inverse_path", to_string(m.inverse_path)},
                                  {"note", m.note}});
  }
  e["excluded"] = ordered_json::array();
  for (const auto& [key, reason] : bundle.expressiveness.excluded) {
    e["excluded"].push_back({{"key", key.id()}, {"reason", reason}});
  }
  j["expressiveness"] = e;

  j["overlap"] = ordered_json::array();
  for (const auto& o : bundle.overlap) {
    j["overlap"].push_back({{"gap_type", to_string(o.type)},
                            {"concept", o.concept_name},
                            {"haystack_count", o.haystack_count},
                            {"brick_count", o.brick_count},
                            {"presence", o.presence}});
  }
  return j.dump(2) + "\n";
}

std::vector<std::string> emit_reports(const ReportBundle& bundle,
                                      const std::set<ReportFormat>& formats,
                                      const std::string& dir) {
  namespace fs = std::filesystem;
  if (formats.empty()) throw ConfigError("no report format selected");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir);
  fs::path root(dir);
  std::vector<std::string> written;
  if (formats.count(ReportFormat::csv)) {
    write_file(root / "table1.csv", table1_csv(bundle), written);
    for (const auto& r : bundle.completeness) {
      std::string ont = to_string(r.ontology);
      write_file(root / ("completeness_" + ont + ".csv"), completeness_csv(r), written);
      write_file(root / ("counts_" + ont + ".csv"), completeness_counts_csv(r), written);
      write_file(root / ("gaps_" + ont + ".csv"), gaps_csv(r), written);
    }
    write_file(root / "expressiveness.csv", expressiveness_csv(bundle.expressiveness), written);
    write_file(root / "expressiveness_detail.csv",
               expressiveness_detail_csv(bundle.expressiveness), written);
    write_file(root / "overlap.csv", overlap_csv(bundle.overlap), written);
    write_file(root / "selection.csv", selection_csv(bundle.selection), written);
    write_file(root / "curation_todo.csv", curation_todo_csv(bundle), written);
  }
  if (formats.count(ReportFormat::markdown)) {
    write_file(root / "report.md", report_markdown(bundle), written);
  }
  if (formats.count(ReportFormat::json)) {
    write_file(root / "bundle.json", bundle_json(bundle), written);
  }
  return written;
}

}  // namespace ontobench

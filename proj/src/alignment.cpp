#include "ontobench/alignment.hpp"

#include <algorithm>

#include "ontobench/csv.hpp"

namespace ontobench {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    out.push_back(trimmed(s.substr(start, end == std::string_view::npos ? s.npos : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string resolve_haystack_target(const HaystackNamespace& ns, std::string_view target) {
  std::string name(target);
  if (!name.empty() && name.front() == '^') name.erase(0, 1);
  if (!ns.find(name)) return {};
  return name;
}

std::string resolve_brick_target(const BrickSchema& schema, std::string_view target) {
  std::string iri = schema.expand(target);
  if (schema.classes().count(iri)) return iri;
  auto tag_ns = schema.prefixes().find("tag");
  if (tag_ns != schema.prefixes().end() && iri.rfind(tag_ns->second, 0) == 0 &&
      schema.tag_vocabulary().count(lower(iri.substr(tag_ns->second.size())))) {
    return iri;
  }
  return {};
}

/// Names a candidate is matched on: the full name and its parts.
struct Candidate {
  std::string id;
  std::string full;
  std::vector<std::string> parts;
  bool kind_match = false;
};

std::vector<std::string> camel_parts(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == '-' || c == '_') {
      if (!cur.empty()) out.push_back(lower(cur));
      cur.clear();
      continue;
    }
    if (c >= 'A' && c <= 'Z' && !cur.empty()) {
      out.push_back(lower(cur));
      cur.clear();
    }
    cur += c;
  }
  if (!cur.empty()) out.push_back(lower(cur));
  return out;
}

std::vector<Candidate> haystack_candidates(const HaystackNamespace& ns, Facet facet) {
  std::vector<Candidate> out;
  for (const auto& sym : ns.symbols()) {
    Candidate c{sym, lower(sym), camel_parts(sym), false};
    auto closure = supertype_closure(ns, sym);
    switch (facet) {
      case Facet::equipment_class:
      case Facet::equipment_type: c.kind_match = closure.count("equip") > 0; break;
      case Facet::point_class:
        c.kind_match = closure.count("quantity") > 0 || closure.count("phenomenon") > 0;
        break;
      case Facet::service: c.kind_match = closure.count("substance") > 0; break;
      case Facet::mct: c.kind_match = closure.count("pointFunction") > 0; break;
      case Facet::modifier: c.kind_match = false; break;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Candidate> brick_candidates(const BrickSchema& schema, Facet facet) {
  std::vector<Candidate> out;
  for (const auto& [iri, cls] : schema.classes()) {
    std::string local = schema.shorten(iri);
    Candidate c{local, lower(local), camel_parts(local), false};
    c.parts.insert(c.parts.end(), cls.associated_tags.begin(), cls.associated_tags.end());
    auto kinds = schema.kinds_of(iri);
    switch (facet) {
      case Facet::equipment_class:
      case Facet::equipment_type: c.kind_match = kinds.count(EntityKind::equipment) > 0; break;
      case Facet::point_class:
      case Facet::service: c.kind_match = kinds.count(EntityKind::measurable) > 0; break;
      case Facet::mct: c.kind_match = kinds.count(EntityKind::point) > 0; break;
      case Facet::modifier: c.kind_match = false; break;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::string to_string(Facet facet) {
  switch (facet) {
    case Facet::equipment_class: return "equipmentClass";
    case Facet::point_class: return "pointClass";
    case Facet::equipment_type: return "equipmentType";
    case Facet::mct: return "measurementControlType";
    case Facet::service: return "service";
    case Facet::modifier: return "modifier";
  }
  return {};
}

Facet parse_facet(std::string_view text) {
  std::string l = lower(trimmed(text));
  if (l == "equipmentclass" || l == "equipment_class" || l == "ec") return Facet::equipment_class;
  if (l == "pointclass" || l == "point_class" || l == "pc") return Facet::point_class;
  if (l == "equipmenttype" || l == "equipment_type" || l == "et") return Facet::equipment_type;
  if (l == "measurementcontroltype" || l == "measurement_control_type" || l == "mct") {
    return Facet::mct;
  }
  if (l == "service") return Facet::service;
  if (l == "modifier") return Facet::modifier;
  throw ConfigError("unknown facet '" + std::string(text) + "'");
}

std::string to_string(OntologyId id) { return id == OntologyId::haystack ? "haystack" : "brick"; }

OntologyId parse_ontology(std::string_view text) {
  std::string l = lower(trimmed(text));
  if (l == "haystack") return OntologyId::haystack;
  if (l == "brick") return OntologyId::brick;
  throw ConfigError("unknown ontology '" + std::string(text) + "'");
}

std::string to_string(Relation relation) {
  return relation == Relation::equivalence ? "equivalence" : "subsumption";
}

void AlignmentTable::add(AlignmentEntry entry) {
  auto key = std::make_tuple(lower(entry.token), entry.facet, entry.ontology);
  auto it = index_.find(key);
  if (it != index_.end()) {
    throw LoadError("duplicate alignment entry for '" + entry.token + "' (" +
                    to_string(entry.facet) + ", " + to_string(entry.ontology) + ") at lines " +
                    std::to_string(entries_[it->second].line) + " and " +
                    std::to_string(entry.line));
  }
  index_.emplace(std::move(key), entries_.size());
  entries_.push_back(std::move(entry));
}

const AlignmentEntry* AlignmentTable::find(std::string_view token, Facet facet,
                                           OntologyId ontology) const {
  auto it = index_.find(std::make_tuple(lower(token), facet, ontology));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

Resolution resolve(const AlignmentTable& table, std::string_view token, Facet facet,
                   OntologyId ontology) {
  const AlignmentEntry* e = table.find(token, facet, ontology);
  if (!e) return {Resolution::Kind::unresolved, nullptr};
  return {e->is_gap() ? Resolution::Kind::gap : Resolution::Kind::mapped, e};
}

AlignmentTable parse_alignment(std::string_view text, const std::string& file,
                               const HaystackNamespace* haystack, const BrickSchema* brick) {
  AlignmentTable table;
  if (trimmed(text).empty()) return table;
  CsvDocument doc = parse_csv(text, file);
  std::size_t c_token = doc.column("token"), c_facet = doc.column("facet"),
              c_ont = doc.column("ontology"), c_target = doc.column("target"),
              c_rel = doc.column("relation"), c_note = doc.column("note");
  for (const auto& row : doc.rows) {
    SourceLocation where{file, row.line, 0};
    AlignmentEntry e;
    e.line = row.line;
    e.token = trimmed(doc.get(row, c_token));
    if (e.token.empty()) throw ParseError(where, "empty token");
    try {
      e.facet = parse_facet(doc.get(row, c_facet));
      e.ontology = parse_ontology(doc.get(row, c_ont));
    } catch (const ConfigError& err) {
      throw ParseError(where, err.what());
    }
    std::string rel = lower(trimmed(doc.get(row, c_rel)));
    if (rel == "subsumption") {
      e.relation = Relation::subsumption;
    } else if (!rel.empty() && rel != "equivalence") {
      throw ParseError(where, "unknown relation '" + rel + "'");
    }
    e.note = doc.get(row, c_note);
    std::string target = trimmed(doc.get(row, c_target));
    if (!target.empty()) {
      for (const auto& t : split(target, '|')) {
        std::string resolved;
        if (e.ontology == OntologyId::haystack) {
          if (!haystack) throw LoadError(where.to_string() + ": no Haystack defs loaded");
          resolved = resolve_haystack_target(*haystack, t);
        } else {
          if (!brick) throw LoadError(where.to_string() + ": no Brick schema loaded");
          resolved = resolve_brick_target(*brick, t);
        }
        if (resolved.empty()) {
          throw LoadError(where.to_string() + ": token '" + e.token + "' has unresolvable " +
                          to_string(e.ontology) + " target '" + t + "'");
        }
        e.targets.push_back(std::move(resolved));
      }
    }
    try {
      table.add(std::move(e));
    } catch (const LoadError& err) {
      throw LoadError(file + ": " + err.what());
    }
  }
  return table;
}

AlignmentTable load_alignment(const std::string& path, const HaystackNamespace* haystack,
                              const BrickSchema* brick) {
  return parse_alignment(read_file(path), path, haystack, brick);
}

std::size_t edit_distance(std::string_view a, std::string_view b, std::size_t limit) {
  std::size_t diff = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  if (diff > limit) return limit + 1;
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    std::size_t best = cur[0];
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
      best = std::min(best, cur[j]);
    }
    if (best > limit) return limit + 1;
    std::swap(prev, cur);
  }
  return std::min(prev[b.size()], limit + 1);
}

std::vector<Suggestion> suggest_alignments(std::string_view token, Facet facet,
                                           OntologyId ontology,
                                           const HaystackNamespace* haystack,
                                           const BrickSchema* brick) {
  std::string t = lower(trimmed(token));
  if (t.empty()) return {};
  std::vector<Candidate> candidates;
  if (ontology == OntologyId::haystack) {
    if (!haystack) throw ConfigError("suggest needs the Haystack defs");
    candidates = haystack_candidates(*haystack, facet);
  } else {
    if (!brick) throw ConfigError("suggest needs the Brick schema");
    candidates = brick_candidates(*brick, facet);
  }
  std::vector<Suggestion> out;
  for (const auto& c : candidates) {
    int tier = -1;
    if (c.full == t) {
      tier = 0;
    } else if (std::find(c.parts.begin(), c.parts.end(), t) != c.parts.end()) {
      tier = 1;
    } else if (c.full.find(t) != std::string::npos) {
      tier = 2;
    } else if (t.size() >= 4) {
      bool near = edit_distance(t, c.full, 2) <= 2;
      for (const auto& p : c.parts) near = near || edit_distance(t, p, 2) <= 2;
      if (near) tier = 3;
    }
    if (tier >= 0) out.push_back({c.id, tier, c.kind_match});
  }
  std::sort(out.begin(), out.end(), [](const Suggestion& a, const Suggestion& b) {
    if (a.tier != b.tier) return a.tier < b.tier;
    if (a.kind_match != b.kind_match) return a.kind_match;
    return a.target < b.target;
  });
  return out;
}

}  // namespace ontobench

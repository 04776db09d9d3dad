#include "ontobench/expressiveness.hpp"

#include <algorithm>

#include <json.hpp>

#include "ontobench/csv.hpp"
#include "ontobench/metrics.hpp"

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

constexpr RelKind kAllRelKinds[] = {RelKind::sensor_location,     RelKind::location_location,
                                    RelKind::equipment_location,  RelKind::sensor_equipment,
                                    RelKind::equipment_equipment, RelKind::location_persons,
                                    RelKind::equipment_name};

const EndKindSet kEntities{EndKind::equipment, EndKind::point, EndKind::location,
                           EndKind::measurable};

bool has_side(RelKind kind) {
  return kind == RelKind::sensor_equipment || kind == RelKind::sensor_location ||
         kind == RelKind::equipment_equipment;
}

EndKind end_kind_of(EntityKind k) {
  switch (k) {
    case EntityKind::equipment: return EndKind::equipment;
    case EntityKind::point: return EndKind::point;
    case EntityKind::location: return EndKind::location;
    case EntityKind::measurable: return EndKind::measurable;
  }
  return EndKind::equipment;
}

EndKindSet haystack_kinds(const HaystackNamespace& ns, const std::string& symbol) {
  EndKindSet out;
  if (!ns.find(symbol)) return out;
  auto closure = supertype_closure(ns, symbol);
  if (closure.count("equip")) out.insert(EndKind::equipment);
  if (closure.count("point")) out.insert(EndKind::point);
  if (closure.count("site") || closure.count("space")) out.insert(EndKind::location);
  if (closure.count("phenomenon") || closure.count("quantity") || closure.count("substance")) {
    out.insert(EndKind::measurable);
  }
  return out;
}

EndKindSet tag_on_kinds(const HaystackNamespace& ns, const HaystackDef& def) {
  auto it = def.meta.find("tagOn");
  if (it == def.meta.end()) return kEntities;
  EndKindSet out;
  if (const auto* list = it->second.get_if<zinc::List>()) {
    for (const auto& item : *list) {
      if (const auto* s = item.get_if<zinc::SymbolLiteral>()) {
        auto k = haystack_kinds(ns, s->name);
        out.insert(k.begin(), k.end());
      }
    }
  }
  return out;
}

bool intersects(const EndKindSet& a, const EndKindSet& b) {
  for (EndKind k : a) {
    if (b.count(k)) return true;
  }
  return false;
}

}  // namespace

std::string to_string(RelKind kind) {
  auto [a, b] = endpoints_of(kind);
  std::string left = a == EndKind::point ? "Sensor" : to_string(a);
  return left + "<->" + to_string(b);
}

RelKind parse_rel_kind(std::string_view text) {
  std::string s = trimmed(text);
  const std::string arrow = "\xE2\x86\x94";
  for (std::size_t pos; (pos = s.find(arrow)) != std::string::npos;) s.replace(pos, arrow.size(), "<->");
  std::string compact;
  for (char c : s) {
    if (c != ' ') compact += c;
  }
  for (RelKind k : kAllRelKinds) {
    if (lower(to_string(k)) == lower(compact)) return k;
  }
  throw ConfigError("unknown relationship kind '" + std::string(text) + "'");
}

std::string to_string(Side side) {
  switch (side) {
    case Side::air: return "air";
    case Side::water: return "water";
    case Side::na: return "n/a";
  }
  return {};
}

Side parse_side(std::string_view text) {
  std::string l = lower(trimmed(text));
  if (l == "air") return Side::air;
  if (l == "water") return Side::water;
  if (l == "n/a" || l == "na" || l.empty()) return Side::na;
  throw ConfigError("unknown side '" + std::string(text) + "'");
}

std::string to_string(EndKind kind) {
  switch (kind) {
    case EndKind::equipment: return "Equipment";
    case EndKind::point: return "Point";
    case EndKind::location: return "Location";
    case EndKind::measurable: return "Measurable";
    case EndKind::name: return "Name";
    case EndKind::person: return "Persons";
  }
  return {};
}

std::pair<EndKind, EndKind> endpoints_of(RelKind kind) {
  switch (kind) {
    case RelKind::sensor_location: return {EndKind::point, EndKind::location};
    case RelKind::location_location: return {EndKind::location, EndKind::location};
    case RelKind::equipment_location: return {EndKind::equipment, EndKind::location};
    case RelKind::sensor_equipment: return {EndKind::point, EndKind::equipment};
    case RelKind::equipment_equipment: return {EndKind::equipment, EndKind::equipment};
    case RelKind::location_persons: return {EndKind::location, EndKind::person};
    case RelKind::equipment_name: return {EndKind::equipment, EndKind::name};
  }
  return {EndKind::equipment, EndKind::equipment};
}

std::string KeyRelationship::id() const {
  return to_string(kind) + "/" + to_string(system) + "/" + to_string(side);
}

KeyConfig parse_key_config(std::string_view json_text, const std::string& file) {
  using nlohmann::json;
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(file + ": invalid JSON in key relationship config");
  }
  KeyConfig cfg;
  try {
    for (const auto& k : root.at("kinds")) cfg.kinds.push_back(parse_rel_kind(k.get<std::string>()));
    for (const auto& [system, sides] : root.at("systems").items()) {
      auto& list = cfg.systems[parse_system(system)];
      for (const auto& s : sides) list.push_back(parse_side(s.get<std::string>()));
    }
    if (root.contains("service_sides")) {
      for (const auto& [service, side] : root["service_sides"].items()) {
        cfg.service_sides[lower(service)] = parse_side(side.get<std::string>());
      }
    }
    if (root.contains("equipment_sides")) {
      for (const auto& [equip, side] : root["equipment_sides"].items()) {
        cfg.equipment_sides[lower(equip)] = parse_side(side.get<std::string>());
      }
    }
    if (root.contains("location_words")) {
      for (const auto& w : root["location_words"]) cfg.location_words.push_back(lower(w.get<std::string>()));
    }
    if (root.contains("person_words")) {
      for (const auto& w : root["person_words"]) cfg.person_words.push_back(lower(w.get<std::string>()));
    }
  } catch (const json::exception& e) {
    throw ConfigError(file + ": malformed key relationship config: " + e.what());
  }
  if (cfg.kinds.empty()) throw ConfigError(file + ": key relationship config lists no kinds");
  return cfg;
}

KeyConfig load_key_config(const std::string& path) { return parse_key_config(read_file(path), path); }

KeyDerivation derive_key_relationships(const Dataset& dataset, const KeyConfig& config) {
  KeyDerivation out;
  auto side_of_service = [&](const PointType& p) -> std::optional<Side> {
    if (!p.service) return std::nullopt;
    auto it = config.service_sides.find(lower(*p.service));
    if (it == config.service_sides.end()) return std::nullopt;
    return it->second;
  };
  auto has_word = [](const PointType& p, const std::vector<std::string>& words) {
    for (const auto& w : p.words) {
      if (std::find(words.begin(), words.end(), lower(w)) != words.end()) return true;
    }
    return false;
  };
  auto is_sensor = [](const PointType& p) { return p.mct == Mct::ai || p.mct == Mct::di; };

  std::vector<System> systems;
  for (System s : kTableSystems) {
    if (config.systems.count(s)) systems.push_back(s);
  }
  if (config.systems.count(System::other)) systems.push_back(System::other);

  for (RelKind kind : config.kinds) {
    for (System system : systems) {
      std::vector<const PointType*> points;
      std::set<std::string> equipment;
      for (const auto& p : dataset.points) {
        if (p.system != system) continue;
        points.push_back(&p);
        equipment.insert(lower(p.equipment_class));
        if (p.equipment_type) equipment.insert(lower(*p.equipment_type));
      }
      std::vector<Side> sides;
      if (has_side(kind)) {
        for (Side s : config.systems.at(system)) {
          if (s != Side::na) sides.push_back(s);
        }
      } else {
        sides.push_back(Side::na);
      }
      for (Side side : sides) {
        KeyRelationship key{kind, system, side};
        std::string missing;
        bool found = false;
        switch (kind) {
          case RelKind::sensor_equipment:
          case RelKind::sensor_location:
            for (const auto* p : points) {
              if (is_sensor(*p) && side_of_service(*p) == side &&
                  (kind == RelKind::sensor_equipment || has_word(*p, config.location_words))) {
                found = true;
              }
            }
            missing = kind == RelKind::sensor_equipment
                          ? "no AI/DI point on the " + to_string(side) + " side"
                          : "no AI/DI point on the " + to_string(side) + " side names a location";
            break;
          case RelKind::equipment_equipment:
            for (const auto& a : dataset.associations) {
              std::string parent = lower(a.parent), child = lower(a.child);
              if (!equipment.count(parent) && !equipment.count(child)) continue;
              auto it = config.equipment_sides.find(child);
              if (it == config.equipment_sides.end()) it = config.equipment_sides.find(parent);
              if (it != config.equipment_sides.end() && it->second == side) found = true;
            }
            missing = "no equipment association on the " + to_string(side) + " side";
            break;
          case RelKind::equipment_location:
            for (const auto* p : points) found = found || has_word(*p, config.location_words);
            missing = "no point names a location";
            break;
          case RelKind::location_location: {
            std::set<std::string> seen;
            for (const auto* p : points) {
              for (const auto& w : p->words) {
                std::string l = lower(w);
                if (std::find(config.location_words.begin(), config.location_words.end(), l) !=
                    config.location_words.end()) {
                  seen.insert(l);
                }
              }
            }
            found = seen.size() >= 2;
            missing = "fewer than two distinct locations named";
            break;
          }
          case RelKind::location_persons:
            for (const auto* p : points) found = found || has_word(*p, config.person_words);
            missing = "no person concept in the dataset";
            break;
          case RelKind::equipment_name:
            found = !points.empty();
            missing = "no points for the system";
            break;
        }
        if (found) {
          out.expressed.push_back(key);
        } else {
          out.excluded.emplace_back(key, missing);
        }
      }
    }
  }
  return out;
}

std::string to_string(const std::vector<PathStep>& path) {
  std::string out;
  for (const auto& s : path) {
    if (!out.empty()) out += ';';
    out += s.relationship + (s.direction == Direction::fwd ? ":fwd" : ":rev");
  }
  return out;
}

std::vector<PathStep> parse_path(std::string_view text) {
  std::vector<PathStep> out;
  std::string s = trimmed(text);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(';', start);
    if (end == std::string::npos) end = s.size();
    std::string step = trimmed(std::string_view(s).substr(start, end - start));
    std::size_t colon = step.rfind(':');
    if (colon == std::string::npos) throw ConfigError("path step '" + step + "' needs ':fwd' or ':rev'");
    std::string dir = lower(step.substr(colon + 1));
    PathStep p{trimmed(step.substr(0, colon)), Direction::fwd};
    if (dir == "rev") {
      p.direction = Direction::rev;
    } else if (dir != "fwd") {
      throw ConfigError("path step '" + step + "' has unknown direction '" + dir + "'");
    }
    if (p.relationship.empty()) throw ConfigError("empty relationship in path step");
    out.push_back(std::move(p));
    start = end + 1;
  }
  return out;
}

RelationshipVocabulary RelationshipVocabulary::from_haystack(const HaystackNamespace& ns) {
  RelationshipVocabulary v;
  for (const auto& sym : ns.symbols()) {
    const HaystackDef& def = ns.at(sym);
    if (is_ref_def(ns, sym)) {
      EndKindSet range;
      auto of = def.refs.find("of");
      if (of != def.refs.end()) range = haystack_kinds(ns, of->second.text());
      v.steps_[sym] = {tag_on_kinds(ns, def), range, std::nullopt};
    } else if (is_relationship_def(ns, sym)) {
      v.steps_[sym] = {kEntities, kEntities, std::nullopt};
    } else if (sym != "str" && ns.is_a(sym, "str")) {
      v.steps_[sym] = {tag_on_kinds(ns, def), {EndKind::name}, std::nullopt};
    }
  }
  v.steps_["children"] = {{EndKind::equipment}, {EndKind::equipment, EndKind::point}, std::nullopt};
  return v;
}

RelationshipVocabulary RelationshipVocabulary::from_brick(const BrickSchema& schema) {
  RelationshipVocabulary v;
  auto convert = [](const std::set<EntityKind>& kinds) {
    EndKindSet out;
    for (EntityKind k : kinds) out.insert(end_kind_of(k));
    return out;
  };
  for (const auto& [iri, rel] : schema.relationships()) {
    std::optional<std::string> inverse;
    if (rel.inverse) inverse = schema.shorten(*rel.inverse);
    v.steps_[schema.shorten(iri)] = {convert(rel.domain_kinds), convert(rel.range_kinds), inverse};
  }
  v.steps_["label"] = {kEntities, {EndKind::name}, std::nullopt};
  return v;
}

const StepSignature* RelationshipVocabulary::find(const std::string& name) const {
  auto it = steps_.find(name);
  return it == steps_.end() ? nullptr : &it->second;
}

RelationshipTable parse_relationship_table(std::string_view text, const std::string& file,
                                           const RelationshipVocabulary* haystack,
                                           const RelationshipVocabulary* brick) {
  CsvDocument doc = parse_csv(text, file);
  std::size_t c_kind = doc.column("kind"), c_system = doc.column("system"),
              c_side = doc.column("side"), c_ont = doc.column("ontology"),
              c_path = doc.column("path"), c_note = doc.column("label_note");
  RelationshipTable table;
  for (const auto& row : doc.rows) {
    SourceLocation where{file, row.line, 0};
    RelationshipEntry e;
    e.line = row.line;
    try {
      e.key.kind = parse_rel_kind(doc.get(row, c_kind));
      e.key.system = parse_system(doc.get(row, c_system));
      e.key.side = parse_side(doc.get(row, c_side));
      e.ontology = parse_ontology(doc.get(row, c_ont));
      e.path = parse_path(doc.get(row, c_path));
    } catch (const ConfigError& err) {
      throw ParseError(where, err.what());
    }
    e.note = doc.get(row, c_note);
    const RelationshipVocabulary* vocab = e.ontology == OntologyId::haystack ? haystack : brick;
    if (!e.path.empty() && !vocab) {
      throw LoadError(where.to_string() + ": no " + to_string(e.ontology) + " ontology loaded");
    }
    for (const auto& step : e.path) {
      if (!vocab->find(step.relationship)) {
        throw LoadError(where.to_string() + ": " + to_string(e.ontology) +
                        " has no relationship '" + step.relationship + "'");
      }
    }
    table.entries.push_back(std::move(e));
  }
  return table;
}

RelationshipTable load_relationship_table(const std::string& path,
                                          const RelationshipVocabulary* haystack,
                                          const RelationshipVocabulary* brick) {
  return parse_relationship_table(read_file(path), path, haystack, brick);
}

std::string to_string(RelLabel label) { return label == RelLabel::maps ? "Maps" : "Does Not Map"; }

bool path_connects(const std::vector<PathStep>& path, const RelationshipVocabulary& vocab,
                   EndKind from, EndKind to) {
  if (path.empty()) return false;
  EndKindSet current{from};
  for (const auto& step : path) {
    const StepSignature* sig = vocab.find(step.relationship);
    if (!sig) return false;
    const EndKindSet& dom = step.direction == Direction::fwd ? sig->domain : sig->range;
    const EndKindSet& rng = step.direction == Direction::fwd ? sig->range : sig->domain;
    if (!intersects(current, dom)) return false;
    current = rng;
  }
  return current.count(to) > 0;
}

std::optional<std::vector<PathStep>> inverse_path(const std::vector<PathStep>& path,
                                                  const RelationshipVocabulary& vocab) {
  std::vector<PathStep> out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const StepSignature* sig = vocab.find(it->relationship);
    if (!sig || !sig->inverse) return std::nullopt;
    out.push_back({*sig->inverse, it->direction});
  }
  return out;
}

RelationshipMapping map_key_relationship(const KeyRelationship& key, OntologyId ontology,
                                         const RelationshipTable& table,
                                         const RelationshipVocabulary& vocab) {
  RelationshipMapping m;
  m.key = key;
  m.ontology = ontology;
  auto [a, b] = endpoints_of(key.kind);
  bool any = false;
  for (const auto& e : table.entries) {
    if (e.key != key || e.ontology != ontology) continue;
    if (!any) m.note = e.note;
    any = true;
    if (e.path.empty()) continue;
    bool forward = path_connects(e.path, vocab, a, b);
    if (!forward && !path_connects(e.path, vocab, b, a)) continue;
    m.label = RelLabel::maps;
    m.path = e.path;
    m.note = e.note;
    if (auto inv = inverse_path(e.path, vocab)) {
      bool ok = forward ? path_connects(*inv, vocab, b, a) : path_connects(*inv, vocab, a, b);
      if (ok) m.inverse_path = std::move(*inv);
    }
    return m;
  }
  if (!any) {
    throw ConfigError("no " + to_string(ontology) + " relationship entry for " + key.id());
  }
  return m;
}

ExpressivenessReport evaluate_expressiveness(const std::vector<KeyRelationship>& keys,
                                             const std::vector<OntologyRelationships>& ontologies) {
  if (keys.empty()) throw ConfigError("the expressed key relationship set is empty");
  ExpressivenessReport report;
  for (const auto& o : ontologies) {
    ExpressivenessSummary s;
    s.ontology = o.ontology;
    s.total = keys.size();
    for (const auto& k : keys) {
      RelationshipMapping m = map_key_relationship(k, o.ontology, *o.table, *o.vocab);
      if (m.label == RelLabel::maps) ++s.mapped;
      report.rows.push_back(std::move(m));
    }
    s.pct = percent_round_half_up(s.mapped, s.total);
    report.summaries.push_back(s);
  }
  return report;
}

}  // namespace ontobench

#include "ontobench/dataset.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <tuple>

#include <json.hpp>

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
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return std::string(s);
}

enum class CharClass { upper, lower, digit, other, separator };

CharClass classify(char c) {
  if (c == ' ' || c == '_' || c == '-' || c == '\t') return CharClass::separator;
  if (c >= 'A' && c <= 'Z') return CharClass::upper;
  if ((c >= 'a' && c <= 'z') || static_cast<unsigned char>(c) >= 0x80) return CharClass::lower;
  if (c >= '0' && c <= '9') return CharClass::digit;
  return CharClass::other;
}

bool is_letter(CharClass c) { return c == CharClass::upper || c == CharClass::lower; }

/// Fills facets shared by the CSV and JSON readers; throws ParseError.
PointType make_point(const std::string& file, std::size_t line, std::string name,
                     const std::string& system, std::string equipment_class,
                     std::string equipment_type, std::string point_class,
                     const std::string& mct, std::string service) {
  SourceLocation where{file, line, 0};
  PointType p;
  p.line = line;
  p.name = trimmed(name);
  if (p.name.empty()) throw ParseError(where, "point name is empty");
  try {
    p.system = parse_system(trimmed(system));
  } catch (const ConfigError& e) {
    throw ParseError(where, e.what());
  }
  p.equipment_class = trimmed(equipment_class);
  if (p.equipment_class.empty()) throw ParseError(where, "equipment_class is empty");
  p.point_class = trimmed(point_class);
  if (p.point_class.empty()) throw ParseError(where, "point_class is empty");
  auto m = parse_mct(trimmed(mct));
  if (!m) throw ParseError(where, "unknown mct value '" + trimmed(mct) + "'");
  p.mct = *m;
  std::string et = trimmed(equipment_type);
  if (!et.empty()) p.equipment_type = et;
  std::string sv = trimmed(service);
  if (!sv.empty()) p.service = sv;
  p.words = tokenize_point_name(p.name);
  if (p.words.empty()) throw ParseError(where, "point name '" + p.name + "' has no words");
  return p;
}

void derive_vocabularies(Dataset& ds) {
  for (const auto& p : ds.points) {
    ds.equipment_classes.insert(p.equipment_class);
    if (p.equipment_type) ds.equipment_types.insert(*p.equipment_type);
    ds.point_classes.insert(p.point_class);
    if (p.service) ds.services.insert(*p.service);
  }
}

void check_associations(const Dataset& ds) {
  for (const auto& a : ds.associations) {
    for (const auto* side : {&a.parent, &a.child}) {
      if (!ds.equipment_classes.count(*side) && !ds.equipment_types.count(*side)) {
        throw LoadError(ds.source + ": association names unknown equipment '" + *side + "'");
      }
    }
  }
}

}  // namespace

std::string to_string(System system) {
  switch (system) {
    case System::ahu: return "AHU";
    case System::chiller: return "Chiller";
    case System::boiler: return "Boiler";
    case System::terminal_unit: return "TerminalUnit";
    case System::loop: return "Loop";
    case System::other: return "Other";
  }
  return {};
}

std::string table_label(System system) {
  return system == System::terminal_unit ? "Terminal Units" : to_string(system);
}

System parse_system(std::string_view text) {
  std::string l = lower(trimmed(text));
  if (l == "ahu") return System::ahu;
  if (l == "chiller") return System::chiller;
  if (l == "boiler") return System::boiler;
  if (l == "terminalunit" || l == "terminal_unit" || l == "terminal units" ||
      l == "terminalunits" || l == "tu") {
    return System::terminal_unit;
  }
  if (l == "loop" || l == "loops") return System::loop;
  if (l == "other") return System::other;
  throw ConfigError("unknown system '" + std::string(text) + "'");
}

std::set<System> parse_systems(std::string_view list) {
  std::set<System> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string item = trimmed(list.substr(start, comma - start));
    if (!item.empty()) out.insert(parse_system(item));
    start = comma + 1;
  }
  return out;
}

std::string to_string(Mct mct) {
  switch (mct) {
    case Mct::ai: return "AI";
    case Mct::ao: return "AO";
    case Mct::di: return "DI";
    case Mct::do_: return "DO";
    case Mct::none: return "none";
  }
  return {};
}

std::optional<Mct> parse_mct(std::string_view text) {
  std::string l = lower(text);
  if (l == "ai") return Mct::ai;
  if (l == "ao") return Mct::ao;
  if (l == "di") return Mct::di;
  if (l == "do") return Mct::do_;
  if (l == "none" || l.empty()) return Mct::none;
  return std::nullopt;
}

std::vector<std::string> tokenize_point_name(std::string_view name) {
  if (name.empty()) throw ParseError({}, "empty point name");
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < name.size(); ++i) {
    CharClass c = classify(name[i]);
    if (c == CharClass::separator) {
      flush();
      continue;
    }
    if (!current.empty()) {
      CharClass prev = classify(name[i - 1]);
      bool split = false;
      if (is_letter(prev) != is_letter(c) || (prev == CharClass::digit) != (c == CharClass::digit) ||
          (prev == CharClass::other) != (c == CharClass::other)) {
        split = true;
      } else if (prev == CharClass::lower && c == CharClass::upper) {
        split = true;
      } else if (prev == CharClass::upper && c == CharClass::upper && i + 1 < name.size() &&
                 classify(name[i + 1]) == CharClass::lower) {
        split = true;
      }
      if (split) flush();
    }
    current += name[i];
  }
  flush();
  return tokens;
}

Dataset parse_dataset_csv(std::string_view text, const std::string& file) {
  CsvDocument doc = parse_csv(text, file);
  std::size_t c_name = doc.column("name"), c_system = doc.column("system"),
              c_ec = doc.column("equipment_class"), c_et = doc.column("equipment_type"),
              c_pc = doc.column("point_class"), c_mct = doc.column("mct"),
              c_service = doc.column("service");
  Dataset ds;
  ds.source = file;
  for (const auto& row : doc.rows) {
    ds.points.push_back(make_point(file, row.line, doc.get(row, c_name), doc.get(row, c_system),
                                   doc.get(row, c_ec), doc.get(row, c_et), doc.get(row, c_pc),
                                   doc.get(row, c_mct), doc.get(row, c_service)));
  }
  derive_vocabularies(ds);
  return ds;
}

Dataset parse_dataset_json(std::string_view text, const std::string& file) {
  using nlohmann::json;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1 + static_cast<std::size_t>(
                               std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n'));
    throw ParseError(SourceLocation{file, line, 0}, "invalid JSON");
  }
  if (!root.is_object() || !root.contains("points") || !root["points"].is_array()) {
    throw LoadError(file + ": expected an object with a 'points' array");
  }
  auto field = [&](const json& obj, const char* key, std::size_t index, bool required) {
    if (!obj.contains(key) || obj[key].is_null()) {
      if (required) {
        throw ParseError(SourceLocation{file, index, 0},
                         std::string("point is missing '") + key + "'");
      }
      return std::string();
    }
    if (!obj[key].is_string()) {
      throw ParseError(SourceLocation{file, index, 0}, std::string("'") + key + "' must be a string");
    }
    return obj[key].get<std::string>();
  };
  Dataset ds;
  ds.source = file;
  std::size_t index = 0;
  for (const auto& obj : root["points"]) {
    ++index;
    if (!obj.is_object()) throw ParseError(SourceLocation{file, index, 0}, "point must be an object");
    ds.points.push_back(make_point(file, index, field(obj, "name", index, true),
                                   field(obj, "system", index, true),
                                   field(obj, "equipment_class", index, true),
                                   field(obj, "equipment_type", index, false),
                                   field(obj, "point_class", index, true),
                                   field(obj, "mct", index, false),
                                   field(obj, "service", index, false)));
  }
  if (root.contains("associations")) {
    for (const auto& a : root["associations"]) {
      if (!a.is_object() || !a.contains("parent") || !a.contains("child") ||
          !a["parent"].is_string() || !a["child"].is_string()) {
        throw LoadError(file + ": association must be {\"parent\": ..., \"child\": ...}");
      }
      ds.associations.push_back({a["parent"].get<std::string>(), a["child"].get<std::string>()});
    }
  }
  derive_vocabularies(ds);

  auto explicit_vocab = [&](const char* key, const std::set<std::string>& used) {
    if (!root.contains(key)) return;
    std::set<std::string> declared;
    for (const auto& v : root[key]) {
      if (!v.is_string()) throw LoadError(file + ": '" + key + "' must list strings");
      declared.insert(v.get<std::string>());
    }
    for (const auto& u : used) {
      if (!declared.count(u)) {
        throw LoadError(file + ": value '" + u + "' is not in '" + key + "'");
      }
    }
    return;
  };
  explicit_vocab("equipment_classes", ds.equipment_classes);
  explicit_vocab("equipment_types", ds.equipment_types);
  explicit_vocab("point_classes", ds.point_classes);
  explicit_vocab("services", ds.services);
  check_associations(ds);
  return ds;
}

Dataset load_dataset(const std::string& path) {
  std::string text = read_file(path);
  if (std::filesystem::path(path).extension() == ".json") return parse_dataset_json(text, path);
  return parse_dataset_csv(text, path);
}

RepresentativeSet select_representative(const Dataset& dataset,
                                        const std::set<System>& target_systems,
                                        const std::vector<std::string>& exclusions) {
  RepresentativeSet rs;
  rs.target_systems = target_systems;
  std::vector<const PointType*> candidates;
  for (const auto& p : dataset.points) {
    if (target_systems.count(p.system)) candidates.push_back(&p);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const PointType* a, const PointType* b) { return a->name < b->name; });
  std::set<std::string> excluded(exclusions.begin(), exclusions.end());

  using Facets = std::tuple<std::string, std::optional<std::string>, std::string, Mct,
                            std::optional<std::string>>;
  std::map<Facets, std::string> first_with;
  std::map<System, std::set<std::string>> covered;
  for (const PointType* p : candidates) {
    if (excluded.count(p->name)) {
      rs.rejected.push_back({*p, "excluded"});
      continue;
    }
    Facets key{p->equipment_class, p->equipment_type, p->point_class, p->mct, p->service};
    auto [it, fresh] = first_with.emplace(key, p->name);
    if (!fresh) {
      rs.rejected.push_back({*p, "duplicate of " + it->second});
      continue;
    }
    auto& seen = covered[p->system];
    bool adds = false;
    for (const auto& w : p->words) {
      if (!seen.count(lower(w))) adds = true;
    }
    if (!adds) {
      rs.rejected.push_back({*p, "no unique word"});
      continue;
    }
    for (const auto& w : p->words) seen.insert(lower(w));
    rs.selected.push_back(*p);
  }
  if (rs.selected.empty()) rs.warnings.push_back("representative set is empty");
  return rs;
}

std::vector<std::string> read_exclusions(const std::string& path) {
  std::string text = read_file(path);
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = trimmed(std::string_view(text).substr(start, end - start));
    if (!line.empty() && line.front() != '#') out.push_back(line);
    start = end + 1;
  }
  return out;
}

}  // namespace ontobench

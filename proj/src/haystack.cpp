#include "ontobench/haystack.hpp"

#include <algorithm>
#include <filesystem>

#include "ontobench/graph.hpp"

namespace ontobench {

namespace {

SourceLocation location_of(const SourceSpan& span) {
  return SourceLocation{span.file, span.start_line, 0};
}

Symbol symbol_value(const zinc::Scalar& value, const SourceSpan& span,
                    const std::string& tag) {
  const auto* lit = value.get_if<zinc::SymbolLiteral>();
  if (!lit) {
    throw LoadError(span.to_string() + ": '" + tag + "' must be a symbol literal");
  }
  try {
    return Symbol::parse(lit->name);
  } catch (const ParseError& e) {
    throw LoadError(span.to_string() + ": " + e.detail());
  }
}

std::vector<std::set<Symbol>> child_protos_of(const zinc::Scalar& value,
                                              const SourceSpan& span) {
  const auto* list = value.get_if<zinc::List>();
  if (!list) throw LoadError(span.to_string() + ": 'children' must be a list");
  std::vector<std::set<Symbol>> protos;
  for (const auto& item : *list) {
    const auto* dict = item.get_if<zinc::Dict>();
    if (!dict || dict->empty()) {
      throw LoadError(span.to_string() +
                      ": each 'children' entry must be a nonempty dict");
    }
    std::set<Symbol> tags;
    for (const auto& [name, _] : *dict) {
      if (!Symbol::is_atomic(name)) {
        throw LoadError(span.to_string() + ": child proto tag '" + name +
                        "' is not an atomic symbol");
      }
      tags.insert(Symbol::parse(name));
    }
    protos.push_back(std::move(tags));
  }
  return protos;
}

HaystackDef def_from_record(const TrioRecord& record) {
  const zinc::Scalar* def = record.find("def");
  if (!def) throw LoadError(record.span.to_string() + ": record has no 'def' tag");
  HaystackDef out{symbol_value(*def, record.span, "def"), {}, {}, {}, {}, record.span};
  for (const auto& [name, value] : record.pairs) {
    if (name == "def") continue;
    if (name == "is") {
      if (const auto* list = value.get_if<zinc::List>()) {
        for (const auto& item : *list) {
          out.supertypes.push_back(symbol_value(item, record.span, "is"));
        }
      } else {
        out.supertypes.push_back(symbol_value(value, record.span, "is"));
      }
    } else if (name == "children") {
      out.child_protos = child_protos_of(value, record.span);
    } else if (value.is<zinc::SymbolLiteral>()) {
      out.refs.emplace(name, symbol_value(value, record.span, name));
    } else {
      out.meta.emplace(name, value);
    }
  }
  return out;
}

}  // namespace

const HaystackDef* HaystackNamespace::find(std::string_view symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) return nullptr;
  return &libs_[it->second.first].defs[it->second.second];
}

const HaystackDef& HaystackNamespace::at(std::string_view symbol) const {
  const HaystackDef* def = find(symbol);
  if (!def) throw LookupError("unknown Haystack def '" + std::string(symbol) + "'");
  return *def;
}

std::vector<std::string> HaystackNamespace::symbols() const {
  std::vector<std::string> out;
  out.reserve(index_.size());
  for (const auto& [name, _] : index_) out.push_back(name);
  return out;
}

bool HaystackNamespace::is_a(std::string_view sub, std::string_view super) const {
  return supertype_closure(*this, sub).count(std::string(super)) > 0;
}

HaystackNamespace build_namespace(
    std::vector<std::pair<std::string, std::vector<TrioRecord>>> libs) {
  std::sort(libs.begin(), libs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  HaystackNamespace ns;
  for (std::size_t i = 0; i < libs.size(); ++i) {
    if (i > 0 && libs[i].first == libs[i - 1].first) {
      throw LoadError("duplicate lib name '" + libs[i].first + "'");
    }
    HaystackLib lib{libs[i].first, {}};
    for (const auto& record : libs[i].second) {
      HaystackDef def = def_from_record(record);
      auto existing = ns.index_.find(def.symbol.text());
      if (existing != ns.index_.end()) {
        const SourceSpan& first =
            existing->second.first == ns.libs_.size()
                ? lib.defs[existing->second.second].span
                : ns.libs_[existing->second.first].defs[existing->second.second].span;
        throw LoadError("duplicate def '" + def.symbol.text() + "' at " +
                        first.to_string() + " and " + def.span.to_string());
      }
      ns.index_.emplace(def.symbol.text(),
                        std::make_pair(ns.libs_.size(), lib.defs.size()));
      lib.defs.push_back(std::move(def));
    }
    ns.libs_.push_back(std::move(lib));
  }

  for (const auto& lib : ns.libs_) {
    for (const auto& def : lib.defs) {
      auto& succ = ns.graph_[def.symbol.text()];
      for (const auto& super : def.supertypes) {
        if (!ns.find(super.text())) {
          throw LoadError(def.span.to_string() + ": def '" + def.symbol.text() +
                          "' has unresolved supertype '" + super.text() + "'");
        }
        succ.push_back(super.text());
      }
      if (def.symbol.is_conjunct()) {
        for (const auto& part : symbol_parts(def.symbol)) {
          if (!ns.find(part.text())) {
            ns.warnings_.push_back({location_of(def.span),
                                    "conjunct '" + def.symbol.text() +
                                        "' has undefined part '" + part.text() + "'"});
          }
        }
      }
    }
  }

  if (auto cycle = find_cycle(ns.graph_)) {
    std::string path;
    for (const auto& s : *cycle) {
      if (!path.empty()) path += " -> ";
      path += s;
    }
    throw IntegrityError("supertype cycle: " + path);
  }
  return ns;
}

HaystackNamespace build_namespace(const std::vector<TrioRecord>& records,
                                  const std::string& lib_name) {
  return build_namespace({{lib_name, records}});
}

HaystackNamespace load_haystack_dir(const std::string& dir,
                                    std::vector<ParseError>* errors) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw LoadError("Haystack def directory '" + dir + "' does not exist");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".trio") {
      files.push_back(entry.path());
    }
  }
  if (files.empty()) throw LoadError("no .trio files in '" + dir + "'");
  std::sort(files.begin(), files.end());

  std::vector<std::pair<std::string, std::vector<TrioRecord>>> libs;
  for (const auto& file : files) {
    TrioParseResult parsed = parse_trio(read_file(file.string()), file.string());
    if (!parsed.ok()) {
      if (!errors) throw parsed.errors.front();
      errors->insert(errors->end(), parsed.errors.begin(), parsed.errors.end());
    }
    libs.emplace_back(file.stem().string(), std::move(parsed.records));
  }
  return build_namespace(std::move(libs));
}

std::set<std::string> supertype_closure(const HaystackNamespace& ns,
                                        std::string_view symbol) {
  ns.at(symbol);
  return reflexive_closure(ns.supertype_graph(), std::string(symbol),
                           [](const std::string& s) { return "'" + s + "'"; });
}

bool is_ref_def(const HaystackNamespace& ns, std::string_view symbol) {
  return ns.find(symbol) && ns.is_a(symbol, "ref") && symbol != "ref";
}

bool is_relationship_def(const HaystackNamespace& ns, std::string_view symbol) {
  return ns.find(symbol) && ns.is_a(symbol, "relationship") && symbol != "relationship";
}

}  // namespace ontobench

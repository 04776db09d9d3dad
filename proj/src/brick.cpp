#include "ontobench/brick.hpp"

#include <algorithm>
#include <deque>

#include "ontobench/graph.hpp"
#include "ontobench/turtle.hpp"

namespace ontobench {

namespace {

std::string local_name(const std::string& iri) {
  std::size_t cut = iri.find_last_of("#/");
  return cut == std::string::npos ? iri : iri.substr(cut + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

}  // namespace

std::string to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::equipment: return "Equipment";
    case EntityKind::point: return "Point";
    case EntityKind::location: return "Location";
    case EntityKind::measurable: return "Measurable";
  }
  return {};
}

EntityKind parse_entity_kind(std::string_view text) {
  std::string l = lower(std::string(text));
  for (EntityKind k : kAllKinds) {
    if (lower(to_string(k)) == l) return k;
  }
  throw ConfigError("unknown entity kind '" + std::string(text) + "'");
}

std::string BrickSchema::expand(std::string_view name) const {
  if (name.size() >= 2 && name.front() == '<' && name.back() == '>') {
    return std::string(name.substr(1, name.size() - 2));
  }
  std::size_t colon = name.find(':');
  if (colon != std::string_view::npos) {
    auto it = prefixes_.find(std::string(name.substr(0, colon)));
    if (it != prefixes_.end()) return it->second + std::string(name.substr(colon + 1));
    return std::string(name);
  }
  return ns_ + std::string(name);
}

std::string BrickSchema::shorten(const std::string& iri) const {
  if (iri.rfind(ns_, 0) == 0) return iri.substr(ns_.size());
  return iri;
}

const BrickClass* BrickSchema::find_class(std::string_view name) const {
  auto it = classes_.find(expand(name));
  return it == classes_.end() ? nullptr : &it->second;
}

const BrickRelationship* BrickSchema::find_relationship(std::string_view name) const {
  auto it = relationships_.find(expand(name));
  return it == relationships_.end() ? nullptr : &it->second;
}

std::set<EntityKind> BrickSchema::kinds_of(const std::string& iri) const {
  auto it = kinds_.find(iri);
  return it == kinds_.end() ? std::set<EntityKind>{} : it->second;
}

std::string BrickSchema::root_iri(EntityKind kind) const {
  return roots_[static_cast<std::size_t>(kind)];
}

BrickSchema extract_brick_schema(const TripleStore& store, const BrickVocabulary& vocab) {
  BrickSchema schema;
  schema.prefixes_ = store.prefixes();
  auto brick = store.prefixes().find("brick");
  if (brick == store.prefixes().end()) {
    throw LoadError("schema has no 'brick' prefix declaration");
  }
  schema.ns_ = brick->second;
  for (EntityKind k : kAllKinds) schema.roots_.push_back(schema.ns_ + to_string(k));

  // Subclass edges between IRIs.
  std::map<std::string, std::vector<std::string>> children;
  std::map<std::string, std::vector<std::string>> parents;
  for (const Triple* t : store.with_predicate(vocab.subclass_of)) {
    if (!t->subject.is_iri() || !t->object.is_iri()) continue;
    children[t->object.value].push_back(t->subject.value);
    parents[t->subject.value].push_back(t->object.value);
  }

  std::set<std::string> declared;
  for (const Triple* t : store.with_predicate(rdf::type())) {
    if (t->subject.is_iri()) declared.insert(t->subject.value);
  }
  for (const auto& root : schema.roots_) {
    if (!declared.count(root) && !children.count(root)) {
      throw LoadError("schema is missing primary class <" + root + ">");
    }
  }

  std::deque<std::string> queue(schema.roots_.begin(), schema.roots_.end());
  std::set<std::string> reached(schema.roots_.begin(), schema.roots_.end());
  while (!queue.empty()) {
    std::string iri = queue.front();
    queue.pop_front();
    for (const auto& child : children[iri]) {
      if (reached.insert(child).second) queue.push_back(child);
    }
  }

  const std::string tag_predicate = schema.ns_ + vocab.associated_tag;
  Adjacency<std::string> graph;
  for (const auto& iri : reached) {
    BrickClass cls{iri, {}, {}, std::nullopt};
    std::set<std::string> seen;
    for (const auto& p : parents[iri]) {
      if (reached.count(p) && seen.insert(p).second) cls.parents.push_back(p);
    }
    for (const auto& tag : store.objects(Term::iri(iri), tag_predicate)) {
      if (tag.is_iri()) cls.associated_tags.insert(lower(local_name(tag.value)));
    }
    for (const auto& label : store.objects(Term::iri(iri), vocab.label)) {
      if (label.is_literal()) {
        cls.label = label.value;
        break;
      }
    }
    graph[iri] = cls.parents;
    schema.classes_.emplace(iri, std::move(cls));
  }
  for (const Triple* t : store.with_predicate(tag_predicate)) {
    if (t->object.is_iri()) schema.tags_.insert(lower(local_name(t->object.value)));
  }

  if (auto cycle = find_cycle(graph)) {
    std::string path;
    for (const auto& iri : *cycle) {
      if (!path.empty()) path += " -> ";
      path += schema.shorten(iri);
    }
    throw IntegrityError("subclass cycle: " + path);
  }

  for (const auto& [iri, cls] : schema.classes_) {
    std::set<EntityKind> kinds;
    for (const auto& a : subclass_closure(schema, iri)) {
      for (EntityKind k : kAllKinds) {
        if (a == schema.root_iri(k)) kinds.insert(k);
      }
    }
    if (kinds.size() > 1) {
      schema.warnings_.push_back(
          {{}, "class " + schema.shorten(iri) + " reaches more than one primary class"});
    }
    schema.kinds_[iri] = std::move(kinds);
  }

  // Relationships: declared object properties.
  for (const Triple* t : store.with_predicate(rdf::type())) {
    if (t->subject.is_iri() && t->object.is_iri() &&
        t->object.value == vocab.object_property) {
      schema.relationships_.emplace(t->subject.value,
                                    BrickRelationship{t->subject.value, {}, {}, {}});
    }
  }
  for (const Triple* t : store.with_predicate(vocab.inverse_of)) {
    if (!t->subject.is_iri() || !schema.relationships_.count(t->subject.value)) continue;
    const std::string& a = t->subject.value;
    if (!t->object.is_iri() || !schema.relationships_.count(t->object.value)) {
      throw IntegrityError("relationship " + schema.shorten(a) +
                           " has dangling inverse " + t->object.value);
    }
    const std::string& b = t->object.value;
    auto& ra = schema.relationships_.at(a);
    auto& rb = schema.relationships_.at(b);
    if ((ra.inverse && *ra.inverse != b) || (rb.inverse && *rb.inverse != a)) {
      throw IntegrityError("conflicting inverses for " + schema.shorten(a) + " and " +
                           schema.shorten(b));
    }
    ra.inverse = b;
    rb.inverse = a;
  }

  auto kinds_for = [&](const std::vector<Term>& values) {
    std::set<EntityKind> out;
    for (const auto& v : values) {
      if (!v.is_iri()) continue;
      auto k = schema.kinds_.find(v.value);
      if (k != schema.kinds_.end()) out.insert(k->second.begin(), k->second.end());
    }
    return out;
  };
  std::map<std::string, std::vector<Term>> domains, ranges;
  for (auto& [iri, rel] : schema.relationships_) {
    domains[iri] = store.objects(Term::iri(iri), vocab.domain);
    ranges[iri] = store.objects(Term::iri(iri), vocab.range);
  }
  const std::set<EntityKind> universal(std::begin(kAllKinds), std::end(kAllKinds));
  for (auto& [iri, rel] : schema.relationships_) {
    auto fill = [&](std::set<EntityKind>& out, const std::vector<Term>& own,
                    const std::map<std::string, std::vector<Term>>& other_side,
                    const char* what) {
      if (!own.empty()) {
        out = kinds_for(own);
      } else if (rel.inverse && !other_side.at(*rel.inverse).empty()) {
        out = kinds_for(other_side.at(*rel.inverse));
      } else {
        out = universal;
        schema.warnings_.push_back({{}, "relationship " + schema.shorten(iri) +
                                            " declares no " + what +
                                            "; assuming any entity kind"});
      }
    };
    fill(rel.domain_kinds, domains[iri], ranges, "domain");
    fill(rel.range_kinds, ranges[iri], domains, "range");
  }
  return schema;
}

BrickSchema load_brick_file(const std::string& path) {
  return extract_brick_schema(parse_turtle(read_file(path), path));
}

std::set<std::string> subclass_closure(const BrickSchema& schema, std::string_view iri) {
  const BrickClass* cls = schema.find_class(iri);
  if (!cls) throw LookupError("unknown Brick class '" + std::string(iri) + "'");
  std::set<std::string> out{cls->iri};
  std::vector<const BrickClass*> stack{cls};
  while (!stack.empty()) {
    const BrickClass* c = stack.back();
    stack.pop_back();
    for (const auto& p : c->parents) {
      if (out.insert(p).second) stack.push_back(&schema.classes().at(p));
    }
  }
  return out;
}

std::set<std::string> convert_brick_class_to_tags(const BrickSchema& schema,
                                                  std::string_view iri, bool declared_only,
                                                  std::vector<Diagnostic>* warnings) {
  const BrickClass* cls = schema.find_class(iri);
  if (!cls) throw LookupError("unknown Brick class '" + std::string(iri) + "'");
  std::set<std::string> tags = cls->associated_tags;
  if (!declared_only) {
    for (const auto& a : subclass_closure(schema, cls->iri)) {
      const auto& t = schema.classes().at(a).associated_tags;
      tags.insert(t.begin(), t.end());
    }
  }
  if (tags.empty() && warnings) {
    warnings->push_back({{}, "class " + schema.shorten(cls->iri) + " has no associated tags"});
  }
  return tags;
}

}  // namespace ontobench

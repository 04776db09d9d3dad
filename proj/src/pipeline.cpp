#include "ontobench/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <functional>
#include <future>

#include <json.hpp>

#include "ontobench/brick.hpp"
#include "ontobench/haystack.hpp"
#include "ontobench/turtle.hpp"

namespace ontobench {

namespace {

namespace fs = std::filesystem;

std::string resolve_path(const fs::path& base, const std::string& p) {
  fs::path path(p);
  if (path.is_relative()) path = base / path;
  return path.lexically_normal().string();
}

void require_path(const std::string& field, const std::string& path, bool directory) {
  if (path.empty()) throw ConfigError("run config: missing field '" + field + "'");
  std::error_code ec;
  bool ok = directory ? fs::is_directory(path, ec) : fs::is_regular_file(path, ec);
  if (!ok) throw ConfigError("run config: " + field + " path does not exist: " + path);
}

/// Runs `fn`, prefixing any error with the stage name.
template <typename Fn>
auto stage(const std::string& name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), name + ": " + e.what());
  } catch (const std::exception& e) {
    throw Error(ExitCode::config, name + ": " + e.what());
  }
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> trio_files(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".trio") {
      out.push_back(entry.path().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct BrickInput {
  BrickSchema schema;
  std::string version;
};

BrickInput load_brick_with_version(const std::string& path) {
  TripleStore store = parse_turtle(read_file(path), path);
  BrickInput in{extract_brick_schema(store), "unknown"};
  // The vendored file binds dcterms with '#' rather than '/'; match the
  // local name on the ontology subject.
  const Term ontology = Term::iri(std::string(rdf::kOwl) + "Ontology");
  for (const Triple& t : store.triples()) {
    const std::string& p = t.predicate.value;
    bool is_version = p.size() > 8 && p.compare(p.size() - 8, 8, "/version") == 0;
    is_version = is_version || (p.size() > 8 && p.compare(p.size() - 8, 8, "#version") == 0);
    if (is_version && t.object.is_literal() &&
        store.contains({t.subject, Term::iri(rdf::type()), ontology})) {
      in.version = t.object.value;
      break;
    }
  }
  return in;
}

}  // namespace

RunConfig parse_run_config(std::string_view json_text, const std::string& file) {
  using nlohmann::json;
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception&) {
    throw ConfigError(file + ": run config is not valid JSON");
  }
  if (!root.is_object()) throw ConfigError(file + ": run config must be a JSON object");
  fs::path base = fs::path(file).parent_path();
  RunConfig cfg;
  cfg.source_text = std::string(json_text);
  try {
    auto str = [&](const char* key) -> std::string {
      return root.contains(key) ? resolve_path(base, root[key].get<std::string>()) : std::string();
    };
    cfg.haystack_dir = str("haystack_dir");
    cfg.brick_file = str("brick_file");
    cfg.dataset = str("dataset");
    cfg.relationships = str("relationships");
    cfg.key_config = str("key_config");
    cfg.output_dir = root.contains("output_dir") ? str("output_dir") : resolve_path(base, "out");
    if (root.contains("exclusions")) cfg.exclusions = str("exclusions");
    if (root.contains("alignment")) {
      const auto& a = root["alignment"];
      if (a.is_string()) {
        cfg.alignment.push_back(resolve_path(base, a.get<std::string>()));
      } else {
        for (const auto& p : a) cfg.alignment.push_back(resolve_path(base, p.get<std::string>()));
      }
    }
    if (root.contains("target_systems")) {
      for (const auto& s : root["target_systems"]) cfg.target_systems.insert(parse_system(s.get<std::string>()));
    } else {
      cfg.target_systems.insert(std::begin(kTableSystems), std::end(kTableSystems));
    }
    if (root.contains("formats")) {
      for (const auto& f : root["formats"]) cfg.formats.insert(parse_report_format(f.get<std::string>()));
    } else {
      cfg.formats = {ReportFormat::csv, ReportFormat::markdown, ReportFormat::json};
    }
    if (root.contains("haystack_version")) cfg.haystack_version = root["haystack_version"].get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigError(file + ": malformed run config: " + e.what());
  }
  if (cfg.formats.empty()) throw ConfigError(file + ": at least one report format is required");
  if (cfg.target_systems.empty()) throw ConfigError(file + ": target_systems is empty");
  if (cfg.alignment.empty()) throw ConfigError("run config: missing field 'alignment'");
  require_path("haystack_dir", cfg.haystack_dir, true);
  require_path("brick_file", cfg.brick_file, false);
  require_path("dataset", cfg.dataset, false);
  for (const auto& a : cfg.alignment) require_path("alignment", a, false);
  require_path("relationships", cfg.relationships, false);
  require_path("key_config", cfg.key_config, false);
  if (cfg.exclusions) require_path("exclusions", *cfg.exclusions, false);
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const LoadError& e) {
    throw ConfigError(e.what());
  }
  return parse_run_config(text, path);
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string config_hash(const RunConfig& config) {
  std::uint64_t h = fnv1a64(config.source_text);
  std::vector<std::string> inputs = trio_files(config.haystack_dir);
  inputs.push_back(config.brick_file);
  inputs.push_back(config.dataset);
  inputs.insert(inputs.end(), config.alignment.begin(), config.alignment.end());
  inputs.push_back(config.relationships);
  inputs.push_back(config.key_config);
  if (config.exclusions) inputs.push_back(*config.exclusions);
  for (const auto& p : inputs) h = fnv1a64(read_file(p), h);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ReportBundle run_pipeline(const RunConfig& config) {
  ReportBundle bundle;
  bundle.meta.config_hash = stage("config", [&] { return config_hash(config); });
  bundle.meta.timestamp = utc_timestamp();
  bundle.meta.haystack_version = config.haystack_version;

  auto haystack_future = std::async(std::launch::async, [&] {
    return stage("parse-haystack", [&] { return load_haystack_dir(config.haystack_dir); });
  });
  auto brick_future = std::async(std::launch::async, [&] {
    return stage("parse-brick", [&] { return load_brick_with_version(config.brick_file); });
  });
  HaystackNamespace haystack = haystack_future.get();
  BrickInput brick = brick_future.get();
  bundle.meta.brick_version = brick.version;

  Dataset dataset = stage("dataset", [&] { return load_dataset(config.dataset); });
  bundle.meta.dataset = fs::path(config.dataset).filename().string();
  bundle.meta.dataset_points = dataset.points.size();

  bundle.selection = stage("select", [&] {
    std::vector<std::string> exclusions;
    if (config.exclusions) exclusions = read_exclusions(*config.exclusions);
    return select_representative(dataset, config.target_systems, exclusions);
  });

  AlignmentTable alignment = stage("alignment", [&] {
    AlignmentTable merged;
    for (const auto& path : config.alignment) {
      AlignmentTable t = load_alignment(path, &haystack, &brick.schema);
      for (const auto& e : t.entries()) {
        try {
          merged.add(e);
        } catch (const LoadError& err) {
          throw LoadError(path + ": " + err.what());
        }
      }
    }
    return merged;
  });

  auto evaluate = [&](OntologyId id) {
    return stage("completeness", [&] { return evaluate_completeness(bundle.selection, alignment, id); });
  };
  auto haystack_completeness = std::async(std::launch::async, evaluate, OntologyId::haystack);
  CompletenessReport brick_report = evaluate(OntologyId::brick);
  bundle.completeness.push_back(haystack_completeness.get());
  bundle.completeness.push_back(std::move(brick_report));

  bundle.expressiveness = stage("expressiveness", [&] {
    RelationshipVocabulary hs_vocab = RelationshipVocabulary::from_haystack(haystack);
    RelationshipVocabulary br_vocab = RelationshipVocabulary::from_brick(brick.schema);
    RelationshipTable table = load_relationship_table(config.relationships, &hs_vocab, &br_vocab);
    KeyDerivation keys = derive_key_relationships(dataset, load_key_config(config.key_config));
    ExpressivenessReport r = evaluate_expressiveness(
        keys.expressed, {{OntologyId::haystack, &table, &hs_vocab},
                         {OntologyId::brick, &table, &br_vocab}});
    r.excluded = std::move(keys.excluded);
    return r;
  });

  bundle.overlap = compute_overlap(bundle.completeness[0], bundle.completeness[1]);
  return bundle;
}

}  // namespace ontobench

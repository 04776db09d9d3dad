// Command line front end: full runs and per-stage inspection.

#include <cstdlib>
#include <iostream>
#include <map>

#include <unistd.h>

#include <CLI11.hpp>

#include "ontobench/alignment.hpp"
#include "ontobench/brick.hpp"
#include "ontobench/csv.hpp"
#include "ontobench/dataset.hpp"
#include "ontobench/expressiveness.hpp"
#include "ontobench/haystack.hpp"
#include "ontobench/metrics.hpp"
#include "ontobench/pipeline.hpp"
#include "ontobench/report.hpp"
#include "ontobench/turtle.hpp"

using namespace ontobench;

namespace {

bool use_color() {
  return std::getenv("ONTOBENCH_NO_COLOR") == nullptr && isatty(STDERR_FILENO);
}

void diag(const std::string& level, const std::string& message) {
  if (use_color()) {
    const char* code = level == "error" ? "\033[31m" : "\033[33m";
    std::cerr << code << level << "\033[0m: " << message << "\n";
  } else {
    std::cerr << level << ": " << message << "\n";
  }
}

const std::string kDefaultHaystack = std::string(ONTOBENCH_DATA_DIR) + "/haystack";
const std::string kDefaultBrick = std::string(ONTOBENCH_DATA_DIR) + "/brick/Brick.ttl";

struct OntologyPaths {
  std::string haystack_dir = kDefaultHaystack;
  std::string brick_file = kDefaultBrick;
};

void add_ontology_options(CLI::App* cmd, OntologyPaths& p) {
  cmd->add_option("--haystack-dir,--haystack", p.haystack_dir, "Directory of .trio def libraries")
      ->capture_default_str();
  cmd->add_option("--brick-file,--brick", p.brick_file, "Brick schema .ttl")->capture_default_str();
}

std::set<System> systems_or_default(const std::string& list) {
  if (list.empty()) return {std::begin(kTableSystems), std::end(kTableSystems)};
  return parse_systems(list);
}

RepresentativeSet select_from(const Dataset& ds, const std::string& systems,
                              const std::string& exclude_file) {
  std::vector<std::string> exclusions;
  if (!exclude_file.empty()) exclusions = read_exclusions(exclude_file);
  return select_representative(ds, systems_or_default(systems), exclusions);
}

void print_warnings(const std::vector<Diagnostic>& warnings) {
  for (const auto& w : warnings) diag("warning", w.to_string());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compare building ontologies against a point-type dataset"};
  app.require_subcommand(1);

  // run
  std::string config_path, output_override;
  std::vector<std::string> format_override;
  auto* run = app.add_subcommand("run", "Run the full comparison from a config file");
  run->add_option("--config", config_path, "Run config (JSON)")->required();
  run->add_option("--output-dir", output_override, "Override the config's output directory");
  run->add_option("--format", format_override, "Override formats: csv, json, markdown");

  // parse-haystack
  std::string haystack_dir;
  bool dump_trio = false;
  auto* parse_hs = app.add_subcommand("parse-haystack", "Load Haystack def libraries");
  parse_hs->add_option("dir", haystack_dir, "Directory of .trio files")->required();
  parse_hs->add_flag("--dump", dump_trio, "Print every def symbol with its supertypes");

  // parse-brick
  std::string brick_file;
  bool ntriples = false;
  auto* parse_br = app.add_subcommand("parse-brick", "Load a Brick schema");
  parse_br->add_option("file", brick_file, "Turtle file")->required();
  parse_br->add_flag("--ntriples", ntriples, "Print the triples as N-Triples");

  // dataset
  std::string dataset_file, systems, exclude_file;
  auto* dataset = app.add_subcommand("dataset", "Inspect the point-type dataset");
  dataset->require_subcommand(1);
  auto* ds_validate = dataset->add_subcommand("validate", "Load and summarize a dataset");
  ds_validate->add_option("file", dataset_file, "Dataset CSV or JSON")->required();
  auto* ds_select = dataset->add_subcommand("select", "Print the representative set");
  ds_select->add_option("file", dataset_file, "Dataset CSV or JSON")->required();
  ds_select->add_option("--systems", systems, "Comma-separated target systems");
  ds_select->add_option("--exclude-file", exclude_file, "Point names to exclude");

  // align
  OntologyPaths align_paths;
  std::string alignment_file, token, facet_text = "pointClass", ontology_text = "brick";
  std::size_t limit = 10;
  auto* align = app.add_subcommand("align", "Check or extend alignment tables");
  align->require_subcommand(1);
  auto* al_check = align->add_subcommand("check", "Validate an alignment CSV");
  al_check->add_option("file", alignment_file, "Alignment CSV")->required();
  add_ontology_options(al_check, align_paths);
  auto* al_suggest = align->add_subcommand("suggest", "Rank candidate targets for a token");
  al_suggest->add_option("token", token, "Dataset token")->required();
  al_suggest->add_option("--facet", facet_text, "Facet of the token")->capture_default_str();
  al_suggest->add_option("--ontology", ontology_text, "haystack or brick")->capture_default_str();
  al_suggest->add_option("--limit", limit, "Maximum suggestions")->capture_default_str();
  add_ontology_options(al_suggest, align_paths);

  // completeness
  OntologyPaths comp_paths;
  std::vector<std::string> comp_alignment;
  std::string comp_ontology = "brick", comp_out;
  auto* completeness = app.add_subcommand("completeness", "Classify the representative set");
  completeness->add_option("--dataset", dataset_file, "Dataset CSV or JSON")->required();
  completeness->add_option("--alignment", comp_alignment, "Alignment CSV(s)")->required();
  completeness->add_option("--ontology", comp_ontology, "haystack or brick")->capture_default_str();
  completeness->add_option("--systems", systems, "Comma-separated target systems");
  completeness->add_option("--exclude-file", exclude_file, "Point names to exclude");
  completeness->add_option("--gaps", comp_out, "Also write the gap table to this file");
  add_ontology_options(completeness, comp_paths);

  // expressiveness
  OntologyPaths expr_paths;
  std::string key_config, relationships;
  bool detail = false;
  auto* expressiveness = app.add_subcommand("expressiveness", "Map the key relationships");
  expressiveness->add_option("--dataset", dataset_file, "Dataset CSV or JSON")->required();
  expressiveness->add_option("--key-config", key_config, "Key relationship config")->required();
  expressiveness->add_option("--relationships", relationships, "Relationship CSV")->required();
  expressiveness->add_flag("--detail", detail, "Print the per-relationship table");
  add_ontology_options(expressiveness, expr_paths);

  // convert-tags
  std::string class_name;
  std::string convert_brick = kDefaultBrick;
  bool declared_only = false;
  auto* convert = app.add_subcommand("convert-tags", "Haystack-style tags of a Brick class");
  convert->add_option("class", class_name, "Class IRI, prefixed or local name")->required();
  convert->add_option("--brick-file", convert_brick, "Brick schema .ttl")->capture_default_str();
  convert->add_flag("--declared-only", declared_only, "Skip tags inherited from ancestors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (run->parsed()) {
      RunConfig cfg = load_run_config(config_path);
      if (!output_override.empty()) cfg.output_dir = output_override;
      if (!format_override.empty()) {
        cfg.formats.clear();
        for (const auto& f : format_override) cfg.formats.insert(parse_report_format(f));
      }
      ReportBundle bundle = run_pipeline(cfg);
      for (const auto& r : bundle.completeness) {
        for (const auto& w : r.warnings) diag("warning", to_string(r.ontology) + ": " + w);
      }
      for (const auto& w : bundle.selection.warnings) diag("warning", w);
      for (const auto& path : emit_reports(bundle, cfg.formats, cfg.output_dir)) {
        std::cout << path << "\n";
      }
      for (const auto& s : bundle.expressiveness.summaries) {
        std::cerr << "expressiveness " << to_string(s.ontology) << ": " << s.mapped << "/"
                  << s.total << " (" << s.pct << "%)\n";
      }
    } else if (parse_hs->parsed()) {
      std::vector<ParseError> errors;
      HaystackNamespace ns = load_haystack_dir(haystack_dir, &errors);
      for (const auto& e : errors) diag("error", e.what());
      print_warnings(ns.warnings());
      std::size_t refs = 0, rels = 0;
      for (const auto& sym : ns.symbols()) {
        refs += is_ref_def(ns, sym);
        rels += is_relationship_def(ns, sym);
      }
      for (const auto& lib : ns.libs()) std::cout << lib.name << ": " << lib.defs.size() << " defs\n";
      std::cout << "defs " << ns.size() << "\nref_defs " << refs << "\nrelationship_defs " << rels
                << "\n";
      if (dump_trio) {
        for (const auto& [sym, supers] : ns.supertype_graph()) {
          std::cout << sym << " :";
          for (const auto& s : supers) std::cout << " " << s;
          std::cout << "\n";
        }
      }
      return errors.empty() ? 0 : static_cast<int>(ExitCode::config);
    } else if (parse_br->parsed()) {
      TripleStore store = parse_turtle(read_file(brick_file), brick_file);
      if (ntriples) {
        std::cout << serialize_ntriples(store);
        return 0;
      }
      BrickSchema schema = extract_brick_schema(store);
      print_warnings(schema.warnings());
      std::size_t with_inverse = 0;
      for (const auto& [iri, rel] : schema.relationships()) with_inverse += rel.inverse.has_value();
      std::cout << "triples " << store.size() << "\nclasses " << schema.classes().size()
                << "\nrelationships " << schema.relationships().size() << "\ninverse_pairs "
                << with_inverse / 2 << "\ntags " << schema.tag_vocabulary().size() << "\n";
    } else if (ds_validate->parsed()) {
      Dataset ds = load_dataset(dataset_file);
      std::map<System, std::size_t> per_system;
      for (const auto& p : ds.points) ++per_system[p.system];
      std::cout << "points " << ds.points.size() << "\nassociations " << ds.associations.size()
                << "\n";
      for (const auto& [s, n] : per_system) std::cout << to_string(s) << " " << n << "\n";
    } else if (ds_select->parsed()) {
      RepresentativeSet set = select_from(load_dataset(dataset_file), systems, exclude_file);
      for (const auto& w : set.warnings) diag("warning", w);
      std::cout << selection_csv(set);
    } else if (al_check->parsed()) {
      HaystackNamespace ns = load_haystack_dir(align_paths.haystack_dir);
      BrickSchema schema = load_brick_file(align_paths.brick_file);
      AlignmentTable table = load_alignment(alignment_file, &ns, &schema);
      std::map<std::pair<OntologyId, bool>, std::size_t> counts;
      for (const auto& e : table.entries()) ++counts[{e.ontology, e.is_gap()}];
      std::cout << "entries " << table.size() << "\n";
      for (const auto& [key, n] : counts) {
        std::cout << to_string(key.first) << (key.second ? " gaps " : " mapped ") << n << "\n";
      }
    } else if (al_suggest->parsed()) {
      OntologyId ont = parse_ontology(ontology_text);
      std::optional<HaystackNamespace> ns;
      std::optional<BrickSchema> schema;
      if (ont == OntologyId::haystack) {
        ns = load_haystack_dir(align_paths.haystack_dir);
      } else {
        schema = load_brick_file(align_paths.brick_file);
      }
      auto out = suggest_alignments(token, parse_facet(facet_text), ont, ns ? &*ns : nullptr,
                                    schema ? &*schema : nullptr);
      std::cout << csv_line({"target", "tier", "kind_match"});
      for (std::size_t i = 0; i < out.size() && i < limit; ++i) {
        std::cout << csv_line({out[i].target, std::to_string(out[i].tier),
                               out[i].kind_match ? "yes" : "no"});
      }
    } else if (completeness->parsed()) {
      HaystackNamespace ns = load_haystack_dir(comp_paths.haystack_dir);
      BrickSchema schema = load_brick_file(comp_paths.brick_file);
      AlignmentTable table;
      for (const auto& path : comp_alignment) {
        AlignmentTable part = load_alignment(path, &ns, &schema);
        for (const auto& e : part.entries()) table.add(e);
      }
      RepresentativeSet set = select_from(load_dataset(dataset_file), systems, exclude_file);
      CompletenessReport r = evaluate_completeness(set, table, parse_ontology(comp_ontology));
      for (const auto& w : r.warnings) diag("warning", w);
      std::cout << completeness_csv(r) << "\n" << completeness_counts_csv(r);
      if (!comp_out.empty()) {
        std::ofstream out(comp_out, std::ios::binary);
        if (!(out << gaps_csv(r))) throw IoError("cannot write " + comp_out);
      }
    } else if (expressiveness->parsed()) {
      HaystackNamespace ns = load_haystack_dir(expr_paths.haystack_dir);
      BrickSchema schema = load_brick_file(expr_paths.brick_file);
      auto hs_vocab = RelationshipVocabulary::from_haystack(ns);
      auto br_vocab = RelationshipVocabulary::from_brick(schema);
      RelationshipTable table = load_relationship_table(relationships, &hs_vocab, &br_vocab);
      KeyDerivation keys = derive_key_relationships(load_dataset(dataset_file),
                                                    load_key_config(key_config));
      for (const auto& [key, reason] : keys.excluded) diag("warning", key.id() + " not assessed: " + reason);
      ExpressivenessReport r = evaluate_expressiveness(
          keys.expressed, {{OntologyId::haystack, &table, &hs_vocab},
                           {OntologyId::brick, &table, &br_vocab}});
      std::cout << (detail ? expressiveness_detail_csv(r) : expressiveness_csv(r));
    } else if (convert->parsed()) {
      BrickSchema schema = load_brick_file(convert_brick);
      std::vector<Diagnostic> warnings;
      auto tags = convert_brick_class_to_tags(schema, schema.expand(class_name), declared_only,
                                              &warnings);
      print_warnings(warnings);
      for (const auto& t : tags) std::cout << t << "\n";
    }
  } catch (const Error& e) {
    diag("error", e.what());
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    diag("error", e.what());
    return static_cast<int>(ExitCode::config);
  }
  return 0;
}

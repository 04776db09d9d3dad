#include <gtest/gtest.h>

#include "ontobench/brick.hpp"
#include "ontobench/graph.hpp"
#include "ontobench/turtle.hpp"
#include "support.hpp"

using namespace ontobench;
using namespace ontobench::testing;

namespace {

const std::string kPrefixes =
    "@prefix brick: <https://brickschema.org/schema/1.1/Brick#> .\n"
    "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
    "@prefix tag: <https://brickschema.org/schema/1.1/BrickTag#> .\n"
    "brick:Equipment a owl:Class .\nbrick:Point a owl:Class .\n"
    "brick:Location a owl:Class .\nbrick:Measurable a owl:Class .\n";

const BrickSchema& vendored() {
  static const BrickSchema schema = load_brick_file(data_path("brick/Brick.ttl"));
  return schema;
}

}  // namespace

TEST(Turtle, ParsesSubset) {
  auto store = parse_turtle(
      "@prefix ex: <http://ex.org/> .\n"
      "PREFIX rdfs: <http://www.w3.org/2000/01/rdf-schema#>\n"
      "ex:a a ex:B ; rdfs:label \"A\"@en , \"x\\\"y\" ;\n"
      "  ex:p [ ex:q ex:c ] ; ex:list ( ex:d ex:e ) ; ex:flag true .\n"
      "_:n ex:p <http://ex.org/z> .\n",
      "t.ttl");
  // a, 2 labels, p + inner q, list head + 2x(first,rest), flag, _:n
  EXPECT_EQ(store.size(), 1u + 2 + 2 + 1 + 4 + 1 + 1);
  Term a = Term::iri("http://ex.org/a");
  auto labels = store.objects(a, "http://www.w3.org/2000/01/rdf-schema#label");
  ASSERT_EQ(labels.size(), 2u);
  EXPECT_EQ(labels[0].lang, "en");
  EXPECT_EQ(labels[1].value, "x\"y");
  auto p = store.objects(a, "http://ex.org/p");
  ASSERT_EQ(p.size(), 1u);
  EXPECT_TRUE(p[0].is_blank());
  EXPECT_EQ(p[0].value, "anon1");
}

TEST(Turtle, RejectsUnsupportedWithLocation) {
  for (const char* bad : {"<http://a> <http://b> 42 .",
                          "<http://a> <http://b> \"x\"^^<http://t> .",
                          "@base <http://a/> .",
                          "ex:a ex:b ex:c .",
                          "<http://a> <http://b> \"unterminated .",
                          "<http://a> <http://b> <http://c>"}) {
    try {
      parse_turtle(bad, "bad.ttl");
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.where().file, "bad.ttl");
      EXPECT_GE(e.where().line, 1u);
    }
  }
}

TEST(Turtle, NTriplesRoundTrip) {
  std::string text = read_file(data_path("brick/Brick.ttl"));
  TripleStore a = parse_turtle(text, "Brick.ttl");
  EXPECT_EQ(a.size(), kBrickTriples);
  TripleStore b = parse_turtle(serialize_ntriples(a), "again.nt");
  ASSERT_EQ(a.size(), b.size());
  for (const Triple& t : a.triples()) ASSERT_TRUE(b.contains(t));
}

TEST(Brick, VendoredSchemaMatchesOracle) {
  const BrickSchema& s = vendored();
  EXPECT_EQ(s.classes().size(), kBrickClasses);
  EXPECT_EQ(s.relationships().size(), kBrickObjectProperties);
  std::size_t with_inverse = 0;
  for (const auto& [iri, r] : s.relationships()) with_inverse += r.inverse.has_value();
  EXPECT_EQ(with_inverse, 2 * kBrickInversePairs);
  EXPECT_EQ(s.tag_vocabulary().size(), kBrickLowercasedTags);
  EXPECT_EQ(s.ns(), "https://brickschema.org/schema/1.1/Brick#");
}

TEST(Brick, InversesAreSymmetric) {
  const BrickSchema& s = vendored();
  for (const auto& [iri, r] : s.relationships()) {
    if (!r.inverse) continue;
    const BrickRelationship* inv = s.find_relationship(*r.inverse);
    ASSERT_NE(inv, nullptr) << iri;
    ASSERT_TRUE(inv->inverse);
    EXPECT_EQ(*inv->inverse, iri);
  }
  EXPECT_EQ(*s.find_relationship("hasPoint")->inverse, s.expand("isPointOf"));
}

TEST(Brick, SubclassGraphAcyclicAndRooted) {
  const BrickSchema& s = vendored();
  Adjacency<std::string> g;
  for (const auto& [iri, c] : s.classes()) g[iri] = c.parents;
  EXPECT_FALSE(find_cycle(g));
  for (const auto& [iri, c] : s.classes()) EXPECT_FALSE(s.kinds_of(iri).empty()) << iri;
  auto up = subclass_closure(s, s.expand("Supply_Air_Temperature_Sensor"));
  EXPECT_TRUE(up.count(s.root_iri(EntityKind::point)));
}

TEST(Brick, ConvertsClassToTags) {
  const BrickSchema& s = vendored();
  auto tags = convert_brick_class_to_tags(s, s.expand("Supply_Air_Temperature_Sensor"));
  EXPECT_EQ(tags, (std::set<std::string>{"air", "point", "sensor", "supply", "temperature"}));
  auto declared = convert_brick_class_to_tags(s, s.expand("Temperature_Sensor"), true);
  auto all = convert_brick_class_to_tags(s, s.expand("Temperature_Sensor"), false);
  EXPECT_TRUE(std::includes(all.begin(), all.end(), declared.begin(), declared.end()));
  EXPECT_THROW(convert_brick_class_to_tags(s, s.expand("No_Such_Class")), LookupError);
}

TEST(Brick, NameExpansion) {
  const BrickSchema& s = vendored();
  EXPECT_EQ(s.expand("AHU"), s.ns() + "AHU");
  EXPECT_EQ(s.expand("brick:AHU"), s.ns() + "AHU");
  EXPECT_EQ(s.expand("<" + s.ns() + "AHU>"), s.ns() + "AHU");
  EXPECT_EQ(s.shorten(s.ns() + "AHU"), "AHU");
  EXPECT_NE(s.find_class("AHU"), nullptr);
  EXPECT_EQ(s.find_class("Nope"), nullptr);
}

TEST(Brick, EmptyTagSetWarns) {
  auto store = parse_turtle(kPrefixes + "brick:Thing rdfs:subClassOf brick:Equipment .\n");
  BrickSchema s = extract_brick_schema(store);
  std::vector<Diagnostic> warnings;
  EXPECT_TRUE(convert_brick_class_to_tags(s, s.expand("Thing"), false, &warnings).empty());
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(Brick, IntegrityErrors) {
  EXPECT_THROW(extract_brick_schema(parse_turtle(
                   kPrefixes + "brick:A rdfs:subClassOf brick:Equipment, brick:B .\n"
                               "brick:B rdfs:subClassOf brick:A .\n")),
               IntegrityError);
  EXPECT_THROW(extract_brick_schema(parse_turtle(
                   kPrefixes + "brick:p a owl:ObjectProperty ; owl:inverseOf brick:q .\n")),
               IntegrityError);
  EXPECT_THROW(extract_brick_schema(parse_turtle(
                   "@prefix brick: <https://brickschema.org/schema/1.1/Brick#> .\n"
                   "brick:A a brick:B .\n")),
               LoadError);
}

#include <gtest/gtest.h>

#include "ontobench/expressiveness.hpp"
#include "support.hpp"

using namespace ontobench;
using namespace ontobench::testing;

namespace {

struct Vocabs {
  HaystackNamespace haystack_ns = load_haystack_dir(data_path("haystack"));
  BrickSchema brick_schema = load_brick_file(data_path("brick/Brick.ttl"));
  RelationshipVocabulary haystack = RelationshipVocabulary::from_haystack(haystack_ns);
  RelationshipVocabulary brick = RelationshipVocabulary::from_brick(brick_schema);
};

const Vocabs& vocabs() {
  static const Vocabs v;
  return v;
}

RelationshipTable table(const std::string& rows) {
  return parse_relationship_table("kind,system,side,ontology,path,label_note\n" + rows, "r.csv",
                                  &vocabs().haystack, &vocabs().brick);
}

const KeyRelationship kBoilerSensor{RelKind::sensor_equipment, System::boiler, Side::water};
const KeyRelationship kLoopEquip{RelKind::equipment_equipment, System::loop, Side::water};

}  // namespace

TEST(RelKinds, NamesRoundTrip) {
  for (auto k : {RelKind::sensor_location, RelKind::location_location, RelKind::equipment_location,
                 RelKind::sensor_equipment, RelKind::equipment_equipment,
                 RelKind::location_persons, RelKind::equipment_name}) {
    EXPECT_EQ(parse_rel_kind(to_string(k)), k);
  }
  EXPECT_EQ(parse_rel_kind("sensor \xE2\x86\x94 equipment"), RelKind::sensor_equipment);
  EXPECT_EQ(to_string(RelKind::sensor_equipment), "Sensor<->Equipment");
  EXPECT_THROW(parse_rel_kind("Sensor->Equipment"), ConfigError);
  EXPECT_EQ(parse_side("N/A"), Side::na);
  EXPECT_EQ(parse_side(""), Side::na);
  EXPECT_EQ(kBoilerSensor.id(), "Sensor<->Equipment/Boiler/water");
}

TEST(Paths, ParseAndPrint) {
  auto p = parse_path("feeds:fwd;feeds:rev");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[1].direction, Direction::rev);
  EXPECT_EQ(to_string(p), "feeds:fwd;feeds:rev");
  EXPECT_TRUE(parse_path("").empty());
  EXPECT_THROW(parse_path("feeds"), ConfigError);
  EXPECT_THROW(parse_path("feeds:up"), ConfigError);
}

TEST(Vocabulary, SignaturesFromBothOntologies) {
  const auto* equip_ref = vocabs().haystack.find("equipRef");
  ASSERT_NE(equip_ref, nullptr);
  EXPECT_EQ(equip_ref->range, EndKindSet{EndKind::equipment});
  EXPECT_TRUE(equip_ref->domain.count(EndKind::point));
  EXPECT_NE(vocabs().haystack.find("navName"), nullptr);
  const auto* has_point = vocabs().brick.find("hasPoint");
  ASSERT_NE(has_point, nullptr);
  EXPECT_EQ(has_point->range, EndKindSet{EndKind::point});
  EXPECT_EQ(*has_point->inverse, "isPointOf");
  EXPECT_EQ(vocabs().brick.find("label")->range, EndKindSet{EndKind::name});
  EXPECT_EQ(vocabs().brick.find("equipRef"), nullptr);
}

TEST(Mapping, BoilerHasPointWithInverse) {
  auto t = table("Sensor<->Equipment,Boiler,water,brick,hasPoint:fwd,\n");
  auto m = map_key_relationship(kBoilerSensor, OntologyId::brick, t, vocabs().brick);
  EXPECT_EQ(m.label, RelLabel::maps);
  EXPECT_EQ(to_string(m.path), "hasPoint:fwd");
  EXPECT_EQ(to_string(m.inverse_path), "isPointOf:fwd");
}

TEST(Mapping, ChillerLoopTwoStepPath) {
  auto t = table("Equipment<->Equipment,Loop,water,brick,feeds:fwd;feeds:rev,\n");
  auto m = map_key_relationship(kLoopEquip, OntologyId::brick, t, vocabs().brick);
  EXPECT_EQ(m.label, RelLabel::maps);
  EXPECT_EQ(m.path.size(), 2u);
  EXPECT_EQ(to_string(m.inverse_path), "isFedBy:rev;isFedBy:fwd");
}

TEST(Mapping, NoPathDoesNotMap) {
  auto t = table("Equipment<->Equipment,Loop,water,haystack,,no relationship\n");
  auto m = map_key_relationship(kLoopEquip, OntologyId::haystack, t, vocabs().haystack);
  EXPECT_EQ(m.label, RelLabel::does_not_map);
  EXPECT_EQ(m.note, "no relationship");
}

TEST(Mapping, IncompatibleKindsDoNotMap) {
  // measures goes point -> measurable, which cannot join a point to equipment.
  auto t = table("Sensor<->Equipment,Boiler,water,brick,measures:fwd,\n");
  EXPECT_EQ(map_key_relationship(kBoilerSensor, OntologyId::brick, t, vocabs().brick).label,
            RelLabel::does_not_map);
  EXPECT_TRUE(path_connects(parse_path("isPointOf:fwd"), vocabs().brick, EndKind::point,
                            EndKind::equipment));
  EXPECT_TRUE(path_connects(parse_path("hasPoint:rev"), vocabs().brick, EndKind::point,
                            EndKind::equipment));
  EXPECT_FALSE(path_connects(parse_path("hasPoint:fwd"), vocabs().brick, EndKind::point,
                             EndKind::equipment));
}

TEST(Mapping, MissingEntryAndUnknownStep) {
  RelationshipTable empty;
  EXPECT_THROW(map_key_relationship(kBoilerSensor, OntologyId::brick, empty, vocabs().brick),
               ConfigError);
  try {
    table("Sensor<->Equipment,Boiler,water,brick,hasWidget:fwd,\n");
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_NE(std::string(e.what()).find("r.csv:2"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("hasWidget"), std::string::npos);
  }
}

TEST(Evaluate, ZeroKeysIsError) {
  RelationshipTable t;
  EXPECT_THROW(evaluate_expressiveness({}, {{OntologyId::brick, &t, &vocabs().brick}}), ConfigError);
}

TEST(Evaluate, ConfiguredKeysGiveExpectedPercentages) {
  Dataset ds = load_dataset(data_path("mini/dataset.json"));
  KeyConfig cfg = load_key_config(data_path("config/key_relationships.json"));
  KeyDerivation keys = derive_key_relationships(ds, cfg);
  EXPECT_EQ(keys.expressed.size(), 27u);
  RelationshipTable t = load_relationship_table(data_path("config/relationships.csv"),
                                                &vocabs().haystack, &vocabs().brick);
  auto r = evaluate_expressiveness(keys.expressed, {{OntologyId::haystack, &t, &vocabs().haystack},
                                                    {OntologyId::brick, &t, &vocabs().brick}});
  ASSERT_EQ(r.summaries.size(), 2u);
  EXPECT_EQ(r.summaries[0].mapped, 26u);
  EXPECT_EQ(r.summaries[0].pct, 96);
  EXPECT_EQ(r.summaries[1].mapped, 27u);
  EXPECT_EQ(r.summaries[1].pct, 100);
}

TEST(KeyConfigs, Validation) {
  EXPECT_THROW(parse_key_config("{}"), ConfigError);
  EXPECT_THROW(parse_key_config(R"({"kinds": []})"), ConfigError);
  EXPECT_THROW(parse_key_config("nope"), ConfigError);
  KeyConfig c = parse_key_config(R"({"kinds": ["Equipment<->Name"], "systems": {"AHU": ["n/a"]}})");
  EXPECT_EQ(c.kinds, std::vector<RelKind>{RelKind::equipment_name});
}

TEST(KeyDerivations, EvidenceRules) {
  Dataset ds = parse_dataset_csv(
      "name,system,equipment_class,equipment_type,point_class,mct,service\n"
      "ZoneTemp,TerminalUnit,VAV,,Temperature,AI,Air\n"
      "DamperCmd,TerminalUnit,VAV,,Command,AO,Air\n");
  KeyConfig c = parse_key_config(R"({
    "kinds": ["Sensor<->Equipment", "Sensor<->Location", "Location<->Location", "Equipment<->Name"],
    "systems": {"TerminalUnit": ["air", "water"]},
    "service_sides": {"air": "air"},
    "location_words": ["zone", "room"]})");
  KeyDerivation d = derive_key_relationships(ds, c);
  std::vector<std::string> ids;
  for (const auto& k : d.expressed) ids.push_back(k.id());
  EXPECT_EQ(ids, (std::vector<std::string>{"Sensor<->Equipment/TerminalUnit/air",
                                           "Sensor<->Location/TerminalUnit/air",
                                           "Equipment<->Name/TerminalUnit/n/a"}));
  // water sides and the single-word Location<->Location are excluded with reasons.
  EXPECT_EQ(d.excluded.size(), 3u);
  for (const auto& [k, why] : d.excluded) EXPECT_FALSE(why.empty()) << k.id();
}

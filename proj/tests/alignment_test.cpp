#include <gtest/gtest.h>

#include "ontobench/alignment.hpp"
#include "support.hpp"

using namespace ontobench;
using namespace ontobench::testing;

namespace {

const HaystackNamespace& haystack() {
  static const HaystackNamespace ns = load_haystack_dir(data_path("haystack"));
  return ns;
}

const BrickSchema& brick() {
  static const BrickSchema s = load_brick_file(data_path("brick/Brick.ttl"));
  return s;
}

const char* kHeader = "token,facet,ontology,target,relation,note\n";

AlignmentTable parse(const std::string& rows) {
  return parse_alignment(kHeader + rows, "a.csv", &haystack(), &brick());
}

}  // namespace

TEST(Alignment, ParsesAndResolves) {
  AlignmentTable t = parse(
      "AHU,equipmentClass,haystack,^ahu,equivalence,\n"
      "AHU,ec,brick,AHU,,\n"
      "Temp,pc,haystack,temp|sensor,subsumption,two targets\n"
      "Reset,modifier,brick,,,curated gap\n");
  EXPECT_EQ(t.size(), 4u);
  auto r = resolve(t, "ahu", Facet::equipment_class, OntologyId::haystack);
  ASSERT_EQ(r.kind, Resolution::Kind::mapped);
  EXPECT_EQ(r.entry->targets, (std::vector<std::string>{"ahu"}));
  r = resolve(t, "Temp", Facet::point_class, OntologyId::haystack);
  EXPECT_EQ(r.entry->targets.size(), 2u);
  EXPECT_EQ(r.entry->relation, Relation::subsumption);
  EXPECT_EQ(resolve(t, "AHU", Facet::equipment_class, OntologyId::brick).entry->targets[0],
            brick().ns() + "AHU");
  EXPECT_EQ(resolve(t, "reset", Facet::modifier, OntologyId::brick).kind, Resolution::Kind::gap);
  EXPECT_EQ(resolve(t, "Pump", Facet::equipment_class, OntologyId::brick).kind,
            Resolution::Kind::unresolved);
}

TEST(Alignment, RejectsBadRows) {
  EXPECT_THROW(parse("AHU,ec,haystack,^noSuchDef,,\n"), LoadError);
  EXPECT_THROW(parse("AHU,ec,brick,Not_A_Class,,\n"), LoadError);
  EXPECT_THROW(parse("AHU,ec,haystack,^ahu,,\nahu,ec,haystack,^ahu,,\n"), LoadError);
  EXPECT_THROW(parse("AHU,colour,haystack,^ahu,,\n"), ParseError);
  EXPECT_THROW(parse("AHU,ec,haystack,^ahu,sameish,\n"), ParseError);
  EXPECT_THROW(parse(",ec,haystack,^ahu,,\n"), ParseError);
  EXPECT_THROW(parse_alignment(std::string(kHeader) + "AHU,ec,brick,AHU,,\n", "a.csv", &haystack(),
                               nullptr),
               LoadError);
}

TEST(Alignment, FacetNames) {
  EXPECT_EQ(parse_facet("measurementControlType"), Facet::mct);
  EXPECT_EQ(parse_facet("equipment_type"), Facet::equipment_type);
  EXPECT_EQ(parse_facet("pc"), Facet::point_class);
  EXPECT_EQ(to_string(Facet::mct), "measurementControlType");
  EXPECT_THROW(parse_facet("?"), ConfigError);
  EXPECT_EQ(parse_ontology("Brick"), OntologyId::brick);
}

TEST(Alignment, MiniTableLoads) {
  AlignmentTable t = load_alignment(data_path("mini/alignment.csv"), &haystack(), &brick());
  EXPECT_EQ(t.size(), 107u);
  std::size_t gaps = 0;
  for (const auto& e : t.entries()) gaps += e.is_gap();
  EXPECT_EQ(gaps, 15u + 8u);
}

TEST(Suggest, TiersAndOrdering) {
  auto s = suggest_alignments("ahu", Facet::equipment_class, OntologyId::haystack, &haystack(), nullptr);
  ASSERT_FALSE(s.empty());
  EXPECT_EQ(s[0].target, "ahu");
  EXPECT_EQ(s[0].tier, 0);
  EXPECT_TRUE(s[0].kind_match);
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LE(s[i - 1].tier, s[i].tier);
  auto typo = suggest_alignments("chillr", Facet::equipment_class, OntologyId::haystack,
                                 &haystack(), nullptr);
  bool found = false;
  for (const auto& x : typo) found = found || (x.target == "chiller" && x.tier == 3);
  EXPECT_TRUE(found);
  // Short tokens never use edit distance.
  for (const auto& x : suggest_alignments("ahx", Facet::equipment_class, OntologyId::haystack,
                                          &haystack(), nullptr)) {
    EXPECT_NE(x.tier, 3);
  }
  EXPECT_THROW(suggest_alignments("x", Facet::point_class, OntologyId::brick, &haystack(), nullptr),
               ConfigError);
}

TEST(Suggest, TempPointClass) {
  auto s = suggest_alignments("temp", Facet::point_class, OntologyId::haystack, &haystack(), nullptr);
  ASSERT_FALSE(s.empty());
  EXPECT_EQ(s[0].target, "temp");
}

TEST(Suggest, EditDistance) {
  EXPECT_EQ(edit_distance("kitten", "sitting", 5), 3u);
  EXPECT_EQ(edit_distance("kitten", "sitting", 2), 3u);
  EXPECT_EQ(edit_distance("", "abc", 5), 3u);
  EXPECT_EQ(edit_distance("same", "same", 0), 0u);
}

#include <gtest/gtest.h>

#include "ontobench/csv.hpp"
#include "ontobench/dataset.hpp"
#include "support.hpp"

using namespace ontobench;
using namespace ontobench::testing;

namespace {

using Words = std::vector<std::string>;

const char* kHeader = "name,system,equipment_class,equipment_type,point_class,mct,service\n";

}  // namespace

TEST(Csv, QuotedFieldsAndComments) {
  auto doc = parse_csv("a,b,c\n# skipped\n\n\"x,y\",\"he said \"\"hi\"\"\",\"two\nlines\"\nshort\n", "f.csv");
  ASSERT_EQ(doc.rows.size(), 2u);
  EXPECT_EQ(doc.rows[0].fields[0], "x,y");
  EXPECT_EQ(doc.rows[0].fields[1], "he said \"hi\"");
  EXPECT_EQ(doc.rows[0].fields[2], "two\nlines");
  EXPECT_EQ(doc.rows[0].line, 4u);
  EXPECT_EQ(doc.get(doc.rows[1], doc.column("c")), "");
  EXPECT_THROW(doc.column("zzz"), LoadError);
  EXPECT_THROW(parse_csv("a\n\"open\n", "g.csv"), ParseError);
}

TEST(Csv, EscapeRoundTrip) {
  std::vector<std::string> fields{"plain", "a,b", "q\"q", "line\nbreak", ""};
  auto doc = parse_csv(csv_line({"h1", "h2", "h3", "h4", "h5"}) + csv_line(fields));
  ASSERT_EQ(doc.rows.size(), 1u);
  EXPECT_EQ(doc.rows[0].fields, fields);
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
}

TEST(Tokenizer, Examples) {
  EXPECT_EQ(tokenize_point_name("RoomAirDpTemp"), (Words{"Room", "Air", "Dp", "Temp"}));
  EXPECT_EQ(tokenize_point_name("AHUSupplyTemp"), (Words{"AHU", "Supply", "Temp"}));
  EXPECT_EQ(tokenize_point_name("temp"), (Words{"temp"}));
  EXPECT_EQ(tokenize_point_name("Zone_Temp-Sp 2"), (Words{"Zone", "Temp", "Sp", "2"}));
  EXPECT_EQ(tokenize_point_name("CO2Level"), (Words{"CO", "2", "Level"}));
  EXPECT_EQ(tokenize_point_name("Flow%"), (Words{"Flow", "%"}));
  EXPECT_THROW(tokenize_point_name(""), ParseError);
}

TEST(Tokenizer, HandLabeledNames) {
  CsvDocument doc = parse_csv(read_file(test_path("fixtures/tokenizer_names.csv")), "names.csv");
  ASSERT_EQ(doc.rows.size(), 50u);
  for (const auto& row : doc.rows) {
    Words expected;
    std::string tokens = doc.get(row, 1);
    for (std::size_t at = 0; at <= tokens.size();) {
      std::size_t sp = std::min(tokens.find(' ', at), tokens.size());
      expected.push_back(tokens.substr(at, sp - at));
      at = sp + 1;
    }
    EXPECT_EQ(tokenize_point_name(doc.get(row, 0)), expected) << doc.get(row, 0);
  }
}

TEST(Systems, ParseAndLabels) {
  EXPECT_EQ(parse_system("tu"), System::terminal_unit);
  EXPECT_EQ(parse_system("Terminal Units"), System::terminal_unit);
  EXPECT_EQ(parse_system("loops"), System::loop);
  EXPECT_EQ(parse_system("ahu"), System::ahu);
  EXPECT_EQ(table_label(System::terminal_unit), "Terminal Units");
  EXPECT_EQ(to_string(System::terminal_unit), "TerminalUnit");
  EXPECT_THROW(parse_system("boilerz"), ConfigError);
  EXPECT_EQ(parse_systems("AHU, Loop"), (std::set<System>{System::ahu, System::loop}));
  EXPECT_EQ(parse_mct(""), Mct::none);
  EXPECT_EQ(parse_mct("di"), Mct::di);
  EXPECT_FALSE(parse_mct("XX"));
}

TEST(Dataset, CsvErrorsCarryLine) {
  try {
    parse_dataset_csv(std::string(kHeader) + "SupplyTemp,AHU,AHU,,Temperature,AI,Air\n"
                                             "BadPoint,AHU,AHU,,Temperature,XX,Air\n",
                      "d.csv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where().line, 3u);
    EXPECT_NE(e.detail().find("XX"), std::string::npos);
  }
  EXPECT_THROW(parse_dataset_csv(std::string(kHeader) + "X,Mars,AHU,,T,AI,Air\n"), Error);
  EXPECT_THROW(parse_dataset_csv(std::string(kHeader) + ",AHU,AHU,,T,AI,Air\n"), ParseError);
  EXPECT_THROW(parse_dataset_csv("name,system\nA,AHU\n"), LoadError);
}

TEST(Dataset, JsonVocabulariesAndAssociations) {
  std::string text = R"({"points": [
      {"name": "SupplyTemp", "system": "AHU", "equipment_class": "AHU",
       "point_class": "Temperature", "mct": "AI", "service": "Air"},
      {"name": "FanCmd", "system": "AHU", "equipment_class": "SupplyFan",
       "point_class": "Command", "mct": "DO"}],
    "associations": [{"parent": "AHU", "child": "SupplyFan"}],
    "equipment_classes": ["AHU", "SupplyFan"]})";
  Dataset ds = parse_dataset_json(text, "d.json");
  ASSERT_EQ(ds.points.size(), 2u);
  EXPECT_EQ(ds.points[0].words, (Words{"Supply", "Temp"}));
  EXPECT_EQ(ds.associations.size(), 1u);
  EXPECT_THROW(parse_dataset_json(R"({"points": [{"name": "A", "system": "AHU",
      "equipment_class": "Pump", "point_class": "T", "mct": "AI"}],
      "equipment_classes": ["AHU"]})"),
               LoadError);
  EXPECT_THROW(parse_dataset_json("{not json"), ParseError);
  EXPECT_THROW(parse_dataset_json("[]"), LoadError);
}

TEST(Selection, MiniDataset) {
  Dataset ds = load_dataset(data_path("mini/dataset.json"));
  EXPECT_EQ(ds.points.size(), 72u);
  auto exclusions = read_exclusions(data_path("mini/exclusions.txt"));
  ASSERT_EQ(exclusions, (Words{"EconomizerLockoutSpecial"}));
  std::set<System> targets(std::begin(kTableSystems), std::end(kTableSystems));
  RepresentativeSet rs = select_representative(ds, targets, exclusions);
  EXPECT_EQ(rs.selected.size(), 60u);
  EXPECT_EQ(rs.rejected.size(), 10u);
  std::map<std::string, int> reasons;
  for (const auto& r : rs.rejected) ++reasons[r.reason.substr(0, 9)];
  EXPECT_EQ(reasons["excluded"], 1);
  EXPECT_EQ(reasons["duplicate"], 3);
  EXPECT_EQ(reasons["no unique"], 6);
  std::map<System, int> per_system;
  for (const auto& p : rs.selected) ++per_system[p.system];
  EXPECT_EQ(per_system, (std::map<System, int>{{System::ahu, 18}, {System::chiller, 12},
                                                {System::boiler, 9}, {System::loop, 10},
                                                {System::terminal_unit, 11}}));
}

TEST(Selection, DuplicateTupleKeepsFirstByName) {
  Dataset ds = parse_dataset_csv(std::string(kHeader) +
                                 "BTemp,AHU,AHU,,Temperature,AI,Air\n"
                                 "ATemp,AHU,AHU,,Temperature,AI,Air\n"
                                 "CTemp,Boiler,Boiler,,Temperature,AI,Water\n");
  RepresentativeSet rs = select_representative(ds, {System::ahu});
  ASSERT_EQ(rs.selected.size(), 1u);
  EXPECT_EQ(rs.selected[0].name, "ATemp");
  ASSERT_EQ(rs.rejected.size(), 1u);
  EXPECT_EQ(rs.rejected[0].reason, "duplicate of ATemp");
  EXPECT_FALSE(select_representative(ds, {System::chiller}).warnings.empty());
}

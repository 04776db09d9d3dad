#include <gtest/gtest.h>

#include "ontobench/graph.hpp"
#include "ontobench/symbol.hpp"
#include "ontobench/zinc.hpp"

using namespace ontobench;

TEST(Symbol, AtomicAndConjunct) {
  EXPECT_EQ(Symbol::parse("ahu").kind(), SymbolKind::atomic);
  Symbol hw = Symbol::parse("hot-water");
  EXPECT_TRUE(hw.is_conjunct());
  auto parts = symbol_parts(hw);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].text(), "hot");
  EXPECT_EQ(parts[1].text(), "water");
  EXPECT_EQ(join_symbol_parts(parts), "hot-water");
}

TEST(Symbol, ConjunctPartsSplitOnDash) {
  std::vector<std::string> texts;
  for (const auto& p : symbol_parts(Symbol::parse("discharge-air-temp"))) texts.push_back(p.text());
  EXPECT_EQ(texts, (std::vector<std::string>{"discharge", "air", "temp"}));
}

TEST(Symbol, RejectsMalformed) {
  EXPECT_THROW(Symbol::parse(""), ParseError);
  EXPECT_THROW(Symbol::parse("hot--water"), ParseError);
  EXPECT_THROW(Symbol::parse("Ahu"), ParseError);
  EXPECT_THROW(Symbol::parse("-water"), ParseError);
  EXPECT_FALSE(Symbol::is_atomic("a-b"));
  EXPECT_TRUE(Symbol::is_atomic("chilledWaterPlant"));
}

TEST(Symbol, CaseSensitiveOrdering) {
  EXPECT_NE(Symbol::parse("ahu"), Symbol::parse("ahuRef"));
  EXPECT_LT(Symbol::parse("ahu"), Symbol::parse("ahuRef"));
}

TEST(Zinc, ParsesScalars) {
  zinc::Scalar s;
  std::string err;
  std::size_t off = 0;
  ASSERT_TRUE(zinc::parse_scalar("\"a\\nb\"", s, err, off));
  EXPECT_EQ(s.as<zinc::Str>().value, "a\nb");
  ASSERT_TRUE(zinc::parse_scalar("^hot-water", s, err, off));
  EXPECT_EQ(s.as<zinc::SymbolLiteral>().name, "hot-water");
  ASSERT_TRUE(zinc::parse_scalar("[^a, ^b]", s, err, off));
  EXPECT_EQ(s.as<zinc::List>().size(), 2u);
  ASSERT_TRUE(zinc::parse_scalar("{discharge air temp sensor point}", s, err, off));
  EXPECT_EQ(s.as<zinc::Dict>().size(), 5u);
  ASSERT_TRUE(zinc::parse_scalar("12.5kW", s, err, off));
  EXPECT_EQ(s.as<zinc::Number>().unit, "kW");
  ASSERT_TRUE(zinc::parse_scalar("T", s, err, off));
  EXPECT_TRUE(s.as<bool>());
}

TEST(Zinc, RoundTrips) {
  for (const char* text : {"\"q\\\"x\"", "^a-b", "[^a, \"s\", 3]", "{a b:^c}", "M", "F"}) {
    zinc::Scalar a, b;
    std::string err;
    std::size_t off = 0;
    ASSERT_TRUE(zinc::parse_scalar(text, a, err, off)) << text << ": " << err;
    ASSERT_TRUE(zinc::parse_scalar(zinc::to_zinc(a), b, err, off)) << zinc::to_zinc(a);
    EXPECT_EQ(a, b) << text;
  }
}

TEST(Zinc, ReportsErrorOffset) {
  zinc::Scalar s;
  std::string err;
  std::size_t off = 0;
  EXPECT_FALSE(zinc::parse_scalar("[^a, ", s, err, off));
  EXPECT_FALSE(err.empty());
  EXPECT_FALSE(zinc::parse_scalar(std::string(200, '['), s, err, off));
}

TEST(Graph, FindsCycle) {
  Adjacency<std::string> g{{"a", {"b"}}, {"b", {"c"}}, {"c", {"a"}}};
  auto cycle = find_cycle(g);
  ASSERT_TRUE(cycle);
  EXPECT_EQ(cycle->front(), cycle->back());
  EXPECT_EQ(cycle->size(), 4u);
}

TEST(Graph, AcyclicAndClosure) {
  Adjacency<std::string> g{{"a", {"b", "c"}}, {"b", {"d"}}, {"c", {"d"}}};
  EXPECT_FALSE(find_cycle(g));
  auto closure = reflexive_closure(g, std::string("a"), [](const std::string& s) { return s; });
  EXPECT_EQ(closure, (std::set<std::string>{"a", "b", "c", "d"}));
  Adjacency<std::string> cyc{{"a", {"a"}}};
  EXPECT_THROW(reflexive_closure(cyc, std::string("a"), [](const std::string& s) { return s; }),
               IntegrityError);
}

TEST(Errors, ExitCodesAndLocations) {
  ParseError e({"f.trio", 3, 7}, "bad");
  EXPECT_EQ(e.code(), ExitCode::config);
  EXPECT_NE(std::string(e.what()).find("f.trio:3:7"), std::string::npos);
  EXPECT_EQ(e.detail(), "bad");
  EXPECT_EQ(IntegrityError("x").code(), ExitCode::integrity);
  EXPECT_EQ(IoError("x").code(), ExitCode::io);
  EXPECT_THROW(read_file("/nonexistent/file"), LoadError);
}

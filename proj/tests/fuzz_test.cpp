#include <gtest/gtest.h>

#include "checks.hpp"
#include "ontobench/csv.hpp"
#include "ontobench/dataset.hpp"

using namespace ontobench;
using namespace ontobench::testing;

namespace {

constexpr std::size_t kInputs = 100000;

}  // namespace

TEST(Fuzz, TrioParser) {
  auto r = fuzz_trio(kInputs, 21);
  EXPECT_EQ(r.cases, kInputs);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(Fuzz, TurtleParser) {
  auto r = fuzz_turtle(kInputs, 22);
  EXPECT_EQ(r.cases, kInputs);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(Fuzz, CsvAndDatasetReaders) {
  std::string corpus = read_file(test_path("fixtures/table1/dataset.csv"));
  auto r = fuzz([](const std::string& in) { parse_dataset_csv(in, "fuzz.csv"); }, corpus, 20000, 23);
  EXPECT_TRUE(r.ok()) << r.failure;
  std::string json = read_file(data_path("mini/dataset.json"));
  r = fuzz([](const std::string& in) { parse_dataset_json(in, "fuzz.json"); }, json, 20000, 24);
  EXPECT_TRUE(r.ok()) << r.failure;
}

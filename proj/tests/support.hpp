#pragma once

// Shared helpers for the unit, property, fuzz and acceptance suites.

#include <array>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "ontobench/errors.hpp"
#include "ontobench/metrics.hpp"

namespace ontobench::testing {

inline const std::string kDataDir = ONTOBENCH_DATA_DIR;
inline const std::string kTestDir = ONTOBENCH_TEST_DIR;

inline std::string data_path(const std::string& rel) { return kDataDir + "/" + rel; }
inline std::string test_path(const std::string& rel) { return kTestDir + "/" + rel; }

/// Fresh empty directory under the system temp dir.
inline std::string temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("ontobench_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw IoError("cannot write " + path);
  std::fwrite(text.data(), 1, text.size(), f);
  std::fclose(f);
}

// Counts computed by the independent oracles under tests/oracles.
inline constexpr std::size_t kBrickTriples = 19167;
inline constexpr std::size_t kBrickClasses = 901;
inline constexpr std::size_t kBrickObjectProperties = 21;
inline constexpr std::size_t kBrickInversePairs = 9;
inline constexpr std::size_t kBrickLowercasedTags = 298;
inline constexpr std::size_t kHaystackDefs = 162;
inline constexpr std::size_t kHaystackRefDefs = 11;
inline constexpr std::size_t kHaystackLibDefs[] = {36, 72, 54};  // ph, phIoT, phScience

/// Grammar-relevant characters for mutating parser inputs.
inline constexpr std::string_view kFuzzAlphabet =
    "\"'<>[](){};,.:@^_-#\\/\n\t abcAZ019+*`~!$%&=?|\xC3\xA9\xE2\x86\x94";

/// A random window of `seed` with a few random edits, or random bytes.
inline std::string fuzz_input(std::mt19937_64& rng, const std::string& seed) {
  std::uniform_int_distribution<int> coin(0, 9);
  std::string s;
  if (coin(rng) == 0 || seed.empty()) {
    std::uniform_int_distribution<int> len(0, 200), byte(0, 255);
    s.resize(len(rng));
    for (char& c : s) c = static_cast<char>(byte(rng));
    return s;
  }
  std::uniform_int_distribution<std::size_t> start(0, seed.size() - 1);
  std::uniform_int_distribution<std::size_t> width(1, 600);
  std::size_t a = start(rng);
  s = seed.substr(a, width(rng));
  std::uniform_int_distribution<int> edits(0, 8);
  std::uniform_int_distribution<std::size_t> pick(0, kFuzzAlphabet.size() - 1);
  for (int e = edits(rng); e > 0; --e) {
    std::uniform_int_distribution<std::size_t> pos(0, s.size());
    std::size_t p = pos(rng);
    switch (coin(rng) % 4) {
      case 0: s.insert(p, 1, kFuzzAlphabet[pick(rng)]); break;
      case 1:
        if (p < s.size()) s.erase(p, 1);
        break;
      case 2:
        if (p < s.size()) s[p] = kFuzzAlphabet[pick(rng)];
        break;
      case 3: {
        std::size_t n = std::min<std::size_t>(s.size() - std::min(p, s.size()), 40);
        s.insert(p, s.substr(p, n));
        break;
      }
    }
  }
  if (coin(rng) == 1) s = std::string(coin(rng) * 40 + 1, '[') + s;  // deep nesting
  return s;
}

/// A random facet-outcome vector.
inline std::array<Outcome, 5> random_outcomes(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::array<Outcome, 5> v{};
  for (auto& o : v) o = static_cast<Outcome>(pick(rng));
  return v;
}

/// Rank of a label: higher is better.
inline int label_rank(ClassLabel l) {
  switch (l) {
    case ClassLabel::maps: return 2;
    case ClassLabel::partially_maps: return 1;
    case ClassLabel::does_not_map: return 0;
  }
  return 0;
}

/// Brute-force reference classifier, written from the rule text rather than
/// from the implementation: count gaps over all five facets; Maps with none,
/// Partially Maps when class and point class map and the single gap lies in
/// {mct, service, equipmentType}, otherwise Does Not Map.
inline ClassLabel reference_label(const std::array<Outcome, 5>& v) {
  // Index order: equipmentClass, pointClass, equipmentType, mct, service.
  int gaps = 0;
  for (Outcome o : v) gaps += o == Outcome::gap;
  if (gaps == 0) return ClassLabel::maps;
  bool ec = v[0] == Outcome::mapped, pc = v[1] == Outcome::mapped;
  bool minor = v[2] == Outcome::gap || v[3] == Outcome::gap || v[4] == Outcome::gap;
  if (ec && pc && gaps == 1 && minor) return ClassLabel::partially_maps;
  return ClassLabel::does_not_map;
}

}  // namespace ontobench::testing

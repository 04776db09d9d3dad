#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontobench/errors.hpp"

namespace ontobench {

enum class System { ahu, chiller, boiler, terminal_unit, loop, other };

/// Systems in completeness-table row order.
inline constexpr System kTableSystems[] = {System::ahu, System::chiller, System::boiler,
                                           System::loop, System::terminal_unit};

/// Identifier used in files: AHU, Chiller, Boiler, TerminalUnit, Loop, Other.
std::string to_string(System system);
/// Row label in reports ("Terminal Units" for terminal units).
std::string table_label(System system);
/// Case-insensitive; also accepts "terminal_unit", "tu", "terminal units",
/// "loops". Throws `ConfigError`.
System parse_system(std::string_view text);
/// Comma-separated list of systems.
std::set<System> parse_systems(std::string_view list);

/// Measurement/control type of a point.
enum class Mct { ai, ao, di, do_, none };

std::string to_string(Mct mct);
/// "AI", "AO", "DI", "DO", "none" or "" (= none), case-insensitive.
std::optional<Mct> parse_mct(std::string_view text);

struct PointType {
  std::string name;
  System system = System::other;
  std::string equipment_class;
  std::optional<std::string> equipment_type;
  std::string point_class;
  Mct mct = Mct::none;
  std::optional<std::string> service;
  /// Tokens of `name`.
  std::vector<std::string> words;
  /// Line (CSV) or 1-based record index (JSON) for diagnostics.
  std::size_t line = 0;
};

struct EquipmentAssociation {
  std::string parent;
  std::string child;
};

struct Dataset {
  std::string source;
  std::vector<PointType> points;
  std::vector<EquipmentAssociation> associations;
  std::set<std::string> equipment_classes;
  std::set<std::string> equipment_types;
  std::set<std::string> point_classes;
  std::set<std::string> services;
};

/// Splits a point name into words at separators (space, '_', '-'), at
/// lower-to-upper case changes, at letter/digit boundaries, and before the
/// last capital of an acronym run that is followed by a lowercase letter
/// ("AHUSupply" -> AHU, Supply). Other punctuation forms its own tokens.
/// Concatenating the tokens reproduces the name minus separators. Throws
/// `ParseError` for an empty name.
std::vector<std::string> tokenize_point_name(std::string_view name);

/// CSV header: name,system,equipment_class,equipment_type,point_class,mct,service
Dataset parse_dataset_csv(std::string_view text, const std::string& file = {});
/// JSON object with `points` (same field names) and optional `associations`
/// ({parent, child}) and vocabularies (`equipment_classes`,
/// `equipment_types`, `point_classes`, `services`).
Dataset parse_dataset_json(std::string_view text, const std::string& file = {});
/// Dispatches on the extension (.json, else CSV).
Dataset load_dataset(const std::string& path);

struct Rejection {
  PointType point;
  std::string reason;
};

struct RepresentativeSet {
  std::vector<PointType> selected;
  std::vector<Rejection> rejected;
  std::set<System> target_systems;
  std::vector<std::string> warnings;
};

/// Keeps points of the target systems, scanned in name order: excluded
/// names are rejected, then points repeating an earlier facet 5-tuple
/// (class, type, point class, mct, service), then points that add no word
/// (case-insensitive) to those already selected in the same system.
RepresentativeSet select_representative(const Dataset& dataset,
                                        const std::set<System>& target_systems,
                                        const std::vector<std::string>& exclusions = {});

/// One point name per line; blank lines and '#' comments ignored.
std::vector<std::string> read_exclusions(const std::string& path);

}  // namespace ontobench

#pragma once

#include <string>
#include <string_view>

#include "ontobench/rdf.hpp"

namespace ontobench {

/// Parses the Turtle subset used by Brick schema files: `@prefix`/`PREFIX`,
/// absolute IRIs, prefixed names, `a`, single-line strings with optional
/// language tag, booleans, `;`/`,` lists, `[ ]` blank nodes, `_:label`
/// blank nodes and `( )` collections. Anything else (numbers, `^^`
/// datatypes, long strings, `\u` escapes, `@base`, relative IRIs) is
/// rejected with a `ParseError` carrying line and column.
///
/// Anonymous blank nodes get the labels `anon1`, `anon2`, ... in file order.
TripleStore parse_turtle(std::string_view text, const std::string& file = {});

/// N-Triples-style text (one triple per line) accepted by `parse_turtle`.
std::string serialize_ntriples(const TripleStore& store);

}  // namespace ontobench

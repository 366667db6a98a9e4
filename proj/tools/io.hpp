#pragma once

// JSON documents for algebras, spaces, towers and sampled functions.
//
//   gelfand-algebra/1   {"schema", "field", "basis", "unit", "products": [[i, j, [c...]], ...]}
//   gelfand-space/1     {"schema", "points": [label, ...]}
//   gelfand-tower/1     {"schema", "levels": [size | [label, ...], ...], "bonding": [[...], ...]}
//   gelfand-function/1  {"schema", "values": [c, ...], "modulus": [m(0), m(1), ...]}
//
// Field elements are written as strings: "3", "-1/2". Prime-field elements
// may also be JSON integers. Q_p elements are written as the rational value
// of their known digits, using the balanced residue, followed by
// " + O(p^a)" when fewer than the working number of digits are known.

#include <string>
#include <vector>

#include <json.hpp>

#include "gelfand/profinite.hpp"

namespace gelfand::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kAlgebraSchema = "gelfand-algebra/1";
inline constexpr const char* kSpaceSchema = "gelfand-space/1";
inline constexpr const char* kTowerSchema = "gelfand-tower/1";
inline constexpr const char* kFunctionSchema = "gelfand-function/1";

/// Reads and parses a JSON file. Throws IoError when unreadable and
/// SchemaError (with line and column) when malformed.
Json read_json_file(const std::string& path);
/// The "schema" member, or SchemaError.
std::string schema_of(const Json& doc);

/// "Q", "Fp:5", "Qp:3:8".
FieldDescriptor parse_field_spec(const std::string& spec);
std::string field_spec(const FieldDescriptor& field);

Json field_to_json(const FieldDescriptor& field);
FieldDescriptor field_from_json(const Json& j, const std::string& where = "/field");

Json element_to_json(const Element& x);
Element element_from_json(const FieldDescriptor& field, const Json& j, const std::string& where);
/// Comma-separated coordinates, e.g. "1,0,-1/2".
Vector parse_vector(const FieldDescriptor& field, const std::string& text);
std::string element_text(const Element& x);

/// Validates after parsing; algebraic failures keep their own error codes.
Algebra algebra_from_json(const Json& doc);
/// Canonical form: products sorted by (i, j) with i <= j, zero products
/// omitted.
Json algebra_to_json(const Algebra& a);

FiniteSpace space_from_json(const Json& doc);
Json space_to_json(const FiniteSpace& x);

ProfiniteTower tower_from_json(const Json& doc);
Json tower_to_json(const ProfiniteTower& t);

/// A data oracle on the finest level of `t`.
ContFnOracle function_from_json(const Json& doc, const ProfiniteTower& t, const FieldDescriptor& field);

Algebra parse_algebra_file(const std::string& path);
FiniteSpace parse_space_file(const std::string& path);
ProfiniteTower parse_tower_file(const std::string& path);

}  // namespace gelfand::io

#include "io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace gelfand::io {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::SchemaError, where + ": " + what);
}

const Json& member(const Json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) schema_error(where.empty() ? "/" : where, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) schema_error(where + "/" + key, "missing");
  return *it;
}

void expect_schema(const Json& doc, const char* schema) {
  const std::string s = schema_of(doc);
  if (s != schema) schema_error("/schema", "expected \"" + std::string(schema) + "\", got \"" + s + "\"");
}

std::size_t index_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema_error(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

mpq_class rational_from_text(const std::string& text, const std::string& where) {
  mpq_class q;
  std::string t = text;
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  if (t.empty() || q.set_str(t, 10) != 0) schema_error(where, "\"" + text + "\" is not a rational number");
  if (q.get_den() == 0) schema_error(where, "zero denominator");
  q.canonicalize();
  return q;
}

Vector vector_from_json(const FieldDescriptor& field, const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of field elements");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(element_from_json(field, j[i], where + "/" + std::to_string(i)));
  return v;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(element_to_json(x));
  return out;
}

std::vector<std::string> labels_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) schema_error(where + "/" + std::to_string(i), "expected a string label");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

FiniteSpace space_from_labels(std::vector<std::string> labels, const std::string& where) {
  try {
    return FiniteSpace(std::move(labels));
  } catch (const Error& e) {
    schema_error(where, e.what());
  }
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports "line L, column C" in the message
    throw Error(ErrorCode::SchemaError, path + ": " + e.what());
  }
}

std::string schema_of(const Json& doc) {
  const Json& s = member(doc, "schema", "");
  if (!s.is_string()) schema_error("/schema", "expected a string");
  return s.get<std::string>();
}

// ---------------------------------------------------------------- fields

FieldDescriptor parse_field_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  auto number = [&](const std::string& s) -> long {
    try {
      std::size_t used = 0;
      long v = std::stol(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::InvalidField, "bad number \"" + s + "\" in field \"" + spec + "\"");
  };
  if (parts.size() == 1 && parts[0] == "Q") return FieldDescriptor::rational();
  if (parts.size() == 2 && parts[0] == "Fp" && number(parts[1]) > 0) {
    return FieldDescriptor::prime_field(static_cast<std::uint64_t>(number(parts[1])));
  }
  if (parts.size() == 3 && parts[0] == "Qp" && number(parts[1]) > 0) {
    return FieldDescriptor::p_adic(static_cast<std::uint64_t>(number(parts[1])), static_cast<int>(number(parts[2])));
  }
  throw Error(ErrorCode::InvalidField, "field must be Q, Fp:p or Qp:p:N, got \"" + spec + "\"");
}

std::string field_spec(const FieldDescriptor& field) {
  switch (field.kind()) {
    case FieldKind::Rational: return "Q";
    case FieldKind::PrimeField: return "Fp:" + std::to_string(field.prime());
    case FieldKind::PAdic: return "Qp:" + std::to_string(field.prime()) + ":" + std::to_string(field.precision());
  }
  return "Q";
}

Json field_to_json(const FieldDescriptor& field) {
  Json j;
  switch (field.kind()) {
    case FieldKind::Rational: j["kind"] = "Q"; break;
    case FieldKind::PrimeField:
      j["kind"] = "Fp";
      j["p"] = field.prime();
      break;
    case FieldKind::PAdic:
      j["kind"] = "Qp";
      j["p"] = field.prime();
      j["precision"] = field.precision();
      break;
  }
  return j;
}

FieldDescriptor field_from_json(const Json& j, const std::string& where) {
  const Json& kind = member(j, "kind", where);
  if (!kind.is_string()) schema_error(where + "/kind", "expected \"Q\", \"Fp\" or \"Qp\"");
  const std::string k = kind.get<std::string>();
  auto integer = [&](const char* key) {
    const Json& v = member(j, key, where);
    if (!v.is_number_integer() || v.get<long long>() <= 0) schema_error(where + "/" + key, "expected a positive integer");
    return v.get<long long>();
  };
  try {
    if (k == "Q") return FieldDescriptor::rational();
    if (k == "Fp") return FieldDescriptor::prime_field(static_cast<std::uint64_t>(integer("p")));
    if (k == "Qp") {
      return FieldDescriptor::p_adic(static_cast<std::uint64_t>(integer("p")), static_cast<int>(integer("precision")));
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidField) throw;
    schema_error(where, e.what());
  }
  schema_error(where + "/kind", "unknown field kind \"" + k + "\"");
}

// ---------------------------------------------------------------- elements

Json element_to_json(const Element& x) { return element_text(x); }

std::string element_text(const Element& x) {
  const auto& f = x.field();
  switch (f.kind()) {
    case FieldKind::Rational: return x.rational().get_str();
    case FieldKind::PrimeField: return std::to_string(x.residue());
    case FieldKind::PAdic: {
      const PAdicValue& v = x.padic();
      const std::string big_o = " + O(" + std::to_string(f.prime()) + "^" + std::to_string(v.absolute_precision()) + ")";
      if (v.is_exact_zero()) return "0";
      if (v.is_zero()) return big_o.substr(3);
      mpz_class modulus;
      mpz_ui_pow_ui(modulus.get_mpz_t(), f.prime(), static_cast<unsigned long>(v.relative));
      mpz_class u = v.unit;
      if (2 * u > modulus) u -= modulus;
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), f.prime(), static_cast<unsigned long>(v.valuation < 0 ? -v.valuation : v.valuation));
      mpq_class q = v.valuation < 0 ? mpq_class(u, scale) : mpq_class(u * scale);
      q.canonicalize();
      return v.relative < f.precision() ? q.get_str() + big_o : q.get_str();
    }
  }
  return "0";
}

Element element_from_json(const FieldDescriptor& field, const Json& j, const std::string& where) {
  mpq_class q;
  std::optional<long> absolute;  // Q_p only: digits known below p^absolute
  if (j.is_number_integer()) {
    q = mpq_class(mpz_class(std::to_string(j.get<long long>())));
  } else if (j.is_string()) {
    std::string t = j.get<std::string>();
    if (field.kind() == FieldKind::PAdic) {
      const std::string o = "O(" + std::to_string(field.prime()) + "^";
      auto at = t.find(o);
      if (at != std::string::npos) {
        if (t.back() != ')') schema_error(where, "malformed precision term in \"" + t + "\"");
        const std::string e = t.substr(at + o.size(), t.size() - at - o.size() - 1);
        try {
          std::size_t used = 0;
          absolute = std::stol(e, &used);
          if (used != e.size()) throw std::invalid_argument(e);
        } catch (const std::exception&) {
          schema_error(where, "bad exponent in \"" + t + "\"");
        }
        std::string head = t.substr(0, at);
        while (!head.empty() && (head.back() == ' ' || head.back() == '+')) head.pop_back();
        t = head.empty() ? "0" : head;
      }
    }
    q = rational_from_text(t, where);
  } else {
    schema_error(where, "expected an integer or a rational string");
  }
  Element x;
  try {
    x = field.from_rational(q);
  } catch (const Error& e) {
    schema_error(where, std::string("not an element of ") + field.name() + ": " + e.what());
  }
  if (!absolute) return x;
  PAdicValue v = x.padic();
  if (v.is_zero() || v.valuation >= *absolute) return Element::from_padic(field, PAdicValue{*absolute, 0, 0});
  if (v.absolute_precision() > *absolute) {
    v.relative = static_cast<int>(*absolute - v.valuation);
    mpz_class modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), field.prime(), static_cast<unsigned long>(v.relative));
    v.unit %= modulus;
  }
  return Element::from_padic(field, v);
}

Vector parse_vector(const FieldDescriptor& field, const std::string& text) {
  Vector v;
  std::stringstream ss(text);
  std::size_t i = 0;
  for (std::string part; std::getline(ss, part, ',');) {
    v.push_back(element_from_json(field, Json(part), "coordinate " + std::to_string(i++)));
  }
  if (v.empty()) schema_error("element", "no coordinates");
  return v;
}

// ---------------------------------------------------------------- algebras

Algebra algebra_from_json(const Json& doc) {
  expect_schema(doc, kAlgebraSchema);
  AlgebraData raw;
  raw.field = field_from_json(member(doc, "field", ""));
  raw.basis_names = labels_from_json(member(doc, "basis", ""), "/basis");
  const std::size_t n = raw.basis_names.size();
  if (n == 0) schema_error("/basis", "an algebra needs at least one basis element");
  raw.unit = vector_from_json(raw.field, member(doc, "unit", ""), "/unit");
  if (raw.unit.size() != n) schema_error("/unit", "expected " + std::to_string(n) + " coordinates");
  const Json& products = member(doc, "products", "");
  if (!products.is_array()) schema_error("/products", "expected an array of [i, j, coordinates]");
  for (std::size_t t = 0; t < products.size(); ++t) {
    const std::string where = "/products/" + std::to_string(t);
    const Json& entry = products[t];
    if (!entry.is_array() || entry.size() != 3) schema_error(where, "expected [i, j, coordinates]");
    const std::size_t i = index_from_json(entry[0], where + "/0");
    const std::size_t j = index_from_json(entry[1], where + "/1");
    if (i >= n || j >= n) schema_error(where, "basis index out of range");
    Vector c = vector_from_json(raw.field, entry[2], where + "/2");
    if (c.size() != n) schema_error(where + "/2", "expected " + std::to_string(n) + " coordinates");
    if (!raw.products.emplace(std::make_pair(i, j), std::move(c)).second) {
      schema_error(where, "product (" + std::to_string(i) + ", " + std::to_string(j) + ") given twice");
    }
  }
  return Algebra::validate(raw);
}

Json algebra_to_json(const Algebra& a) {
  const AlgebraData d = a.data();
  Json j;
  j["schema"] = kAlgebraSchema;
  j["field"] = field_to_json(d.field);
  j["basis"] = d.basis_names;
  j["unit"] = vector_to_json(d.unit);
  Json products = Json::array();
  for (const auto& [ij, c] : d.products) products.push_back(Json::array({ij.first, ij.second, vector_to_json(c)}));
  j["products"] = std::move(products);
  return j;
}

// ---------------------------------------------------------------- spaces

FiniteSpace space_from_json(const Json& doc) {
  expect_schema(doc, kSpaceSchema);
  auto labels = labels_from_json(member(doc, "points", ""), "/points");
  if (labels.empty()) schema_error("/points", "a space needs at least one point");
  return space_from_labels(std::move(labels), "/points");
}

Json space_to_json(const FiniteSpace& x) {
  Json j;
  j["schema"] = kSpaceSchema;
  j["points"] = x.labels();
  return j;
}

// ---------------------------------------------------------------- towers

ProfiniteTower tower_from_json(const Json& doc) {
  expect_schema(doc, kTowerSchema);
  const Json& levels = member(doc, "levels", "");
  if (!levels.is_array() || levels.empty()) schema_error("/levels", "expected a non-empty array");
  std::vector<FiniteSpace> spaces;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const std::string where = "/levels/" + std::to_string(k);
    if (levels[k].is_number_integer()) {
      const std::size_t size = index_from_json(levels[k], where);
      if (size == 0) schema_error(where, "a level needs at least one point");
      spaces.push_back(FiniteSpace::numbered(size, ""));
    } else {
      auto labels = labels_from_json(levels[k], where);
      if (labels.empty()) schema_error(where, "a level needs at least one point");
      spaces.push_back(space_from_labels(std::move(labels), where));
    }
  }
  const Json& bonding = member(doc, "bonding", "");
  if (!bonding.is_array()) schema_error("/bonding", "expected an array of maps");
  std::vector<std::vector<std::size_t>> maps;
  for (std::size_t k = 0; k < bonding.size(); ++k) {
    const std::string where = "/bonding/" + std::to_string(k);
    if (!bonding[k].is_array()) schema_error(where, "expected an array of point indices");
    std::vector<std::size_t> m;
    for (std::size_t x = 0; x < bonding[k].size(); ++x) {
      m.push_back(index_from_json(bonding[k][x], where + "/" + std::to_string(x)));
    }
    maps.push_back(std::move(m));
  }
  return ProfiniteTower(std::move(spaces), std::move(maps));
}

Json tower_to_json(const ProfiniteTower& t) {
  Json j;
  j["schema"] = kTowerSchema;
  Json levels = Json::array();
  for (std::size_t k = 0; k <= t.depth(); ++k) {
    const FiniteSpace& x = t.level(k);
    if (x == FiniteSpace::numbered(x.size(), "")) {
      levels.push_back(x.size());
    } else {
      levels.push_back(x.labels());
    }
  }
  j["levels"] = std::move(levels);
  Json bonding = Json::array();
  for (std::size_t k = 0; k < t.depth(); ++k) bonding.push_back(t.bonding(k).assignment());
  j["bonding"] = std::move(bonding);
  return j;
}

ContFnOracle function_from_json(const Json& doc, const ProfiniteTower& t, const FieldDescriptor& field) {
  expect_schema(doc, kFunctionSchema);
  ContFnOracle f;
  f.name = "data";
  f.values = vector_from_json(field, member(doc, "values", ""), "/values");
  if (f.values.size() != t.level(t.depth()).size()) {
    schema_error("/values", "expected one value per point of the finest level (" +
                                std::to_string(t.level(t.depth()).size()) + ")");
  }
  const Json& modulus = member(doc, "modulus", "");
  if (!modulus.is_array() || modulus.empty()) schema_error("/modulus", "expected a non-empty array of levels");
  std::vector<std::size_t> m;
  for (std::size_t k = 0; k < modulus.size(); ++k) m.push_back(index_from_json(modulus[k], "/modulus/" + std::to_string(k)));
  f.modulus = [m, top = t.depth()](int k) {
    // Past the table the function is only known to be constant on points.
    if (k < 0) return std::size_t{0};
    return static_cast<std::size_t>(k) < m.size() ? m[static_cast<std::size_t>(k)] : top + 1;
  };
  return f;
}

Algebra parse_algebra_file(const std::string& path) { return algebra_from_json(read_json_file(path)); }
FiniteSpace parse_space_file(const std::string& path) { return space_from_json(read_json_file(path)); }
ProfiniteTower parse_tower_file(const std::string& path) { return tower_from_json(read_json_file(path)); }

}  // namespace gelfand::io

#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#ifndef GELFAND_VERSION
#define GELFAND_VERSION "0.0.0"
#endif

namespace gelfand::cli {

using io::Json;

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotGelfand:
    case ErrorCode::NotGelfandUnsplit:
      return kFails;
    case ErrorCode::UnsupportedAlgebra:
    case ErrorCode::SearchBudgetExceeded:
    case ErrorCode::DepthExceeded:
    case ErrorCode::PrecisionExhausted:
    case ErrorCode::HenselDegenerate:
    case ErrorCode::DimensionCapExceeded:
      return kUnsupported;
    default:
      return kInputError;
  }
}

std::string payload(const Json& report) {
  Json copy = report;
  copy.erase("timings");
  return copy.dump(2);
}

namespace {

// ---------------------------------------------------------------- helpers

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{md[i]};
  return hex.str();
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json text(const Element& x) { return x.to_string(); }

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(text(x));
  return out;
}

Json vectors_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

Json characters_json(const std::vector<Character>& chars) {
  Json out = Json::array();
  for (const auto& chi : chars) out.push_back(vector_json(chi.values));
  return out;
}

Json point_set_json(PointSet s, std::size_t points) {
  Json out = Json::array();
  for (std::size_t x = 0; x < points; ++x) {
    if (s >> x & 1U) out.push_back("M" + std::to_string(x));
  }
  return out;
}

Json topology_json(const FiniteTopology& t) {
  Json closures = Json::array();
  for (std::size_t x = 0; x < t.size(); ++x) closures.push_back(point_set_json(t.closure_of_point(x), t.size()));
  Json out;
  out["discrete"] = t.is_discrete();
  out["point_closures"] = std::move(closures);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

/// State shared by every command.
struct Context {
  std::string input;
  std::string report_path;
  bool print_json = false;
  std::size_t budget = kDefaultSearchBudget;
  std::string field = "Q";
  std::string element;
  std::vector<std::string> terms;
  bool closure = false;
  std::string property;
  std::string oracle = "identity";
  int k = 1;

  std::string command;
  Json results = Json::object();
  std::vector<std::string> justifications;
  std::vector<std::string> summary;
  int exit = kHolds;
  std::string failure;  // reason message when a property fails
};

void property(Context& c, bool holds, const std::string& reason) {
  c.results["holds"] = holds;
  if (!holds) {
    c.exit = kFails;
    c.failure = reason;
  }
}

// ---------------------------------------------------------------- commands

void cmd_validate(Context& c) {
  Algebra a = io::parse_algebra_file(c.input);
  c.results["dimension"] = a.dim();
  c.results["field"] = a.field().name();
  c.results["algebra"] = io::algebra_to_json(a);
  c.summary.push_back("valid: dimension " + std::to_string(a.dim()) + " over " + a.field().name());
}

void cmd_spectrum(Context& c) {
  Algebra a = io::parse_algebra_file(c.input);
  if (c.element.empty()) throw Error(ErrorCode::SchemaError, "spectrum needs --element");
  AlgElement x = io::parse_vector(a.field(), c.element);
  if (x.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "--element needs " + std::to_string(a.dim()) + " coordinates");
  auto sigma = spectrum(a, x);
  auto rho = spectral_radius(a, x);
  c.results["element"] = vector_json(x);
  c.results["characteristic_polynomial"] = a.characteristic_polynomial(x).to_string();
  c.results["minimal_polynomial"] = a.minimal_polynomial(x).to_string();
  c.results["spectrum"] = vector_json(sigma);
  c.results["spectral_radius"] = rho ? Json(format_abs_value(a.field(), *rho)) : Json(nullptr);
  c.results["invertible"] = a.invert(x).has_value();
  std::vector<std::string> values;
  for (const auto& l : sigma) values.push_back(l.to_string());
  c.summary.push_back("spectrum: {" + join(values, ", ") + "}");
  if (!rho) c.justifications.push_back("spectral_radius: empty spectrum, radius undefined");
}

void cmd_max_spec(Context& c) {
  Algebra a = io::parse_algebra_file(c.input);
  auto search = enumerate_characters(a, c.budget);
  auto z = zariski_topology(a, search.characters);
  auto g = gelfand_topology(a, search.characters);
  c.results["points"] = max_space(search.characters).labels();
  c.results["characters"] = characters_json(search.characters);
  c.results["nodes_visited"] = search.nodes_visited;
  c.results["zariski"] = topology_json(z);
  c.results["gelfand"] = topology_json(g);
  c.summary.push_back(std::to_string(search.characters.size()) + " maximal ideals of codimension one");
}

void cmd_check(Context& c) {
  Algebra a = io::parse_algebra_file(c.input);
  c.results["property"] = c.property;
  if (c.property == "gelfand") {
    auto g = check_gelfand(a, c.budget);
    c.results["characters"] = g.characters;
    c.results["radical_dimension"] = g.radical_dim;
    c.results["quotient_dimension"] = g.quotient_dim;
    property(c, g.holds, g.reason);
    c.justifications.push_back("gelfand: " + g.reason);
  } else if (c.property == "semisimple") {
    auto r = jacobson_radical_with_method(a);
    c.results["radical_basis"] = vectors_json(r.ideal.basis());
    c.results["method"] = r.method == RadicalMethod::TraceForm ? "trace form" : "frobenius";
    const std::string reason = "dim Jrad = " + std::to_string(r.ideal.dim());
    property(c, r.ideal.dim() == 0, reason);
    c.justifications.push_back("semisimple: " + reason);
  } else if (c.property == "pm") {
    auto pm = check_pm(a);
    property(c, pm.holds, pm.justification);
    c.justifications.push_back("pm: " + pm.justification);
  } else if (c.property == "hausdorff") {
    auto chars = enumerate_characters(a, c.budget).characters;
    auto z = zariski_topology(a, chars);
    c.results["zariski"] = topology_json(z);
    property(c, z.is_hausdorff(), "the Zariski topology on Max is not discrete");
    c.justifications.push_back("hausdorff: a finite space is Hausdorff iff discrete");
  } else {
    auto chars = enumerate_characters(a, c.budget).characters;
    auto cmp = compare_topologies(a, chars);
    c.results["zariski_coarser"] = cmp.zariski_coarser;
    Json witnesses = Json::array();
    for (const auto& w : cmp.witnesses) witnesses.push_back(w ? vector_json(*w) : Json(nullptr));
    c.results["witnesses"] = std::move(witnesses);
    c.results["zariski"] = topology_json(zariski_topology(a, chars));
    c.results["gelfand"] = topology_json(gelfand_topology(a, chars));
    property(c, cmp.coincide, "some point has no element vanishing on its Gelfand-closed complement");
  }
  c.summary.push_back(c.property + ": " + (c.exit == kHolds ? "holds" : "fails (" + c.failure + ")"));
}

void cmd_idempotents(Context& c) {
  Algebra a = io::parse_algebra_file(c.input);
  auto set = primitive_idempotents(a, c.closure, c.budget);
  c.results["atoms"] = vectors_json(set.atoms);
  c.results["characters"] = characters_json(set.characters);
  c.results["newton_steps"] = set.newton_steps;
  c.results["spans_all"] = set.atoms.size() == a.dim();
  if (set.all) c.results["boolean_algebra"] = vectors_json(*set.all);
  c.summary.push_back(std::to_string(set.atoms.size()) + " primitive idempotents");
}

void cmd_orthogonalize(Context& c) {
  Algebra a = io::parse_algebra_file(c.input);
  if (c.terms.empty()) throw Error(ErrorCode::SchemaError, "orthogonalize needs at least one --term");
  std::vector<WeightedIdempotent> terms;
  for (const auto& t : c.terms) {
    auto colon = t.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::SchemaError, "--term must be coefficient:coordinates");
    Element coeff = io::parse_vector(a.field(), t.substr(0, colon)).front();
    AlgElement e = io::parse_vector(a.field(), t.substr(colon + 1));
    if (e.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "--term needs " + std::to_string(a.dim()) + " coordinates");
    terms.push_back({coeff, e});
  }
  auto out = orthogonalize(a, terms);
  AlgElement before = a.zero(), after = a.zero();
  for (const auto& t : terms) before = add(before, scale(t.coefficient, t.idempotent));
  Json atoms = Json::array();
  bool orthogonal = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    after = add(after, scale(out[i].coefficient, out[i].idempotent));
    for (std::size_t j = 0; j < i; ++j) orthogonal = orthogonal && is_zero(a.mul(out[i].idempotent, out[j].idempotent));
    Json atom;
    atom["coefficient"] = text(out[i].coefficient);
    atom["idempotent"] = vector_json(out[i].idempotent);
    atoms.push_back(std::move(atom));
  }
  c.results["terms"] = std::move(atoms);
  c.results["sum"] = vector_json(after);
  c.results["reproduces_input"] = equal(before, after);
  c.results["pairwise_orthogonal"] = orthogonal;
  c.summary.push_back(std::to_string(out.size()) + " orthogonal terms");
}

void cmd_gelfand_map(Context& c) {
  Algebra a = io::parse_algebra_file(c.input);
  auto i = gelfand_map(a, c.budget);
  c.results["points"] = max_space(i.characters).labels();
  c.results["characters"] = characters_json(i.characters);
  c.results["matrix"] = matrix_json(i.morphism.matrix());
  c.results["kernel"] = vectors_json(i.kernel);
  c.results["kernel_is_radical"] = i.kernel_is_radical;
  c.results["injective"] = i.injective;
  c.results["surjective"] = i.surjective;
  c.summary.push_back(std::string("gelfand map: ") + (i.injective ? "injective" : "not injective") + ", " +
                      (i.surjective ? "surjective" : "not surjective"));
}

void cmd_characterize(Context& c) {
  Algebra a = io::parse_algebra_file(c.input);
  auto v = characterize(a, c.budget);
  c.results["is_continuous_function_algebra"] = v.is_continuous_function_algebra;
  c.results["completeness_asserted"] = v.completeness_asserted;
  c.results["characters"] = characters_json(v.characters);
  Json failures = Json::array();
  std::vector<std::string> names;
  for (auto f : v.failures) {
    names.emplace_back(failed_condition_name(f));
    failures.push_back(names.back());
  }
  c.results["failures"] = std::move(failures);
  c.results["space"] = v.space ? io::space_to_json(*v.space) : Json(nullptr);
  c.results["isomorphism"] = v.isomorphism ? matrix_json(v.isomorphism->matrix()) : Json(nullptr);
  c.justifications = v.justifications;
  if (v.is_continuous_function_algebra) {
    c.summary.push_back("A is C(X, F) for the " + std::to_string(v.space->size()) + "-point space Max(A)");
  } else {
    c.exit = kFails;
    c.failure = join(names, "; ");
    c.summary.push_back("not an algebra of continuous functions: " + c.failure);
  }
}

void cmd_roundtrip(Context& c) {
  const Json doc = io::read_json_file(c.input);
  const std::string schema = io::schema_of(doc);
  if (schema == io::kSpaceSchema) {
    FiniteSpace x = io::space_from_json(doc);
    FieldDescriptor field = io::parse_field_spec(c.field);
    auto r = space_round_trip(x, field);
    auto tri = triangle_identities(x, field);
    Json table = Json::object();
    for (const auto& [label, k] : r.table) table[label] = "M" + std::to_string(k);
    c.results["kind"] = "space";
    c.results["field"] = field.name();
    c.results["transform"] = std::move(table);
    c.results["characters"] = characters_json(r.characters);
    c.results["triangle_space"] = tri.space_side;
    c.results["triangle_algebra"] = tri.algebra_side;
    property(c, r.recovered && tri.holds(), "X is not recovered from Max(C(X, F))");
  } else {
    Algebra a = io::algebra_from_json(doc);
    auto r = algebra_round_trip(a, c.budget);
    c.results["kind"] = "algebra";
    c.results["characters"] = characters_json(r.characters);
    c.results["isomorphism"] = r.isomorphism ? matrix_json(r.isomorphism->matrix()) : Json(nullptr);
    bool triangles = false;
    if (r.recovered) {
      auto tri = triangle_identities(a, c.budget);
      c.results["triangle_space"] = tri.space_side;
      c.results["triangle_algebra"] = tri.algebra_side;
      triangles = tri.holds();
    }
    property(c, r.recovered && triangles, "the Gelfand map A -> C(Max(A), F) is not an isomorphism");
  }
  c.summary.push_back(std::string("round trip: ") + (c.exit == kHolds ? "recovered" : "not recovered"));
}

ContFnOracle make_oracle(const Context& c, const ProfiniteTower& t, const FieldDescriptor& field) {
  if (c.oracle == "identity") return identity_oracle(t, field);
  if (c.oracle.rfind("poly:", 0) == 0) {
    std::vector<long> coeffs;
    std::stringstream ss(c.oracle.substr(5));
    for (std::string part; std::getline(ss, part, ',');) {
      try {
        std::size_t used = 0;
        coeffs.push_back(std::stol(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw Error(ErrorCode::SchemaError, "bad polynomial coefficient \"" + part + "\"");
      }
    }
    if (coeffs.empty()) throw Error(ErrorCode::SchemaError, "poly: needs coefficients");
    return polynomial_oracle(t, field, coeffs);
  }
  if (c.oracle.rfind("data:", 0) == 0) return io::function_from_json(io::read_json_file(c.oracle.substr(5)), t, field);
  throw Error(ErrorCode::SchemaError, "--oracle must be identity, poly:c0,c1,... or data:FILE");
}

void cmd_vdp(Context& c) {
  ProfiniteTower t = io::parse_tower_file(c.input);
  FieldDescriptor field = io::parse_field_spec(c.field);
  ContFnOracle f = make_oracle(c, t, field);
  LCFunction g = vdp_approximate(t, f, c.k);
  LCFunction error{t.depth(), subtract(f.values, inflate(t, g, t.depth()).values)};
  const FiniteSpace& cells = t.level(g.level);
  Json values = Json::object();
  for (std::size_t x = 0; x < cells.size(); ++x) values[cells.label(x)] = text(g.values[x]);
  c.results["oracle"] = f.name;
  c.results["field"] = field.name();
  c.results["k"] = c.k;
  c.results["level"] = g.level;
  c.results["values"] = std::move(values);
  c.results["error_gauge"] = format_abs_value(field, sup_gauge(error));
  const bool bound = in_entourage_fn(t, g, LCFunction{t.depth(), f.values}, c.k);
  c.results["within_neighborhood"] = bound;
  property(c, bound, "the approximation error leaves U_k");
  c.justifications.push_back("vdp: one representative per level-" + std::to_string(g.level) +
                             " cell (first point in level order); the error was checked at all " +
                             std::to_string(f.values.size()) + " finest-level points");
  c.summary.push_back("approximant at level " + std::to_string(g.level) + ", error gauge " +
                      c.results["error_gauge"].get<std::string>());
}

void cmd_report(Context& c) {
  Algebra a = io::parse_algebra_file(c.input);
  auto r = property_report(a, c.budget);
  auto chars = enumerate_characters(a, c.budget).characters;
  Json props;
  props["gelfand"] = r.gelfand;
  props["semisimple"] = r.semisimple ? Json(*r.semisimple) : Json(nullptr);
  props["spectra_compact"] = r.spectra_compact;
  props["pm"] = r.pm;
  props["zariski_hausdorff"] = r.zariski_hausdorff;
  props["topologies_coincide"] = r.topologies_coincide;
  c.results["dimension"] = a.dim();
  c.results["field"] = a.field().name();
  c.results["properties"] = std::move(props);
  c.results["characters"] = characters_json(chars);
  c.justifications = r.justifications;
  c.summary.push_back(std::string("gelfand ") + (r.gelfand ? "yes" : "no") + ", semisimple " +
                      (r.semisimple ? (*r.semisimple ? "yes" : "no") : "unsupported") + ", " +
                      std::to_string(chars.size()) + " characters");
}

}  // namespace

// ---------------------------------------------------------------- driver

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Json* report_out) {
  Context c;
  CLI::App app{"Finite-dimensional commutative algebras, their spectra and Gelfand duality", "gelfand"};
  app.require_subcommand(1);
  app.set_version_flag("--version", GELFAND_VERSION);

  auto common = [&](CLI::App* sub, const char* input_help) {
    sub->add_option("input", c.input, input_help)->required();
    sub->add_option("--report", c.report_path, "Write the full JSON report to this file");
    sub->add_flag("--json", c.print_json, "Print the JSON report instead of the summary");
    sub->add_option("--budget", c.budget, "Character search budget in visited nodes")->capture_default_str();
    return sub;
  };
  const char* alg = "Algebra file (gelfand-algebra/1)";
  std::vector<std::pair<CLI::App*, void (*)(Context&)>> commands;
  auto add = [&](const char* name, const char* help, const char* input_help, void (*fn)(Context&)) {
    auto* sub = common(app.add_subcommand(name, help), input_help);
    commands.emplace_back(sub, fn);
    return sub;
  };
  add("validate", "Validate an algebra file and print its canonical form", alg, cmd_validate);
  add("spectrum", "Spectrum of an element", alg, cmd_spectrum)
      ->add_option("--element", c.element, "Coordinates, e.g. 1,0,-1/2")->required();
  add("max-spec", "Characters with the Zariski and Gelfand topologies", alg, cmd_max_spec);
  {
    // positionals fill in declaration order: the property precedes the file
    auto* check = app.add_subcommand("check", "Check one property");
    check->add_option("property", c.property, "gelfand | semisimple | pm | hausdorff | topologies")
        ->required()
        ->check(CLI::IsMember({"gelfand", "semisimple", "pm", "hausdorff", "topologies"}));
    commands.emplace_back(common(check, alg), cmd_check);
  }
  add("idempotents", "Primitive idempotents", alg, cmd_idempotents)
      ->add_flag("--closure", c.closure, "Also list the whole Boolean algebra");
  add("orthogonalize", "Rewrite a combination of idempotents over orthogonal atoms", alg, cmd_orthogonalize)
      ->add_option("--term", c.terms, "coefficient:coordinates, e.g. 2:1,0,0")
      ->required();
  add("gelfand-map", "The Gelfand map A -> C(Max(A), F)", alg, cmd_gelfand_map);
  add("characterize", "Decide whether A is an algebra of continuous functions", alg, cmd_characterize);
  add("duality-roundtrip", "Round trip through the duality", "Space or algebra file", cmd_roundtrip)
      ->add_option("--field", c.field, "Field for a space: Q, Fp:p or Qp:p:N")
      ->capture_default_str();
  auto* vdp = add("vdp-approx", "Locally constant approximation on a tower", "Tower file (gelfand-tower/1)", cmd_vdp);
  vdp->add_option("--oracle", c.oracle, "identity | poly:c0,c1,... | data:FILE")->capture_default_str();
  vdp->add_option("--field", c.field, "Q, Fp:p or Qp:p:N")->required();
  vdp->add_option("--k", c.k, "Neighborhood index")->capture_default_str()->check(CLI::NonNegativeNumber);
  add("report", "All properties of an algebra", alg, cmd_report);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  void (*fn)(Context&) = nullptr;
  for (auto& [sub, f] : commands) {
    if (sub->parsed()) {
      c.command = sub->get_name();
      fn = f;
    }
  }
  if (c.command == "check") c.command += " " + c.property;

  const auto start = std::chrono::steady_clock::now();
  Json reason = nullptr;
  std::string digest;
  try {
    digest = "sha256:" + sha256_hex(read_bytes(c.input));
    fn(c);
    if (c.exit == kFails) {
      reason = Json::object();
      reason["code"] = "PropertyFails";
      reason["message"] = c.failure;
    }
  } catch (const Error& e) {
    c.exit = exit_code_for(e.code());
    reason = Json::object();
    reason["code"] = std::string(error_code_name(e.code()));
    reason["message"] = e.what();
    c.results = Json::object();
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Json report;
  report["tool"] = "gelfand";
  report["version"] = GELFAND_VERSION;
  report["command"] = c.command;
  report["input_digest"] = digest.empty() ? Json(nullptr) : Json(digest);
  report["exit_code"] = c.exit;
  report["reason"] = std::move(reason);
  report["results"] = std::move(c.results);
  report["justifications"] = c.justifications;
  report["timings"] = Json{{"wall_ms", std::round(elapsed * 1000.0) / 1000.0}};

  if (c.print_json) {
    out << report.dump(2) << "\n";
  } else {
    for (const auto& line : c.summary) out << line << "\n";
  }
  if (!c.report_path.empty()) {
    std::ofstream file(c.report_path, std::ios::binary);
    if (!file) {
      err << "error [IoError]: cannot write " << c.report_path << "\n";
      if (report_out) *report_out = report;
      return kInputError;
    }
    file << report.dump(2) << "\n";
  }
  if (report_out) *report_out = std::move(report);
  return c.exit;
}

}  // namespace gelfand::cli

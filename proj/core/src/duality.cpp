#include "gelfand/duality.hpp"

#include <algorithm>
#include <set>

namespace gelfand {

// ---------------------------------------------------------------- spaces

FiniteSpace::FiniteSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw Error(ErrorCode::SchemaError, "duplicate point label \"" + l + "\"");
  }
}

FiniteSpace FiniteSpace::numbered(std::size_t points, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points; ++i) labels.push_back(prefix + std::to_string(i));
  return FiniteSpace(std::move(labels));
}

std::optional<std::size_t> FiniteSpace::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

SpaceMap::SpaceMap(FiniteSpace source, FiniteSpace target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "space map must assign every source point");
  }
  for (std::size_t x = 0; x < assignment_.size(); ++x) {
    if (assignment_[x] >= target_.size()) {
      throw Error(ErrorCode::DimensionMismatch, "space map sends " + source_.label(x) + " outside the target");
    }
  }
}

SpaceMap SpaceMap::identity(const FiniteSpace& x) {
  std::vector<std::size_t> a(x.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;
  return SpaceMap(x, x, std::move(a));
}

bool SpaceMap::is_injective() const {
  return std::set<std::size_t>(assignment_.begin(), assignment_.end()).size() == assignment_.size();
}

bool SpaceMap::is_surjective() const {
  return std::set<std::size_t>(assignment_.begin(), assignment_.end()).size() == target_.size();
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (!(g.source() == f.target())) throw Error(ErrorCode::DimensionMismatch, "compose: spaces differ");
  std::vector<std::size_t> a;
  for (std::size_t x = 0; x < f.source().size(); ++x) a.push_back(g(f(x)));
  return SpaceMap(f.source(), g.target(), std::move(a));
}

// ---------------------------------------------------------------- morphisms

AlgebraMorphism::AlgebraMorphism(Algebra source, Algebra target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!(source_.field() == target_.field()) || !(matrix_.field() == source_.field())) {
    throw Error(ErrorCode::DimensionMismatch, "morphism between algebras over different fields");
  }
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "morphism matrix must be dim(target) x dim(source)");
  }
  if (!equal(matrix_.apply(source_.unit()), target_.unit())) {
    throw Error(ErrorCode::NotMorphism, "unit is not mapped to the unit");
  }
  std::vector<AlgElement> images;
  for (std::size_t j = 0; j < source_.dim(); ++j) images.push_back(matrix_.column(j));
  for (std::size_t i = 0; i < source_.dim(); ++i) {
    for (std::size_t j = i; j < source_.dim(); ++j) {
      if (!equal(matrix_.apply(source_.product(i, j)), target_.mul(images[i], images[j]))) {
        throw Error(ErrorCode::NotMorphism, "not multiplicative on basis pair (" + std::to_string(i) +
                                                ", " + std::to_string(j) + ")");
      }
    }
  }
}

AlgebraMorphism AlgebraMorphism::identity(const Algebra& a) {
  return AlgebraMorphism(a, a, Matrix::identity(a.field(), a.dim()));
}

bool AlgebraMorphism::is_injective() const { return rank(matrix_) == source_.dim(); }
bool AlgebraMorphism::is_surjective() const { return rank(matrix_) == target_.dim(); }

AlgebraMorphism compose(const AlgebraMorphism& psi, const AlgebraMorphism& phi) {
  if (!(psi.source() == phi.target())) throw Error(ErrorCode::DimensionMismatch, "compose: algebras differ");
  return AlgebraMorphism(phi.source(), psi.target(), psi.matrix() * phi.matrix());
}

// ---------------------------------------------------------------- functors

Algebra C_on_space(const FiniteSpace& x, const FieldDescriptor& field) {
  if (x.size() == 0) throw Error(ErrorCode::DimensionMismatch, "C(X) needs a nonempty space");
  return pointwise_algebra(field, x.size(), x.labels());
}

AlgebraMorphism C_on_map(const SpaceMap& f, const FieldDescriptor& field) {
  const std::size_t nx = f.source().size();
  const std::size_t ny = f.target().size();
  Matrix m(field, nx, ny);
  for (std::size_t x = 0; x < nx; ++x) m(x, f(x)) = field.one();
  return AlgebraMorphism(C_on_space(f.target(), field), C_on_space(f.source(), field), std::move(m));
}

FiniteSpace max_space(const std::vector<Character>& characters) {
  return FiniteSpace::numbered(characters.size(), "M");
}

namespace {

std::optional<std::size_t> find_character(const std::vector<Character>& chars, const Vector& values) {
  for (std::size_t k = 0; k < chars.size(); ++k) {
    if (equal(chars[k].values, values)) return k;
  }
  return std::nullopt;
}

std::vector<Character> gelfand_characters(const Algebra& a, std::size_t budget, const char* role) {
  auto check = check_gelfand(a, budget);
  if (!check.holds) throw Error(ErrorCode::NotGelfand, std::string(role) + " is not Gelfand: " + check.reason);
  return enumerate_characters(a, budget).characters;
}

}  // namespace

SpaceMap CharacterMap::as_space_map() const {
  return SpaceMap(max_space(source), max_space(target), assignment);
}

CharacterMap M_on_morphism(const AlgebraMorphism& phi, std::size_t budget) {
  CharacterMap out;
  out.target = gelfand_characters(phi.source(), budget, "source");
  out.source = gelfand_characters(phi.target(), budget, "target");
  for (const auto& chi : out.source) {
    Vector pulled;
    for (std::size_t i = 0; i < phi.source().dim(); ++i) pulled.push_back(evaluate(chi, phi.matrix().column(i)));
    auto k = find_character(out.target, pulled);
    if (!k) throw Error(ErrorCode::NotMorphism, "pulled-back character is not a character");
    out.assignment.push_back(*k);
  }
  return out;
}

// ---------------------------------------------------------------- transforms

SpaceMap GelfandTransform::as_space_map(const FiniteSpace& x) const {
  return SpaceMap(x, max_space(characters), assignment);
}

GelfandTransform gelfand_transform(const FiniteSpace& x, const FieldDescriptor& field) {
  GelfandTransform out{C_on_space(x, field), {}, {}, false, false};
  out.characters = enumerate_characters(out.algebra).characters;
  bool total = true;
  for (std::size_t p = 0; p < x.size(); ++p) {
    auto k = find_character(out.characters, unit_vector(field, x.size(), p));
    total = total && k.has_value();
    out.assignment.push_back(k.value_or(out.characters.size()));
  }
  if (total && out.characters.size() == x.size()) {
    out.bijective = SpaceMap(x, max_space(out.characters), out.assignment).is_injective();
  }
  out.homeomorphism = out.bijective && gelfand_topology(out.algebra, out.characters).is_discrete();
  return out;
}

GelfandMap gelfand_map(const Algebra& a, std::size_t budget) {
  auto chars = gelfand_characters(a, budget, "algebra");
  Algebra target = C_on_space(max_space(chars), a.field());
  std::vector<Vector> rows;
  for (const auto& chi : chars) rows.push_back(chi.values);
  Matrix m = Matrix::from_rows(a.field(), a.dim(), rows);
  GelfandMap out{AlgebraMorphism(a, target, m), std::move(chars), kernel(m), false, false, false};
  out.kernel_is_radical =
      Subspace::span(a.field(), a.dim(), out.kernel) == jacobson_radical(a).subspace();
  out.injective = out.kernel.empty();
  out.surjective = rank(m) == out.characters.size();
  return out;
}

bool transform_is_natural(const SpaceMap& f, const FieldDescriptor& field) {
  auto gx = gelfand_transform(f.source(), field);
  auto gy = gelfand_transform(f.target(), field);
  auto m = M_on_morphism(C_on_map(f, field));
  for (std::size_t x = 0; x < f.source().size(); ++x) {
    if (gy.assignment[f(x)] != m.assignment[gx.assignment[x]]) return false;
  }
  return true;
}

bool gelfand_map_is_natural(const AlgebraMorphism& phi, std::size_t budget) {
  auto ia = gelfand_map(phi.source(), budget);
  auto ib = gelfand_map(phi.target(), budget);
  auto m = M_on_morphism(phi, budget);
  auto cm = C_on_map(m.as_space_map(), phi.source().field());
  return cm.matrix() * ia.morphism.matrix() == ib.morphism.matrix() * phi.matrix();
}

// ---------------------------------------------------------------- adjunction

namespace {

bool space_side(const FiniteSpace& x, const FieldDescriptor& field) {
  auto g = gelfand_transform(x, field);
  if (!g.bijective) return false;
  auto i = gelfand_map(g.algebra);
  auto cg = C_on_map(g.as_space_map(x), field);
  return (cg.matrix() * i.morphism.matrix()).is_identity();
}

bool algebra_side(const Algebra& a, std::size_t budget) {
  auto i = gelfand_map(a, budget);
  const FiniteSpace max_a = max_space(i.characters);
  auto g = gelfand_transform(max_a, a.field());
  if (!g.bijective) return false;
  auto m = M_on_morphism(i.morphism, budget);
  for (std::size_t k = 0; k < max_a.size(); ++k) {
    if (m.assignment[g.assignment[k]] != k) return false;
  }
  return true;
}

}  // namespace

TriangleReport triangle_identities(const FiniteSpace& x, const FieldDescriptor& field) {
  return TriangleReport{space_side(x, field), algebra_side(C_on_space(x, field), kDefaultSearchBudget)};
}

TriangleReport triangle_identities(const Algebra& a, std::size_t budget) {
  auto chars = gelfand_characters(a, budget, "algebra");
  return TriangleReport{space_side(max_space(chars), a.field()), algebra_side(a, budget)};
}

SpaceRoundTrip space_round_trip(const FiniteSpace& x, const FieldDescriptor& field) {
  auto g = gelfand_transform(x, field);
  SpaceRoundTrip out;
  out.recovered = g.bijective && g.homeomorphism;
  for (std::size_t p = 0; p < x.size(); ++p) out.table.emplace_back(x.label(p), g.assignment[p]);
  out.characters = std::move(g.characters);
  return out;
}

AlgebraRoundTrip algebra_round_trip(const Algebra& a, std::size_t budget) {
  AlgebraRoundTrip out;
  try {
    auto i = gelfand_map(a, budget);
    out.recovered = i.injective && i.surjective;
    if (out.recovered) out.isomorphism = i.morphism;
    out.characters = std::move(i.characters);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotGelfand) throw;
    out.characters = enumerate_characters(a, budget).characters;
  }
  return out;
}

// ---------------------------------------------------------------- verdicts

std::string_view failed_condition_name(FailedCondition c) noexcept {
  switch (c) {
    case FailedCondition::NotGelfand: return "not Gelfand";
    case FailedCondition::NotSemisimple: return "not semisimple";
    case FailedCondition::IdempotentsDoNotSpan: return "idempotents do not span";
  }
  return "unknown";
}

Verdict characterize(const Algebra& a, std::size_t budget) {
  Verdict v;
  v.characters = enumerate_characters(a, budget).characters;
  const std::size_t radical = jacobson_radical(a).dim();
  const std::size_t n = a.dim();
  const std::size_t m = v.characters.size();

  const bool gelfand = m == n - radical;
  v.justifications.push_back("gelfand: " + std::to_string(m) + " characters, dim A/Jrad = " +
                             std::to_string(n - radical));
  if (!gelfand) v.failures.push_back(FailedCondition::NotGelfand);

  v.justifications.push_back("semisimple: dim Jrad = " + std::to_string(radical));
  if (radical != 0) v.failures.push_back(FailedCondition::NotSemisimple);

  // The idempotents span exactly when A ≅ F^n, i.e. there are dim A characters.
  const bool spans = m == n;
  v.justifications.push_back("idempotents: " + std::to_string(m) + " primitive idempotents for dim A = " +
                             std::to_string(n));
  if (!spans) v.failures.push_back(FailedCondition::IdempotentsDoNotSpan);

  if (a.field().kind() == FieldKind::Rational) {
    v.completeness_asserted = false;
    v.justifications.push_back(
        "completeness: Q is not complete; the verdict is the exact finite-dimensional isomorphism "
        "test and no completeness-dependent statement is asserted");
  } else {
    v.justifications.push_back(
        "completeness: finite dimension over a complete field, so the idempotent span is closed "
        "and uniform density is equality");
  }

  if (v.failures.empty()) {
    auto i = gelfand_map(a, budget);
    v.is_continuous_function_algebra = i.injective && i.surjective;
    v.space = max_space(i.characters);
    v.isomorphism = i.morphism;
  }
  return v;
}

}  // namespace gelfand

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gelfand/idempotents.hpp"

namespace gelfand {

/// A finite discrete space. Finite Hausdorff spaces are discrete, and the
/// indicator functions of points separate them from any closed set.
class FiniteSpace {
 public:
  /// Throws SchemaError naming a repeated label.
  explicit FiniteSpace(std::vector<std::string> labels);
  /// Points labelled prefix0, prefix1, ...
  static FiniteSpace numbered(std::size_t points, const std::string& prefix = "x");

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A total function between finite spaces, by point index.
class SpaceMap {
 public:
  /// Throws DimensionMismatch unless every source point has a target.
  SpaceMap(FiniteSpace source, FiniteSpace target, std::vector<std::size_t> assignment);
  static SpaceMap identity(const FiniteSpace& x);

  const FiniteSpace& source() const noexcept { return source_; }
  const FiniteSpace& target() const noexcept { return target_; }
  const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }
  std::size_t operator()(std::size_t x) const { return assignment_.at(x); }

  bool is_injective() const;
  bool is_surjective() const;

  friend bool operator==(const SpaceMap&, const SpaceMap&) = default;

 private:
  FiniteSpace source_, target_;
  std::vector<std::size_t> assignment_;
};

/// g ∘ f.
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

/// A unital algebra morphism, validated on the unit and on every basis pair.
class AlgebraMorphism {
 public:
  /// `matrix` is dim(target) x dim(source); column j is the image of b_j.
  /// Throws DimensionMismatch on shape or field mismatch, NotMorphism naming
  /// the failing unit or basis pair.
  AlgebraMorphism(Algebra source, Algebra target, Matrix matrix);
  static AlgebraMorphism identity(const Algebra& a);

  const Algebra& source() const noexcept { return source_; }
  const Algebra& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  AlgElement operator()(const AlgElement& a) const { return matrix_.apply(a); }

  bool is_injective() const;
  bool is_surjective() const;

 private:
  Algebra source_, target_;
  Matrix matrix_;
};

/// ψ ∘ φ.
AlgebraMorphism compose(const AlgebraMorphism& psi, const AlgebraMorphism& phi);

// ---------------------------------------------------------------- functors

/// C(X, F) = F^X with the point indicators as basis; basis names are the
/// point labels.
Algebra C_on_space(const FiniteSpace& x, const FieldDescriptor& field);

/// f*: C(Y) -> C(X), φ -> φ ∘ f. The column for e_y is the indicator of
/// f^{-1}(y).
AlgebraMorphism C_on_map(const SpaceMap& f, const FieldDescriptor& field);

/// The finite space underlying a list of characters, labelled M0, M1, ...
FiniteSpace max_space(const std::vector<Character>& characters);

/// M(φ): Max(B) -> Max(A), χ -> χ ∘ φ, for φ: A -> B.
struct CharacterMap {
  std::vector<Character> source;  // Max(B)
  std::vector<Character> target;  // Max(A)
  std::vector<std::size_t> assignment;
  SpaceMap as_space_map() const;
};

/// Throws NotGelfand when either algebra fails check_gelfand.
CharacterMap M_on_morphism(const AlgebraMorphism& phi, std::size_t budget = kDefaultSearchBudget);

// ---------------------------------------------------------------- transforms

/// G_X: X -> Max(C(X, F)), x -> ev_x.
struct GelfandTransform {
  Algebra algebra;                     // C(X, F)
  std::vector<Character> characters;   // Max(C(X, F)) in canonical order
  std::vector<std::size_t> assignment; // point -> character index
  bool bijective = false;
  bool homeomorphism = false;          // both sides discrete and bijective
  SpaceMap as_space_map(const FiniteSpace& x) const;
};

GelfandTransform gelfand_transform(const FiniteSpace& x, const FieldDescriptor& field);

/// I_A: A -> C(Max(A), F), a -> (χ(a))_χ.
struct GelfandMap {
  AlgebraMorphism morphism;
  std::vector<Character> characters;
  std::vector<AlgElement> kernel;  // basis of ker I_A
  bool kernel_is_radical = false;
  bool injective = false;
  bool surjective = false;
};

/// Throws NotGelfand.
GelfandMap gelfand_map(const Algebra& a, std::size_t budget = kDefaultSearchBudget);

/// G_Y ∘ f = M(C(f)) ∘ G_X.
bool transform_is_natural(const SpaceMap& f, const FieldDescriptor& field);
/// C(M(φ)) ∘ I_A = I_B ∘ φ.
bool gelfand_map_is_natural(const AlgebraMorphism& phi, std::size_t budget = kDefaultSearchBudget);

// ---------------------------------------------------------------- adjunction

/// C(G_X) ∘ I_{C(X)} = id on C(X, F) and M(I_A) ∘ G_{Max(A)} = id on Max(A).
struct TriangleReport {
  bool space_side = false;    // on C(X, F)
  bool algebra_side = false;  // on Max(A)
  bool holds() const { return space_side && algebra_side; }
};

/// Both identities with A = C(X, F).
TriangleReport triangle_identities(const FiniteSpace& x, const FieldDescriptor& field);
/// Both identities with X = Max(A). Throws NotGelfand.
TriangleReport triangle_identities(const Algebra& a, std::size_t budget = kDefaultSearchBudget);

/// X -> Max(C(X, F)) as an explicit label table.
struct SpaceRoundTrip {
  bool recovered = false;
  std::vector<std::pair<std::string, std::size_t>> table;  // point label -> character index
  std::vector<Character> characters;
};

SpaceRoundTrip space_round_trip(const FiniteSpace& x, const FieldDescriptor& field);

/// A -> C(Max(A), F) through the Gelfand map.
struct AlgebraRoundTrip {
  bool recovered = false;
  std::optional<AlgebraMorphism> isomorphism;
  std::vector<Character> characters;
};

AlgebraRoundTrip algebra_round_trip(const Algebra& a, std::size_t budget = kDefaultSearchBudget);

// ---------------------------------------------------------------- verdicts

enum class FailedCondition { NotGelfand, NotSemisimple, IdempotentsDoNotSpan };

std::string_view failed_condition_name(FailedCondition c) noexcept;

struct Verdict {
  bool is_continuous_function_algebra = false;
  std::optional<FiniteSpace> space;           // Max(A) on success
  std::optional<AlgebraMorphism> isomorphism; // the Gelfand map on success
  std::vector<Character> characters;
  std::vector<FailedCondition> failures;
  std::vector<std::string> justifications;
  bool completeness_asserted = true;          // false over Q
};

/// A ≅ C(Max(A), F) iff A is Gelfand, semisimple and spanned by its
/// idempotents. Every failing condition is listed. Propagates
/// UnsupportedAlgebra.
Verdict characterize(const Algebra& a, std::size_t budget = kDefaultSearchBudget);

}  // namespace gelfand

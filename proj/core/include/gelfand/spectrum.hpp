#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gelfand/algebra.hpp"

namespace gelfand {

/// A unital algebra morphism A -> F, stored by its values on the basis.
struct Character {
  Vector values;
};

Element evaluate(const Character& chi, const AlgElement& a);
/// ker χ as an ideal of codimension one.
Ideal character_kernel(const Algebra& a, const Character& chi);
/// χ(1) = 1 and χ(b_i b_j) = χ(b_i) χ(b_j) for all i <= j.
bool is_character(const Algebra& a, const Vector& values);

inline constexpr std::size_t kDefaultSearchBudget = 1'000'000;

struct CharacterSearch {
  std::vector<Character> characters;  // lexicographic in canonical element order
  std::size_t nodes_visited = 0;
};

/// All characters of A. Candidate values for b_i are the roots of its minimal
/// polynomial; a depth-first search assigns b_0, b_1, ... and checks each
/// product relation as soon as every coordinate it involves is assigned.
/// Throws SearchBudgetExceeded once more than `budget` nodes are visited.
CharacterSearch enumerate_characters(const Algebra& a, std::size_t budget = kDefaultSearchBudget);

// ---------------------------------------------------------------- topologies

/// Subsets of a spectrum with at most 64 points, as bit masks.
using PointSet = std::uint64_t;

PointSet full_set(std::size_t points);

/// A topology on {0, ..., m-1}. Finite topologies are determined by point
/// closures; a set is closed iff it contains the closure of each member.
class FiniteTopology {
 public:
  static FiniteTopology discrete(std::size_t points);
  static FiniteTopology indiscrete(std::size_t points);
  /// Topology whose closed sets are generated (finite unions, intersections)
  /// by the given family.
  static FiniteTopology from_closed_sets(std::size_t points, const std::vector<PointSet>& family);
  static FiniteTopology from_closures(std::vector<PointSet> closures);

  std::size_t size() const noexcept { return closures_.size(); }
  PointSet closure_of_point(std::size_t x) const { return closures_.at(x); }
  PointSet closure(PointSet s) const;
  bool is_closed(PointSet s) const;
  bool is_open(PointSet s) const;
  /// Every closed set; 2^m work, m <= 20.
  std::vector<PointSet> closed_sets() const;

  bool is_discrete() const;
  /// Finite spaces are Hausdorff exactly when discrete.
  bool is_hausdorff() const { return is_discrete(); }
  /// Every closed set of *this is closed in `finer`.
  bool is_coarser_than(const FiniteTopology& finer) const;

  friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;

 private:
  explicit FiniteTopology(std::vector<PointSet> c) : closures_(std::move(c)) {}
  std::vector<PointSet> closures_;
};

/// D(a) = {χ : χ(a) != 0}.
PointSet basic_open(const std::vector<Character>& chars, const AlgElement& a);
/// V(I) = {χ : I ⊆ ker χ}.
PointSet vanishing_set(const std::vector<Character>& chars, const std::vector<AlgElement>& ideal_basis);

/// τ_Z: cl{χ} = V(ker χ).
FiniteTopology zariski_topology(const Algebra& a, const std::vector<Character>& chars);

/// τ_G, the weakest topology making every ev_a continuous. Two points are
/// separated once some basis element takes values χ(b) != ψ(b); the open set
/// ev_b^{-1}(χ(b) + U_k) with k the separation index of χ(b) - ψ(b) then
/// contains χ and not ψ.
FiniteTopology gelfand_topology(const Algebra& a, const std::vector<Character>& chars);

struct MaxSpec {
  std::vector<Character> points;
  FiniteTopology zariski;
  FiniteTopology gelfand;
};

MaxSpec max_spec(const Algebra& a, std::size_t budget = kDefaultSearchBudget);

/// For each point M, an element a with ev_a = 0 on the largest τ_G-closed set
/// missing M and ev_a(M) = 1, when the linear system is consistent.
struct TopologyComparison {
  bool zariski_coarser = false;  // τ_Z ⊆ τ_G
  bool coincide = false;
  std::vector<std::optional<AlgElement>> witnesses;
};

TopologyComparison compare_topologies(const Algebra& a, const std::vector<Character>& chars);

// ---------------------------------------------------------------- properties

struct GelfandCheck {
  bool holds = false;
  std::size_t characters = 0;
  std::size_t radical_dim = 0;
  std::size_t quotient_dim = 0;  // dim A/Jrad
  std::string reason;
};

/// Gelfand iff #characters == dim(A/Jrad).
GelfandCheck check_gelfand(const Algebra& a, std::size_t budget = kDefaultSearchBudget);

struct PmCheck {
  bool holds = true;
  std::string justification;
};

/// Artinian algebras have Spec = Max, so every prime lies in exactly one
/// maximal ideal.
PmCheck check_pm(const Algebra& a);

struct PropertyReport {
  bool gelfand = false;
  std::optional<bool> semisimple;  // empty when the radical is unsupported
  bool spectra_compact = true;
  bool pm = true;
  bool zariski_hausdorff = false;
  bool topologies_coincide = false;
  std::size_t characters = 0;
  std::vector<std::string> justifications;
};

PropertyReport property_report(const Algebra& a, std::size_t budget = kDefaultSearchBudget);

}  // namespace gelfand

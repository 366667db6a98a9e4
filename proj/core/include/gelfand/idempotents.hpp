#pragma once

#include <optional>
#include <vector>

#include "gelfand/spectrum.hpp"

namespace gelfand {

struct IdempotentSet {
  std::vector<AlgElement> atoms;               // orthogonal, primitive, summing to 1
  std::vector<Character> characters;           // atoms[k] is the indicator of characters[k]
  std::optional<std::vector<AlgElement>> all;  // the generated Boolean algebra, when requested
  int newton_steps = 0;                        // largest number of lifting steps used
};

/// Primitive idempotents of a Gelfand algebra. For each character χ_k the
/// linear system χ_j(e) = δ_jk gives an idempotent modulo Jrad, which the
/// iteration e <- 3e^2 - 2e^3 lifts to an exact idempotent. Throws
/// NotGelfandUnsplit when A/Jrad is not a product of copies of F.
IdempotentSet primitive_idempotents(const Algebra& a, bool with_closure = false,
                                    std::size_t budget = kDefaultSearchBudget);

/// <B(A)>_F.
Subspace span_of_idempotents(const Algebra& a, std::size_t budget = kDefaultSearchBudget);

/// <B(A)>_F == A. Equivalent to A ≅ F^n, i.e. dim A characters, which is
/// how it is decided; this also answers for algebras that are not Gelfand.
bool spans_all(const Algebra& a, std::size_t budget = kDefaultSearchBudget);

/// An idempotent e with χ(e) = 1 and ψ(e) = 0.
struct SeparatingIdempotent {
  std::size_t first, second;
  AlgElement idempotent;
};

/// One separating idempotent per ordered pair of distinct characters of a
/// Gelfand algebra.
std::vector<SeparatingIdempotent> separating_idempotents(const Algebra& a,
                                                         std::size_t budget = kDefaultSearchBudget);

}  // namespace gelfand

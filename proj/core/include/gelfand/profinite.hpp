#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gelfand/duality.hpp"

namespace gelfand {

/// A truncated inverse system X_0 <- X_1 <- ... <- X_L of finite spaces with
/// surjective bonding maps.
class ProfiniteTower {
 public:
  /// bonding[k] sends X_{k+1} onto X_k, by point index. Throws SchemaError on
  /// a bonding map that is missing, partial, out of range or not surjective.
  ProfiniteTower(std::vector<FiniteSpace> levels, std::vector<std::vector<std::size_t>> bonding);

  /// Z_p truncated at depth L: X_k = Z/p^k with labels "0" .. "p^k - 1" and
  /// reduction mod p^k as bonding maps.
  static ProfiniteTower p_adic_integers(unsigned long p, std::size_t depth);

  std::size_t depth() const noexcept { return levels_.size() - 1; }
  const FiniteSpace& level(std::size_t k) const;
  /// π_k: X_{k+1} -> X_k.
  SpaceMap bonding(std::size_t k) const;
  /// The image of point x of level `from` in level `to` <= from.
  std::size_t project(std::size_t x, std::size_t from, std::size_t to) const;

 private:
  std::vector<FiniteSpace> levels_;
  std::vector<std::vector<std::size_t>> bonding_;
};

/// C(X_k, F). Throws DepthExceeded for k > L and DimensionCapExceeded past
/// 64 points.
Algebra level_algebra(const ProfiniteTower& t, std::size_t k, const FieldDescriptor& field);

/// C(X_k) -> C(X_{k+1}), precomposition with π_k.
AlgebraMorphism inflation(const ProfiniteTower& t, std::size_t k, const FieldDescriptor& field);

/// A function constant on the points of level k.
struct LCFunction {
  std::size_t level = 0;
  Vector values;  // indexed by the points of X_level
};

/// f ∘ π, carried to level `to` >= f.level.
LCFunction inflate(const ProfiniteTower& t, const LCFunction& f, std::size_t to);

/// A continuous function known through its values on the finest level and a
/// modulus: points in the same level-m(k) cell have values differing by an
/// element of U_k.
struct ContFnOracle {
  std::string name;
  Vector values;                         // indexed by the points of X_L
  std::function<std::size_t(int)> modulus;
};

/// x -> x on Z_p, read off the integer labels of the finest level; m(k) = k.
ContFnOracle identity_oracle(const ProfiniteTower& t, const FieldDescriptor& field);
/// x -> c_0 + c_1 x + ... with integer coefficients; m(k) = k.
ContFnOracle polynomial_oracle(const ProfiniteTower& t, const FieldDescriptor& field,
                               const std::vector<long>& coefficients);

/// g = Σ f(x_C) χ_C over the cells C of level m(k), with x_C the first point
/// of C in the level-L order. Verifies (f - g)(x) ∈ U_k at every finest-level
/// point; throws ModulusViolated naming a failing pair, DepthExceeded when
/// m(k) > L.
LCFunction vdp_approximate(const ProfiniteTower& t, const ContFnOracle& f, int k);

/// max |f(x)|.
mpq_class sup_gauge(const LCFunction& f);

/// Every difference f(x) - g(x) lies in U_k, after inflating to a common level.
bool in_entourage_fn(const ProfiniteTower& t, const LCFunction& f, const LCFunction& g, int k);

/// The cell indicators of level k, checked to be orthogonal idempotents
/// summing to 1 and spanning C(X_k, F).
struct DensityWitness {
  bool holds = false;
  std::vector<AlgElement> indicators;
};

DensityWitness idempotent_span_density(const ProfiniteTower& t, std::size_t k, const FieldDescriptor& field);

/// A finite cover of σ(a) by translates λ + U_k, centres drawn greedily from
/// σ(a) in canonical order.
struct SpectrumCover {
  bool holds = false;
  std::vector<Element> spectrum;
  std::vector<Element> centres;
};

SpectrumCover total_boundedness_check(const Algebra& alg, const AlgElement& a, int k);

}  // namespace gelfand

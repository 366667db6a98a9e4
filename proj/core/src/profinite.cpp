#include "gelfand/profinite.hpp"

#include <algorithm>
#include <map>

namespace gelfand {

namespace {

inline constexpr std::size_t kMaxTowerPoints = std::size_t{1} << 20;

std::string level_name(std::size_t k) { return "level " + std::to_string(k); }

}  // namespace

ProfiniteTower::ProfiniteTower(std::vector<FiniteSpace> levels, std::vector<std::vector<std::size_t>> bonding)
    : levels_(std::move(levels)), bonding_(std::move(bonding)) {
  if (levels_.empty()) throw Error(ErrorCode::SchemaError, "a tower needs at least one level");
  if (bonding_.size() + 1 != levels_.size()) {
    throw Error(ErrorCode::SchemaError, "a tower with " + std::to_string(levels_.size()) + " levels needs " +
                                            std::to_string(levels_.size() - 1) + " bonding maps");
  }
  for (std::size_t k = 0; k < bonding_.size(); ++k) {
    const auto& b = bonding_[k];
    const std::string where = "bonding " + std::to_string(k);
    if (levels_[k + 1].size() < levels_[k].size()) {
      throw Error(ErrorCode::SchemaError, where + ": level sizes must not decrease");
    }
    if (b.size() != levels_[k + 1].size()) {
      throw Error(ErrorCode::SchemaError, where + ": must assign every point of " + level_name(k + 1));
    }
    std::vector<bool> hit(levels_[k].size(), false);
    for (std::size_t x = 0; x < b.size(); ++x) {
      if (b[x] >= levels_[k].size()) {
        throw Error(ErrorCode::SchemaError, where + ": point " + levels_[k + 1].label(x) + " maps outside " +
                                                level_name(k));
      }
      hit[b[x]] = true;
    }
    auto miss = std::find(hit.begin(), hit.end(), false);
    if (miss != hit.end()) {
      throw Error(ErrorCode::SchemaError, where + ": not surjective, nothing maps to " +
                                              levels_[k].label(static_cast<std::size_t>(miss - hit.begin())));
    }
  }
}

ProfiniteTower ProfiniteTower::p_adic_integers(unsigned long p, std::size_t depth) {
  if (p < 2) throw Error(ErrorCode::InvalidField, "tower base must be at least 2");
  std::vector<FiniteSpace> levels;
  std::vector<std::vector<std::size_t>> bonding;
  std::size_t size = 1;
  for (std::size_t k = 0; k <= depth; ++k) {
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < size; ++x) labels.push_back(std::to_string(x));
    levels.emplace_back(std::move(labels));
    if (k > 0) {
      const std::size_t below = size / p;
      std::vector<std::size_t> b(size);
      for (std::size_t x = 0; x < size; ++x) b[x] = x % below;
      bonding.push_back(std::move(b));
    }
    if (k < depth) {
      if (size > kMaxTowerPoints / p) throw Error(ErrorCode::DimensionCapExceeded, "tower too large");
      size *= p;
    }
  }
  return ProfiniteTower(std::move(levels), std::move(bonding));
}

const FiniteSpace& ProfiniteTower::level(std::size_t k) const {
  if (k > depth()) {
    throw Error(ErrorCode::DepthExceeded, level_name(k) + " requested, tower depth " + std::to_string(depth()));
  }
  return levels_[k];
}

SpaceMap ProfiniteTower::bonding(std::size_t k) const {
  if (k >= depth()) throw Error(ErrorCode::DepthExceeded, "no bonding map out of " + level_name(k + 1));
  return SpaceMap(levels_[k + 1], levels_[k], bonding_[k]);
}

std::size_t ProfiniteTower::project(std::size_t x, std::size_t from, std::size_t to) const {
  if (from > depth()) throw Error(ErrorCode::DepthExceeded, level_name(from) + " beyond the tower");
  if (to > from) throw Error(ErrorCode::DimensionMismatch, "projection goes down the tower");
  for (std::size_t k = from; k > to; --k) x = bonding_[k - 1].at(x);
  return x;
}

// ---------------------------------------------------------------- algebras

Algebra level_algebra(const ProfiniteTower& t, std::size_t k, const FieldDescriptor& field) {
  const FiniteSpace& x = t.level(k);
  if (x.size() > kMaxAlgebraDimension) {
    throw Error(ErrorCode::DimensionCapExceeded,
                level_name(k) + " has " + std::to_string(x.size()) + " points, more than 64");
  }
  return C_on_space(x, field);
}

AlgebraMorphism inflation(const ProfiniteTower& t, std::size_t k, const FieldDescriptor& field) {
  level_algebra(t, k + 1, field);  // size and depth checks
  return C_on_map(t.bonding(k), field);
}

LCFunction inflate(const ProfiniteTower& t, const LCFunction& f, std::size_t to) {
  if (f.values.size() != t.level(f.level).size()) {
    throw Error(ErrorCode::DimensionMismatch, "function does not match " + level_name(f.level));
  }
  LCFunction out{to, {}};
  for (std::size_t x = 0; x < t.level(to).size(); ++x) out.values.push_back(f.values[t.project(x, to, f.level)]);
  return out;
}

// ---------------------------------------------------------------- oracles

namespace {

mpz_class integer_label(const std::string& label) {
  mpz_class v;
  if (label.empty() || v.set_str(label, 10) != 0) {
    throw Error(ErrorCode::SchemaError, "point label \"" + label + "\" is not an integer");
  }
  return v;
}

ContFnOracle integer_oracle(const ProfiniteTower& t, const FieldDescriptor& field, std::string name,
                            const std::vector<long>& coefficients) {
  ContFnOracle f;
  f.name = std::move(name);
  for (const auto& label : t.level(t.depth()).labels()) {
    const Element x = field.from_integer(integer_label(label));
    Element v = field.zero();
    for (auto c = coefficients.rbegin(); c != coefficients.rend(); ++c) v = v * x + field.from_integer(*c);
    f.values.push_back(v);
  }
  // Integer polynomials are 1-Lipschitz on Z_p: x ≡ y mod p^k gives f(x) ≡ f(y).
  f.modulus = [](int k) { return static_cast<std::size_t>(std::max(k, 0)); };
  return f;
}

}  // namespace

ContFnOracle identity_oracle(const ProfiniteTower& t, const FieldDescriptor& field) {
  return integer_oracle(t, field, "identity", {0, 1});
}

ContFnOracle polynomial_oracle(const ProfiniteTower& t, const FieldDescriptor& field,
                               const std::vector<long>& coefficients) {
  std::string name = "poly:";
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    name += (i ? "," : "") + std::to_string(coefficients[i]);
  }
  return integer_oracle(t, field, std::move(name), coefficients);
}

LCFunction vdp_approximate(const ProfiniteTower& t, const ContFnOracle& f, int k) {
  const std::size_t top = t.depth();
  const std::size_t n = t.level(top).size();
  if (f.values.size() != n) throw Error(ErrorCode::DimensionMismatch, "oracle does not match the finest level");
  if (k < 0) throw Error(ErrorCode::DimensionMismatch, "neighborhood index must be non-negative");
  const std::size_t m = f.modulus(k);
  if (m > top) {
    throw Error(ErrorCode::DepthExceeded, "modulus at k = " + std::to_string(k) + " needs " + level_name(m) +
                                              ", tower depth " + std::to_string(top));
  }
  if (k > 0 && f.modulus(k - 1) > m) {
    throw Error(ErrorCode::ModulusViolated, "modulus is not monotone at k = " + std::to_string(k));
  }
  const FiniteSpace& cells = t.level(m);
  std::vector<std::size_t> rep(cells.size(), n);
  for (std::size_t x = 0; x < n; ++x) {
    auto& r = rep[t.project(x, top, m)];
    if (r == n) r = x;
  }
  LCFunction g{m, {}};
  for (std::size_t c = 0; c < cells.size(); ++c) g.values.push_back(f.values[rep[c]]);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t r = rep[t.project(x, top, m)];
    if (!in_neighborhood(f.values[x] - f.values[r], k)) {
      const auto& labels = t.level(top).labels();
      throw Error(ErrorCode::ModulusViolated, f.name + ": points " + labels[r] + " and " + labels[x] +
                                                  " share a " + level_name(m) + " cell but differ outside U_" +
                                                  std::to_string(k));
    }
  }
  return g;
}

mpq_class sup_gauge(const LCFunction& f) {
  mpq_class best = 0;
  for (const auto& v : f.values) best = std::max(best, abs_value(v));
  return best;
}

bool in_entourage_fn(const ProfiniteTower& t, const LCFunction& f, const LCFunction& g, int k) {
  const std::size_t common = std::max(f.level, g.level);
  const LCFunction a = inflate(t, f, common);
  const LCFunction b = inflate(t, g, common);
  for (std::size_t x = 0; x < a.values.size(); ++x) {
    if (!in_neighborhood(a.values[x] - b.values[x], k)) return false;
  }
  return true;
}

DensityWitness idempotent_span_density(const ProfiniteTower& t, std::size_t k, const FieldDescriptor& field) {
  Algebra a = level_algebra(t, k, field);
  DensityWitness out;
  AlgElement sum = a.zero();
  bool ok = true;
  for (std::size_t c = 0; c < a.dim(); ++c) {
    AlgElement e = a.basis(c);
    ok = ok && a.is_idempotent(e);
    for (const auto& other : out.indicators) ok = ok && is_zero(a.mul(e, other));
    sum = add(sum, e);
    out.indicators.push_back(std::move(e));
  }
  ok = ok && equal(sum, a.unit());
  ok = ok && rank(Matrix::from_columns(field, a.dim(), out.indicators)) == a.dim();
  out.holds = ok;
  return out;
}

SpectrumCover total_boundedness_check(const Algebra& alg, const AlgElement& a, int k) {
  SpectrumCover out;
  out.spectrum = spectrum(alg, a);
  for (const auto& lambda : out.spectrum) {
    bool covered = false;
    for (const auto& c : out.centres) covered = covered || in_neighborhood(lambda - c, k);
    if (!covered) out.centres.push_back(lambda);
  }
  out.holds = true;
  for (const auto& lambda : out.spectrum) {
    bool covered = false;
    for (const auto& c : out.centres) covered = covered || in_neighborhood(lambda - c, k);
    out.holds = out.holds && covered;
  }
  return out;
}

}  // namespace gelfand

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/linalg.hpp"

namespace gelfand {

inline constexpr std::size_t kMaxAlgebraDimension = 64;

/// Algebra elements are coordinate vectors in the algebra's basis.
using AlgElement = Vector;

/// Unvalidated structure-constant data as read from a file or built in code.
/// A missing (i, j) entry means b_i b_j = 0 unless (j, i) is present, in
/// which case it is mirrored.
struct AlgebraData {
  FieldDescriptor field;
  std::vector<std::string> basis_names;
  Vector unit;
  std::map<std::pair<std::size_t, std::size_t>, Vector> products;
};

/// A finite-dimensional commutative unital algebra given by structure
/// constants. Only constructible through validation, so every instance is
/// commutative, associative and unital. Copies share the immutable tables.
class Algebra {
 public:
  /// Throws NotCommutative / NotAssociative / BadUnit naming the offending
  /// indices, DimensionMismatch on malformed vectors, DimensionCapExceeded
  /// beyond kMaxAlgebraDimension.
  static Algebra validate(const AlgebraData& raw);

  const FieldDescriptor& field() const noexcept { return d_->field; }
  std::size_t dim() const noexcept { return d_->n; }
  const std::vector<std::string>& basis_names() const noexcept { return d_->names; }
  const AlgElement& unit() const noexcept { return d_->unit; }
  /// Coordinates of b_i b_j.
  const AlgElement& product(std::size_t i, std::size_t j) const { return d_->table[i * d_->n + j]; }

  /// Canonical raw form: products listed once per unordered pair (i <= j),
  /// zero products omitted.
  AlgebraData data() const;

  AlgElement zero() const;
  AlgElement basis(std::size_t i) const;
  AlgElement scalar(const Element& c) const;

  AlgElement mul(const AlgElement& a, const AlgElement& b) const;
  AlgElement pow(const AlgElement& a, unsigned exponent) const;
  /// Matrix of x -> a x; column j holds a b_j.
  Matrix regular_matrix(const AlgElement& a) const;
  /// a^{-1}, or nullopt when a is not invertible.
  std::optional<AlgElement> invert(const AlgElement& a) const;
  Element trace(const AlgElement& a) const;

  /// Monic generator of {g : g(a) = 0}.
  Polynomial minimal_polynomial(const AlgElement& a) const;
  Polynomial characteristic_polynomial(const AlgElement& a) const;

  bool is_idempotent(const AlgElement& e) const;

  /// Same field, basis names and structure constants.
  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  struct Data {
    FieldDescriptor field;
    std::size_t n = 0;
    std::vector<std::string> names;
    AlgElement unit;
    std::vector<AlgElement> table;
  };
  explicit Algebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  void check_size(const AlgElement& a) const;

  std::shared_ptr<const Data> d_;
};

// ---------------------------------------------------------------- builders

/// F^n with pointwise products in the basis of coordinate indicators.
Algebra pointwise_algebra(const FieldDescriptor& field, std::size_t n,
                          std::vector<std::string> names = {});
/// F[x]/(f) in the basis 1, x, ..., x^{d-1}; f is made monic.
Algebra monogenic_algebra(const Polynomial& f, const std::string& variable = "x");
Algebra direct_sum(const Algebra& a, const Algebra& b);
/// The same algebra in the basis given by the columns of `p` (old
/// coordinates). Throws DimensionMismatch if p is singular.
Algebra change_basis(const Algebra& a, const Matrix& p);

// ---------------------------------------------------------------- ideals

/// An ideal, held as the subspace spanned by its elements.
class Ideal {
 public:
  /// Saturates the generators under multiplication by basis elements.
  static Ideal generated(const Algebra& a, const std::vector<AlgElement>& generators);
  /// Wraps a subspace already known to be an ideal.
  static Ideal from_subspace(std::vector<AlgElement> generators, Subspace space);

  const std::vector<AlgElement>& generators() const noexcept { return generators_; }
  const Subspace& subspace() const noexcept { return space_; }
  const std::vector<AlgElement>& basis() const noexcept { return space_.basis(); }
  std::size_t dim() const noexcept { return space_.dim(); }
  bool contains(const AlgElement& x) const { return space_.contains(x); }

 private:
  Ideal(std::vector<AlgElement> g, Subspace s) : generators_(std::move(g)), space_(std::move(s)) {}
  std::vector<AlgElement> generators_;
  Subspace space_;
};

/// Checks b_i x in I for every basis vector x of I.
bool is_ideal(const Algebra& a, const Subspace& s);

/// A/I on the complement basis of non-pivot coordinates, with the projection
/// A -> A/I as a matrix.
struct Quotient {
  Algebra algebra;
  Matrix projection;
  std::vector<std::size_t> complement;  // basis indices of A kept in A/I
};

/// Throws ImproperIdeal when 1 lies in the ideal.
Quotient quotient(const Algebra& a, const Ideal& ideal);

/// Which method certified the radical.
enum class RadicalMethod { TraceForm, Frobenius };

struct Radical {
  Ideal ideal;
  RadicalMethod method;
};

/// Jrad(A). Primary method: kernel of the trace form T(x, y) = tr(L_{xy}),
/// accepted only if every kernel vector is nilpotent and A/kernel has a
/// nondegenerate trace form. Over F_p a failed check falls back to the
/// kernel of a power of the Frobenius x -> x^p, which is F_p-linear and
/// exact. Elsewhere a failed check raises UnsupportedAlgebra.
Radical jacobson_radical_with_method(const Algebra& a);
Ideal jacobson_radical(const Algebra& a);
bool is_semisimple(const Algebra& a);

// ---------------------------------------------------------------- spectra

/// σ(a): distinct F-roots of the characteristic polynomial of L_a.
std::vector<Element> spectrum(const Algebra& a, const AlgElement& x);

/// σ(b - a) ⊆ U_k.
bool in_entourage(const Algebra& alg, const AlgElement& a, const AlgElement& b, int k);

/// max |λ| over σ(a); nullopt when σ(a) is empty.
std::optional<mpq_class> spectral_radius(const Algebra& alg, const AlgElement& a);

// ---------------------------------------------------------------- idempotents

/// Boolean operations on idempotents; each throws NotIdempotent.
AlgElement bool_and(const Algebra& a, const AlgElement& e, const AlgElement& f);
AlgElement bool_or(const Algebra& a, const AlgElement& e, const AlgElement& f);
AlgElement bool_not(const Algebra& a, const AlgElement& e);

struct WeightedIdempotent {
  Element coefficient;
  AlgElement idempotent;
};

/// Rewrites Σ λ_i e_i over the atoms of the Boolean algebra generated by the
/// e_i. Atoms are produced by splitting 1 along each e_i in input order
/// (e-part first); atoms that vanish or carry a zero coefficient are dropped.
std::vector<WeightedIdempotent> orthogonalize(const Algebra& a,
                                              const std::vector<WeightedIdempotent>& terms);

/// Atoms of the Boolean algebra generated by the given idempotents.
std::vector<AlgElement> boolean_atoms(const Algebra& a, const std::vector<AlgElement>& idempotents);

/// All 2^m sums of subsets of pairwise-orthogonal atoms, in subset-mask order.
std::vector<AlgElement> boolean_closure(const Algebra& a, const std::vector<AlgElement>& atoms);

}  // namespace gelfand

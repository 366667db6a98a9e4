#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gelfand/field.hpp"

namespace gelfand {

/// Univariate polynomial over a base field, coefficients stored low degree
/// first. Leading coefficients that are zero at working precision are trimmed.
class Polynomial {
 public:
  explicit Polynomial(FieldDescriptor field) : field_(field) {}
  Polynomial(FieldDescriptor field, std::vector<Element> coefficients);

  /// t - root
  static Polynomial linear(const Element& root);

  const FieldDescriptor& field() const noexcept { return field_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  const std::vector<Element>& coefficients() const noexcept { return coefficients_; }
  Element coefficient(std::size_t i) const;
  const Element& leading() const { return coefficients_.back(); }

  Element evaluate(const Element& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Element& c) const;

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// "t^2 - 1" style rendering.
  std::string to_string() const;

 private:
  void trim();

  FieldDescriptor field_;
  std::vector<Element> coefficients_;
};

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// f / gcd(f, f'), monic. Only meaningful in characteristic 0 or when f' != 0.
Polynomial squarefree_part(const Polynomial& f);

struct Root {
  Element value;
  int multiplicity = 1;
};

/// All roots of a nonzero polynomial lying in its base field, with
/// multiplicities, in canonical order.
///
///   Q:   integer-cleared squarefree part, integer roots of the monic
///        transform found mod a small good prime and Hensel-lifted past the
///        Cauchy bound, then verified exactly.
///   F_p: exhaustive evaluation (p <= 2^16), otherwise gcd with t^p - t
///        followed by Cantor-Zassenhaus splitting.
///   Q_p: roots mod p, refined digit by digit until the derivative is a unit,
///        then Newton-lifted to full precision. Roots that cannot be separated
///        within the precision raise HenselDegenerate.
std::vector<Root> roots_in_field(const Polynomial& f);

/// Distinct roots only.
std::vector<Element> distinct_roots(const Polynomial& f);

}  // namespace gelfand

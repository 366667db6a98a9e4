#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "gelfand/error.hpp"

namespace gelfand {

class Element;

enum class FieldKind { Rational, PrimeField, PAdic };

/// One of the three exact base fields: Q, F_p, or Q_p truncated to a fixed
/// number of significant p-adic digits.
class FieldDescriptor {
 public:
  FieldDescriptor() = default;  // Q

  static FieldDescriptor rational();
  static FieldDescriptor prime_field(std::uint64_t p);
  static FieldDescriptor p_adic(std::uint64_t p, int precision);

  FieldKind kind() const noexcept { return kind_; }
  /// 0 for Q.
  std::uint64_t prime() const noexcept { return prime_; }
  /// Significant digits carried by Q_p elements; 0 for the other fields.
  int precision() const noexcept { return precision_; }

  /// F_p and Q_p are complete for their group uniformity, Q is not.
  bool is_complete() const noexcept { return kind_ != FieldKind::Rational; }
  bool is_discrete() const noexcept { return kind_ == FieldKind::PrimeField; }
  /// Characteristic of the field (p for F_p, 0 otherwise).
  std::uint64_t characteristic() const noexcept {
    return kind_ == FieldKind::PrimeField ? prime_ : 0;
  }

  Element zero() const;
  Element one() const;
  Element from_integer(long value) const;
  Element from_integer(const mpz_class& value) const;
  Element from_rational(const mpq_class& value) const;

  /// "Q", "F_5", "Q_3(N=6)".
  std::string name() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  FieldDescriptor(FieldKind kind, std::uint64_t p, int precision)
      : kind_(kind), prime_(p), precision_(precision) {}

  FieldKind kind_ = FieldKind::Rational;
  std::uint64_t prime_ = 0;
  int precision_ = 0;
};

/// p^v * unit, with `unit` known modulo p^relative.
///
/// Zeros come in two flavours: the exact zero (valuation == kInfinite) and the
/// inexact zero O(p^valuation) that results when every known digit cancels.
/// Both compare equal to zero; dividing by an inexact zero or asking it for
/// more digits than it carries raises PrecisionExhausted.
struct PAdicValue {
  static constexpr long kInfinite = 1L << 62;

  long valuation = kInfinite;
  mpz_class unit = 0;
  int relative = 0;

  bool is_exact_zero() const noexcept { return valuation == kInfinite; }
  bool is_zero() const noexcept { return relative == 0; }
  /// Digits known below p^absolute_precision; kInfinite for the exact zero.
  long absolute_precision() const noexcept {
    return is_exact_zero() ? kInfinite : valuation + relative;
  }
};

/// An element of one of the supported fields. Immutable value type.
class Element {
 public:
  Element() : Element(FieldDescriptor::rational(), mpq_class(0)) {}

  const FieldDescriptor& field() const noexcept { return field_; }

  /// Zero at the working precision (includes p-adic inexact zeros).
  bool is_zero() const;
  bool is_one() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  /// Throws DivisionByZero, or PrecisionExhausted for a p-adic inexact zero.
  friend Element operator/(const Element& a, const Element& b);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  Element inverse() const;
  Element pow(unsigned exponent) const;

  /// Equality at working precision: a == b iff (a - b).is_zero().
  friend bool operator==(const Element& a, const Element& b);

  /// Deterministic total order used for canonical output. Zeros sort first.
  friend std::strong_ordering canonical_compare(const Element& a, const Element& b);

  // Raw access, valid only for the matching field kind.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  const PAdicValue& padic() const { return std::get<PAdicValue>(value_); }

  /// p-adic valuation; throws PrecisionExhausted on an inexact zero and
  /// returns PAdicValue::kInfinite on the exact zero. Q_p only.
  long valuation() const;

  std::string to_string() const;

  static Element from_padic(const FieldDescriptor& field, PAdicValue value);

 private:
  friend class FieldDescriptor;
  using Storage = std::variant<mpq_class, std::uint64_t, PAdicValue>;

  Element(FieldDescriptor field, Storage value)
      : field_(field), value_(std::move(value)) {}

  FieldDescriptor field_;
  Storage value_;
};

/// |x|: the usual absolute value on Q, p^{-v(x)} on Q_p, and the trivial
/// absolute value on F_p. Always a non-negative rational.
mpq_class abs_value(const Element& x);

/// Renders |x| for reports: "3/4" on Q, "3^-2" on Q_p, "1" on F_p.
std::string format_abs_value(const FieldDescriptor& field, const mpq_class& magnitude);

/// Membership in the k-th basic neighborhood of zero:
///   Q:   |x| < 2^{-k}
///   F_p: x == 0 (the field is discrete)
///   Q_p: v(x) >= k, i.e. x in p^k Z_p
/// k must be non-negative.
bool in_neighborhood(const Element& x, int k);

/// Computable witnesses for the refinement axioms of the neighborhood base.
/// Each returns an index j such that the stated inclusion holds for U_j.
namespace neighborhoods {

/// U_j ⊆ U_k ∩ U_l.
int intersection_witness(const FieldDescriptor& field, int k, int l);
/// U_j + U_j ⊆ U_k.
int sum_witness(const FieldDescriptor& field, int k);
/// U_j · U_j ⊆ U_k.
int product_witness(const FieldDescriptor& field, int k);
/// x · U_j ⊆ U_k.
int scale_witness(const Element& x, int k);
/// (1 + U_j)^{-1} ⊆ 1 + U_k.
int inverse_witness(const FieldDescriptor& field, int k);
/// x ∉ U_j for nonzero x (the base intersects to {0}).
int separation_witness(const Element& x);

}  // namespace neighborhoods

}  // namespace gelfand

#include "gelfand/field.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace gelfand {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::HenselDegenerate: return "HenselDegenerate";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::BadUnit: return "BadUnit";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorCode::UnsupportedAlgebra: return "UnsupportedAlgebra";
    case ErrorCode::ImproperIdeal: return "ImproperIdeal";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotGelfandUnsplit: return "NotGelfandUnsplit";
    case ErrorCode::NotGelfand: return "NotGelfand";
    case ErrorCode::NotMorphism: return "NotMorphism";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::ModulusViolated: return "ModulusViolated";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

mpz_class power_of(std::uint64_t p, long k) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(std::max(0L, k)));
  return result;
}

/// Strips factors of p from `value`, returning how many were removed.
long strip_prime(mpz_class& value, std::uint64_t p) {
  if (value == 0) return 0;
  mpz_class prime = static_cast<unsigned long>(p);
  return static_cast<long>(
      mpz_remove(value.get_mpz_t(), value.get_mpz_t(), prime.get_mpz_t()));
}

mpz_class mod_positive(const mpz_class& value, const mpz_class& modulus) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

std::uint64_t mod_inverse_u64(std::uint64_t a, std::uint64_t p) {
  // Fermat; p is prime and < 2^32 so products fit.
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

/// Builds s * p^v known modulo p^absolute as a canonical p-adic value.
PAdicValue normalize_padic(std::uint64_t p, int cap, long v, mpz_class s, long absolute) {
  PAdicValue out;
  long room = absolute - v;
  if (room <= 0) {
    out.valuation = absolute;
    return out;
  }
  s = mod_positive(s, power_of(p, room));
  if (s == 0) {
    out.valuation = absolute;
    return out;
  }
  long w = strip_prime(s, p);
  out.valuation = v + w;
  out.relative = static_cast<int>(std::min<long>(room - w, cap));
  out.unit = mod_positive(s, power_of(p, out.relative));
  return out;
}

PAdicValue padic_from_rational(std::uint64_t p, int precision, const mpq_class& q) {
  if (q == 0) return PAdicValue{};
  mpz_class num = q.get_num(), den = q.get_den();
  long v = strip_prime(num, p) - strip_prime(den, p);
  mpz_class modulus = power_of(p, precision);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  PAdicValue out;
  out.valuation = v;
  out.relative = precision;
  out.unit = mod_positive(num * inv, modulus);
  return out;
}

PAdicValue padic_add(std::uint64_t p, int cap, const PAdicValue& a, const PAdicValue& b) {
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  long absolute = std::min(a.absolute_precision(), b.absolute_precision());
  long v = std::min(a.valuation, b.valuation);
  long room = absolute - v;
  mpz_class s = 0;
  if (a.relative > 0 && a.valuation - v < room) s += a.unit * power_of(p, a.valuation - v);
  if (b.relative > 0 && b.valuation - v < room) s += b.unit * power_of(p, b.valuation - v);
  return normalize_padic(p, cap, v, s, absolute);
}

PAdicValue padic_negate(std::uint64_t p, const PAdicValue& a) {
  if (a.relative == 0) return a;
  PAdicValue out = a;
  out.unit = mod_positive(-a.unit, power_of(p, a.relative));
  return out;
}

PAdicValue padic_mul(std::uint64_t p, const PAdicValue& a, const PAdicValue& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return PAdicValue{};
  PAdicValue out;
  if (a.relative == 0 || b.relative == 0) {
    // O(p^a) * (p^v u) = O(p^{a+v}); precision is the sum of the leading terms.
    out.valuation = a.valuation + b.valuation;
    return out;
  }
  out.valuation = a.valuation + b.valuation;
  out.relative = std::min(a.relative, b.relative);
  out.unit = mod_positive(a.unit * b.unit, power_of(p, out.relative));
  return out;
}

PAdicValue padic_div(std::uint64_t p, const PAdicValue& a, const PAdicValue& b) {
  if (b.is_exact_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in Q_p");
  if (b.relative == 0) {
    throw Error(ErrorCode::PrecisionExhausted,
                "division by an inexact p-adic zero O(" + std::to_string(p) + "^" +
                    std::to_string(b.valuation) + ")");
  }
  if (a.is_exact_zero()) return PAdicValue{};
  PAdicValue out;
  if (a.relative == 0) {
    out.valuation = a.valuation - b.valuation;
    return out;
  }
  out.valuation = a.valuation - b.valuation;
  out.relative = std::min(a.relative, b.relative);
  mpz_class modulus = power_of(p, out.relative);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), b.unit.get_mpz_t(), modulus.get_mpz_t());
  out.unit = mod_positive(a.unit * inv, modulus);
  return out;
}

void require_same_field(const Element& a, const Element& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::InvalidField,
                "mixed fields: " + a.field().name() + " and " + b.field().name());
  }
}

}  // namespace

// ---------------------------------------------------------------- descriptor

FieldDescriptor FieldDescriptor::rational() { return FieldDescriptor(); }

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
  mpz_class z = static_cast<unsigned long>(p);
  if (p < 2 || p >= (1ULL << 32) || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw Error(ErrorCode::InvalidField, "F_p needs a prime p < 2^32, got " + std::to_string(p));
  }
  return FieldDescriptor(FieldKind::PrimeField, p, 0);
}

FieldDescriptor FieldDescriptor::p_adic(std::uint64_t p, int precision) {
  mpz_class z = static_cast<unsigned long>(p);
  if (p < 2 || p >= (1ULL << 32) || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw Error(ErrorCode::InvalidField, "Q_p needs a prime p < 2^32, got " + std::to_string(p));
  }
  if (precision < 1) {
    throw Error(ErrorCode::InvalidField, "Q_p precision must be >= 1");
  }
  return FieldDescriptor(FieldKind::PAdic, p, precision);
}

Element FieldDescriptor::zero() const { return from_integer(0L); }
Element FieldDescriptor::one() const { return from_integer(1L); }

Element FieldDescriptor::from_integer(long value) const {
  return from_rational(mpq_class(value));
}

Element FieldDescriptor::from_integer(const mpz_class& value) const {
  return from_rational(mpq_class(value));
}

Element FieldDescriptor::from_rational(const mpq_class& value) const {
  switch (kind_) {
    case FieldKind::Rational: {
      mpq_class canonical = value;
      canonical.canonicalize();
      return Element(*this, canonical);
    }
    case FieldKind::PrimeField: {
      mpz_class modulus = static_cast<unsigned long>(prime_);
      mpz_class den = mod_positive(value.get_den(), modulus);
      if (den == 0) {
        throw Error(ErrorCode::DivisionByZero,
                    "denominator divisible by p in F_" + std::to_string(prime_));
      }
      auto num = mod_positive(value.get_num(), modulus).get_ui();
      return Element(*this, static_cast<std::uint64_t>(num) *
                                mod_inverse_u64(den.get_ui(), prime_) % prime_);
    }
    case FieldKind::PAdic:
      return Element(*this, padic_from_rational(prime_, precision_, value));
  }
  return Element();
}

std::string FieldDescriptor::name() const {
  switch (kind_) {
    case FieldKind::Rational: return "Q";
    case FieldKind::PrimeField: return "F_" + std::to_string(prime_);
    case FieldKind::PAdic:
      return "Q_" + std::to_string(prime_) + "(N=" + std::to_string(precision_) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------- element

Element Element::from_padic(const FieldDescriptor& field, PAdicValue value) {
  if (field.kind() != FieldKind::PAdic) {
    throw Error(ErrorCode::InvalidField, "from_padic on " + field.name());
  }
  return Element(field, std::move(value));
}

bool Element::is_zero() const {
  switch (field_.kind()) {
    case FieldKind::Rational: return rational() == 0;
    case FieldKind::PrimeField: return residue() == 0;
    case FieldKind::PAdic: return padic().is_zero();
  }
  return false;
}

bool Element::is_one() const { return *this == field_.one(); }

Element Element::operator-() const {
  switch (field_.kind()) {
    case FieldKind::Rational: return Element(field_, mpq_class(-rational()));
    case FieldKind::PrimeField:
      return Element(field_, residue() == 0 ? 0 : field_.prime() - residue());
    case FieldKind::PAdic: return Element(field_, padic_negate(field_.prime(), padic()));
  }
  return *this;
}

Element operator+(const Element& a, const Element& b) {
  require_same_field(a, b);
  const auto& f = a.field_;
  switch (f.kind()) {
    case FieldKind::Rational: return Element(f, mpq_class(a.rational() + b.rational()));
    case FieldKind::PrimeField: return Element(f, (a.residue() + b.residue()) % f.prime());
    case FieldKind::PAdic:
      return Element(f, padic_add(f.prime(), f.precision(), a.padic(), b.padic()));
  }
  return a;
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  require_same_field(a, b);
  const auto& f = a.field_;
  switch (f.kind()) {
    case FieldKind::Rational: return Element(f, mpq_class(a.rational() * b.rational()));
    case FieldKind::PrimeField: return Element(f, a.residue() * b.residue() % f.prime());
    case FieldKind::PAdic: return Element(f, padic_mul(f.prime(), a.padic(), b.padic()));
  }
  return a;
}

Element operator/(const Element& a, const Element& b) {
  require_same_field(a, b);
  const auto& f = a.field_;
  switch (f.kind()) {
    case FieldKind::Rational:
      if (b.rational() == 0) throw Error(ErrorCode::DivisionByZero, "division by zero in Q");
      return Element(f, mpq_class(a.rational() / b.rational()));
    case FieldKind::PrimeField:
      if (b.residue() == 0) {
        throw Error(ErrorCode::DivisionByZero, "division by zero in " + f.name());
      }
      return Element(f, a.residue() * mod_inverse_u64(b.residue(), f.prime()) % f.prime());
    case FieldKind::PAdic: return Element(f, padic_div(f.prime(), a.padic(), b.padic()));
  }
  return a;
}

Element Element::inverse() const { return field_.one() / *this; }

Element Element::pow(unsigned exponent) const {
  Element result = field_.one(), base = *this;
  while (exponent) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

bool operator==(const Element& a, const Element& b) {
  if (!(a.field() == b.field())) return false;
  return (a - b).is_zero();
}

std::strong_ordering canonical_compare(const Element& a, const Element& b) {
  require_same_field(a, b);
  switch (a.field().kind()) {
    case FieldKind::Rational: {
      int c = cmp(a.rational(), b.rational());
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    case FieldKind::PrimeField: return a.residue() <=> b.residue();
    case FieldKind::PAdic: {
      const auto& x = a.padic();
      const auto& y = b.padic();
      if (x.is_zero() || y.is_zero()) return !x.is_zero() <=> !y.is_zero();
      if (x.valuation != y.valuation) return x.valuation <=> y.valuation;
      mpz_class modulus = power_of(a.field().prime(), std::min(x.relative, y.relative));
      int c = cmp(mod_positive(x.unit, modulus), mod_positive(y.unit, modulus));
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
  }
  return std::strong_ordering::equal;
}

long Element::valuation() const {
  if (field_.kind() != FieldKind::PAdic) {
    throw Error(ErrorCode::InvalidField, "valuation() on " + field_.name());
  }
  const auto& v = padic();
  if (v.is_exact_zero()) return PAdicValue::kInfinite;
  if (v.relative == 0) {
    throw Error(ErrorCode::PrecisionExhausted,
                "valuation of inexact zero O(" + std::to_string(field_.prime()) + "^" +
                    std::to_string(v.valuation) + ") is unknown");
  }
  return v.valuation;
}

std::string Element::to_string() const {
  switch (field_.kind()) {
    case FieldKind::Rational: return rational().get_str();
    case FieldKind::PrimeField: return std::to_string(residue());
    case FieldKind::PAdic: {
      const auto& v = padic();
      const std::string p = std::to_string(field_.prime());
      if (v.is_exact_zero()) return "0";
      if (v.relative == 0) return "O(" + p + "^" + std::to_string(v.valuation) + ")";
      std::ostringstream os;
      os << v.unit.get_str();
      if (v.valuation != 0) os << "*" << p << "^" << v.valuation;
      os << " + O(" << p << "^" << v.absolute_precision() << ")";
      return os.str();
    }
  }
  return "?";
}

// ---------------------------------------------------------------- absolute value

mpq_class abs_value(const Element& x) {
  switch (x.field().kind()) {
    case FieldKind::Rational: return abs(x.rational());
    case FieldKind::PrimeField: return x.is_zero() ? mpq_class(0) : mpq_class(1);
    case FieldKind::PAdic: {
      if (x.is_zero()) return 0;
      long v = x.padic().valuation;
      mpz_class pw = power_of(x.field().prime(), v < 0 ? -v : v);
      mpq_class out = v < 0 ? mpq_class(pw) : mpq_class(mpz_class(1), pw);
      out.canonicalize();
      return out;
    }
  }
  return 0;
}

std::string format_abs_value(const FieldDescriptor& field, const mpq_class& magnitude) {
  if (field.kind() != FieldKind::PAdic || magnitude == 0) return magnitude.get_str();
  // magnitude is p^{-v}
  mpz_class num = magnitude.get_num(), den = magnitude.get_den();
  long up = strip_prime(num, field.prime());
  long down = strip_prime(den, field.prime());
  return std::to_string(field.prime()) + "^" + std::to_string(up - down);
}

// ---------------------------------------------------------------- neighborhoods

bool in_neighborhood(const Element& x, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidField, "neighborhood index must be >= 0");
  switch (x.field().kind()) {
    case FieldKind::Rational: {
      // |x| < 2^{-k}  <=>  |num| * 2^k < den
      mpz_class lhs = abs(x.rational().get_num());
      lhs <<= static_cast<mp_bitcnt_t>(k);
      return lhs < x.rational().get_den();
    }
    case FieldKind::PrimeField: return x.is_zero();
    case FieldKind::PAdic: {
      const auto& v = x.padic();
      if (v.is_exact_zero()) return true;
      if (v.relative == 0) {
        if (v.valuation >= k) return true;
        throw Error(ErrorCode::PrecisionExhausted,
                    "O(" + std::to_string(x.field().prime()) + "^" + std::to_string(v.valuation) +
                        ") cannot decide membership in p^" + std::to_string(k) + "Z_p");
      }
      return v.valuation >= k;
    }
  }
  return false;
}

namespace neighborhoods {

int intersection_witness(const FieldDescriptor&, int k, int l) { return std::max(k, l); }

int sum_witness(const FieldDescriptor& field, int k) {
  // Q_p and F_p are ultrametric; on Q halve the radius.
  return field.kind() == FieldKind::Rational ? k + 1 : k;
}

int product_witness(const FieldDescriptor&, int k) { return k; }

int scale_witness(const Element& x, int k) {
  if (x.is_zero()) return 0;
  switch (x.field().kind()) {
    case FieldKind::Rational: {
      // smallest m >= 0 with |x| <= 2^m
      mpz_class num = abs(x.rational().get_num()), den = x.rational().get_den();
      int m = 0;
      while (num > (den << static_cast<mp_bitcnt_t>(m))) ++m;
      return k + m;
    }
    case FieldKind::PrimeField: return 0;
    case FieldKind::PAdic:
      return static_cast<int>(std::max<long>(0, k - x.valuation()));
  }
  return k;
}

int inverse_witness(const FieldDescriptor& field, int k) {
  switch (field.kind()) {
    case FieldKind::Rational: return k + 1;
    case FieldKind::PrimeField: return 0;
    case FieldKind::PAdic: return std::max(k, 1);
  }
  return k;
}

int separation_witness(const Element& x) {
  if (x.is_zero()) throw Error(ErrorCode::InvalidField, "zero lies in every neighborhood");
  switch (x.field().kind()) {
    case FieldKind::Rational: {
      // smallest j >= 0 with 2^{-j} <= |x|
      mpz_class num = abs(x.rational().get_num()), den = x.rational().get_den();
      int j = 0;
      while ((num << static_cast<mp_bitcnt_t>(j)) < den) ++j;
      return j;
    }
    case FieldKind::PrimeField: return 0;
    case FieldKind::PAdic:
      return static_cast<int>(std::max<long>(0, x.valuation() + 1));
  }
  return 0;
}

}  // namespace neighborhoods

}  // namespace gelfand

#include "gelfand/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gelfand {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(FieldDescriptor field, std::vector<Element> coefficients)
    : field_(field), coefficients_(std::move(coefficients)) {
  for (const auto& c : coefficients_) {
    if (!(c.field() == field_)) {
      throw Error(ErrorCode::InvalidField, "polynomial coefficient over " + c.field().name() +
                                               ", expected " + field_.name());
    }
  }
  trim();
}

Polynomial Polynomial::linear(const Element& root) {
  const auto& f = root.field();
  return Polynomial(f, {-root, f.one()});
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

Element Polynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : field_.zero();
}

Element Polynomial::evaluate(const Element& x) const {
  Element acc = field_.zero();
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Element> d;
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    d.push_back(coefficients_[i] * field_.from_integer(static_cast<long>(i)));
  }
  return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Polynomial Polynomial::scaled(const Element& c) const {
  std::vector<Element> out;
  out.reserve(coefficients_.size());
  for (const auto& a : coefficients_) out.push_back(a * c);
  return Polynomial(field_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::max(a.coefficients_.size(), b.coefficients_.size());
  std::vector<Element> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.coefficient(i) + b.coefficient(i));
  return Polynomial(a.field_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + b.scaled(-b.field_.one());
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<Element> out(a.coefficients_.size() + b.coefficients_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(a.field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (degree() < divisor.degree()) return {Polynomial(field_), *this};
  std::vector<Element> rem = coefficients_;
  std::vector<Element> quot(rem.size() - divisor.coefficients_.size() + 1, field_.zero());
  const Element lead_inv = divisor.leading().inverse();
  const std::size_t dd = divisor.coefficients_.size() - 1;
  for (std::size_t i = quot.size(); i-- > 0;) {
    Element c = rem[i + dd] * lead_inv;
    quot[i] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= c * divisor.coefficients_[j];
  }
  rem.resize(dd);
  return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

bool operator==(const Polynomial& a, const Polynomial& b) { return (a - b).is_zero(); }

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool simple = field_.kind() != FieldKind::PAdic;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const Element& c = coefficients_[i];
    if (c.is_zero()) continue;
    std::string s = c.to_string();
    bool negative = simple && field_.kind() == FieldKind::Rational && c.rational() < 0;
    if (negative) s = (-c).to_string();
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    const bool unit_coeff = simple && s == "1";
    if (i == 0 || !unit_coeff) os << (simple ? s : "(" + s + ")");
    if (i > 0) {
      if (!unit_coeff) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.degree() <= 0) return f.monic();
  Polynomial d = f.derivative();
  if (d.is_zero()) return f.monic();
  return f.divmod(gcd(f, d)).first.monic();
}

// ---------------------------------------------------------------- roots

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // low degree first, trimmed

void mp_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 mp_inv(u64 a, u64 p) {
  u64 r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 mp_eval(const ModPoly& a, u64 x, u64 p) {
  u64 acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

ModPoly mp_derivative(const ModPoly& a, u64 p) {
  ModPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
  mp_trim(d);
  return d;
}

ModPoly mp_sub(ModPoly a, const ModPoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  mp_trim(a);
  return a;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  mp_trim(out);
  return out;
}

std::pair<ModPoly, ModPoly> mp_divmod(ModPoly a, const ModPoly& b, u64 p) {
  if (a.size() < b.size()) return {{}, a};
  ModPoly q(a.size() - b.size() + 1, 0);
  u64 inv = mp_inv(b.back(), p);
  for (std::size_t i = q.size(); i-- > 0;) {
    u64 c = a[i + b.size() - 1] * inv % p;
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] = (a[i + j] + p - c * b[j] % p) % p;
  }
  a.resize(b.size() - 1);
  mp_trim(a);
  mp_trim(q);
  return {q, a};
}

ModPoly mp_gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    auto r = mp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = mp_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

ModPoly mp_powmod(ModPoly base, u64 e, const ModPoly& modulus, u64 p) {
  ModPoly result{1};
  base = mp_divmod(base, modulus, p).second;
  while (e) {
    if (e & 1) result = mp_divmod(mp_mul(result, base, p), modulus, p).second;
    base = mp_divmod(mp_mul(base, base, p), modulus, p).second;
    e >>= 1;
  }
  return result;
}

void cz_split(const ModPoly& g, u64 p, std::vector<u64>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back((p - g[0] * mp_inv(g[1], p) % p) % p);
    return;
  }
  for (u64 delta = 0;; ++delta) {
    ModPoly w = mp_powmod({delta % p, 1}, (p - 1) / 2, g, p);
    w = mp_sub(w, {1}, p);
    ModPoly d = mp_gcd(g, w, p);
    if (d.size() > 1 && d.size() < g.size()) {
      cz_split(d, p, out);
      cz_split(mp_divmod(g, d, p).first, p, out);
      return;
    }
  }
}

/// Distinct roots of a nonzero polynomial over F_p, ascending.
std::vector<u64> roots_mod_p(const ModPoly& f, u64 p) {
  std::vector<u64> roots;
  if (f.size() <= 1) return roots;
  if (p <= (1U << 16)) {
    for (u64 x = 0; x < p; ++x) {
      if (mp_eval(f, x, p) == 0) roots.push_back(x);
    }
    return roots;
  }
  // gcd(f, t^p - t) collects the distinct linear factors.
  ModPoly tp = mp_powmod({0, 1}, p, f, p);
  ModPoly g = mp_gcd(f, mp_sub(tp, {0, 1}, p), p);
  cz_split(g, p, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Element> prime_field_roots(const Polynomial& f) {
  const u64 p = f.field().prime();
  ModPoly g;
  for (const auto& c : f.coefficients()) g.push_back(c.residue());
  std::vector<Element> out;
  for (u64 r : roots_mod_p(g, p)) out.push_back(f.field().from_integer(static_cast<long>(r)));
  return out;
}

// ---- Q

mpz_class mpz_eval(const std::vector<mpz_class>& g, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class mpz_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  ::mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::vector<Element> rational_roots(const Polynomial& f) {
  const auto field = f.field();
  Polynomial s = squarefree_part(f);
  std::vector<Element> out;

  mpz_class lcm_den = 1;
  for (const auto& c : s.coefficients()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den().get_mpz_t());
  }
  std::vector<mpz_class> ints;
  for (const auto& c : s.coefficients()) {
    mpq_class scaled = c.rational() * lcm_den;
    ints.push_back(scaled.get_num());
  }
  if (ints.size() >= 2 && ints[0] == 0) {
    out.push_back(field.zero());
    ints.erase(ints.begin());  // squarefree: t divides at most once
  }
  const std::size_t d = ints.size() - 1;
  if (d == 0) return out;

  // g(t) = lc^{d-1} s(t / lc) is monic with integer coefficients; rational
  // roots of s are z / lc for integer roots z of g.
  const mpz_class lc = ints.back();
  std::vector<mpz_class> g(d + 1);
  mpz_class bound = 0;
  for (std::size_t i = 0; i < d; ++i) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(d - 1 - i));
    g[i] = ints[i] * power;
    if (abs(g[i]) > bound) bound = abs(g[i]);
  }
  g[d] = 1;
  bound += 1;  // Cauchy bound on |z|

  for (u64 p = 3; p < (1U << 16); p += 2) {
    mpz_class pz = static_cast<unsigned long>(p);
    if (mpz_probab_prime_p(pz.get_mpz_t(), 25) == 0) continue;
    ModPoly gp;
    for (const auto& c : g) gp.push_back(mpz_mod(c, pz).get_ui());
    mp_trim(gp);
    if (mp_gcd(gp, mp_derivative(gp, p), p).size() != 1) continue;  // not squarefree mod p

    std::vector<mpz_class> dg;
    for (std::size_t i = 1; i <= d; ++i) dg.push_back(g[i] * static_cast<unsigned long>(i));

    for (u64 r : roots_mod_p(gp, p)) {
      mpz_class z = static_cast<unsigned long>(r);
      mpz_class modulus = pz;
      while (modulus <= 2 * bound) {
        modulus *= modulus;
        mpz_class deriv = mpz_mod(mpz_eval(dg, z), modulus), inv;
        mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), modulus.get_mpz_t());
        z = mpz_mod(z - mpz_eval(g, z) * inv, modulus);
      }
      if (2 * z > modulus) z -= modulus;
      if (mpz_eval(g, z) == 0) out.push_back(field.from_rational(mpq_class(z, lc)));
    }
    return out;
  }
  throw Error(ErrorCode::UnsupportedAlgebra, "no good prime below 2^16 for rational roots");
}

// ---- Q_p

Element padic_power(const FieldDescriptor& field, long k) {
  PAdicValue v;
  v.valuation = k;
  v.unit = 1;
  v.relative = field.precision();
  return Element::from_padic(field, v);
}

[[noreturn]] void degenerate(const FieldDescriptor& field, const std::string& why) {
  throw Error(ErrorCode::HenselDegenerate,
              "cannot separate roots in " + field.name() + ": " + why);
}

u64 residue_of(const Element& c) {
  const auto& v = c.padic();
  const u64 p = c.field().prime();
  if (v.is_exact_zero()) return 0;
  if (v.relative == 0) {
    if (v.valuation >= 1) return 0;
    degenerate(c.field(), "coefficient " + c.to_string() + " has no known digit");
  }
  if (v.valuation > 0) return 0;
  mpz_class r;
  ::mpz_mod_ui(r.get_mpz_t(), v.unit.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

/// Divides out the smallest coefficient valuation so the polynomial lies in
/// Z_p[t] with at least one unit coefficient.
std::vector<Element> remove_content(const std::vector<Element>& h) {
  const auto& field = h.front().field();
  long smallest = PAdicValue::kInfinite;
  for (const auto& c : h) {
    if (!c.is_zero()) smallest = std::min(smallest, c.padic().valuation);
  }
  if (smallest == PAdicValue::kInfinite) degenerate(field, "polynomial vanishes at precision");
  if (smallest == 0) return h;
  Element shift = padic_power(field, -smallest);
  std::vector<Element> out;
  for (const auto& c : h) out.push_back(c * shift);
  return out;
}

/// Coefficients of h(r + p t).
std::vector<Element> shift_and_scale(std::vector<Element> h, const Element& r) {
  const auto& field = r.field();
  const std::size_t n = h.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) h[j] += r * h[j + 1];
  }
  Element p = field.from_integer(static_cast<long>(field.prime()));
  Element scale = field.one();
  for (std::size_t i = 0; i < n; ++i) {
    h[i] *= scale;
    scale *= p;
  }
  return h;
}

Element newton_lift(const Polynomial& h, u64 residue) {
  const auto& field = h.field();
  Polynomial dh = h.derivative();
  Element x = field.from_integer(static_cast<long>(residue));
  int steps = 2;
  for (int n = field.precision(); n > 1; n = (n + 1) / 2) ++steps;
  for (int i = 0; i < steps; ++i) {
    Element fx = h.evaluate(x);
    if (fx.is_zero()) break;
    x = x - fx / dh.evaluate(x);
  }
  // With h'(x) a unit, the root is known exactly as far as the coefficients.
  long known = PAdicValue::kInfinite;
  for (const auto& c : h.coefficients()) known = std::min(known, c.padic().absolute_precision());
  if (known < PAdicValue::kInfinite) {
    PAdicValue fuzz;
    fuzz.valuation = known;
    x = x + Element::from_padic(field, fuzz);
  }
  return x;
}

/// A point of the disk base + p^depth Z_p, carrying only the digits below
/// p^depth. The exact base is kept when it is the exact zero.
Element cluster_centre(const Element& base, int depth) {
  if (base.padic().is_exact_zero()) return base;
  PAdicValue fuzz;
  fuzz.valuation = depth;
  fuzz.relative = 0;
  return base + Element::from_padic(base.field(), fuzz);
}

/// Roots of the original polynomial of the form base + scale * t, t a root of
/// h in Z_p. A residue disk that is still unresolved once `scale` reaches the
/// working precision holds a cluster of roots equal at that precision; its
/// centre is reported as a single (repeated) root.
void explore_padic(std::vector<Element> h, const Element& base, const Element& scale, int depth,
                   bool residue_zero_only, std::vector<Element>& out) {
  const auto& field = base.field();
  const u64 p = field.prime();
  if (depth > 0) {
    bool vanishes = true;
    for (const auto& c : h) vanishes = vanishes && c.is_zero();
    if (vanishes || depth >= field.precision()) {
      if (!residue_zero_only) out.push_back(cluster_centre(base, depth));
      return;
    }
  }
  h = remove_content(h);
  if (depth > 0) {
    for (const auto& c : h) {
      if (c.padic().relative == 0 && c.padic().valuation < 1) {
        if (!residue_zero_only) out.push_back(cluster_centre(base, depth));
        return;
      }
    }
  }
  ModPoly bar;
  for (const auto& c : h) bar.push_back(residue_of(c));
  mp_trim(bar);
  if (bar.size() <= 1) return;
  ModPoly dbar = mp_derivative(bar, p);
  Polynomial hp(field, h);
  for (u64 r : roots_mod_p(bar, p)) {
    if (residue_zero_only && r != 0) continue;
    if (mp_eval(dbar, r, p) != 0) {
      out.push_back(base + scale * newton_lift(hp, r));
      continue;
    }
    Element rr = field.from_integer(static_cast<long>(r));
    explore_padic(shift_and_scale(h, rr), base + scale * rr,
                  scale * field.from_integer(static_cast<long>(p)), depth + 1, false, out);
  }
}

std::vector<Element> padic_roots(const Polynomial& f) {
  // No squarefree reduction here: a gcd of inexact polynomials can report a
  // spurious common factor when two roots are close. Repeated roots surface
  // as clusters in the residue-disk search instead.
  const auto& field = f.field();
  std::vector<Element> out;
  explore_padic(f.coefficients(), field.zero(), field.one(), 0, false, out);
  // Roots of negative valuation are inverses of the positive-valuation roots
  // of the reversed polynomial.
  std::vector<Element> reversed(f.coefficients().rbegin(), f.coefficients().rend());
  std::vector<Element> small;
  explore_padic(reversed, field.zero(), field.one(), 0, true, small);
  for (const auto& t : small) {
    if (!t.is_zero() && t.valuation() > 0) out.push_back(t.inverse());
  }
  return out;
}

int multiplicity(const Polynomial& f, const Element& root) {
  int count = 0;
  Polynomial q = f;
  const Polynomial lin = Polynomial::linear(root);
  while (q.degree() >= 1) {
    auto [quot, rem] = q.divmod(lin);
    if (!rem.is_zero()) break;
    ++count;
    q = std::move(quot);
  }
  return std::max(count, 1);
}

}  // namespace

std::vector<Root> roots_in_field(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "roots of the zero polynomial");
  std::vector<Element> distinct;
  if (f.degree() >= 1) {
    switch (f.field().kind()) {
      case FieldKind::Rational: distinct = rational_roots(f); break;
      case FieldKind::PrimeField: distinct = prime_field_roots(f); break;
      case FieldKind::PAdic: distinct = padic_roots(f); break;
    }
  }
  std::sort(distinct.begin(), distinct.end(), [](const Element& a, const Element& b) {
    return canonical_compare(a, b) < 0;
  });
  std::vector<Root> out;
  for (auto& r : distinct) {
    int m = multiplicity(f, r);
    out.push_back(Root{std::move(r), m});
  }
  return out;
}

std::vector<Element> distinct_roots(const Polynomial& f) {
  std::vector<Element> out;
  for (auto& r : roots_in_field(f)) out.push_back(std::move(r.value));
  return out;
}

}  // namespace gelfand

#include "gelfand/algebra.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace gelfand {

namespace {

/// Validates structure constants computed from another algebra. Over Q_p a
/// failure there means the digits ran out, not that the input was invalid.
Algebra validate_derived(const AlgebraData& raw, const std::string& what) {
  try {
    return Algebra::validate(raw);
  } catch (const Error& e) {
    if (raw.field.kind() != FieldKind::PAdic) throw;
    throw Error(ErrorCode::PrecisionExhausted, "precision exhausted computing " + what + ": " + e.what());
  }
}

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
}

void check_field(const FieldDescriptor& field, const Vector& v, const char* what) {
  for (const auto& x : v) {
    if (!(x.field() == field)) {
      throw Error(ErrorCode::InvalidField, std::string(what) + " has an entry over " +
                                               x.field().name() + ", expected " + field.name());
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- Algebra

Algebra Algebra::validate(const AlgebraData& raw) {
  const std::size_t n = raw.basis_names.size();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "an algebra needs at least one basis element");
  if (n > kMaxAlgebraDimension) {
    throw Error(ErrorCode::DimensionCapExceeded,
                "dimension " + std::to_string(n) + " exceeds the cap of " +
                    std::to_string(kMaxAlgebraDimension));
  }
  if (raw.unit.size() != n) throw Error(ErrorCode::DimensionMismatch, "unit has wrong length");
  check_field(raw.field, raw.unit, "unit");

  auto d = std::make_shared<Data>();
  d->field = raw.field;
  d->n = n;
  d->names = raw.basis_names;
  d->unit = raw.unit;
  d->table.assign(n * n, zero_vector(raw.field, n));
  std::vector<bool> given(n * n, false);
  for (const auto& [key, coords] : raw.products) {
    const auto [i, j] = key;
    if (i >= n || j >= n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "product index (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    }
    if (coords.size() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "product (" + std::to_string(i) + ", " + std::to_string(j) + ") has wrong length");
    }
    check_field(raw.field, coords, "product");
    d->table[i * n + j] = coords;
    given[i * n + j] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto& ij = d->table[i * n + j];
      auto& ji = d->table[j * n + i];
      if (given[i * n + j] && given[j * n + i]) {
        if (!equal(ij, ji)) {
          throw Error(ErrorCode::NotCommutative,
                      "b_" + std::to_string(i) + " b_" + std::to_string(j) + " != b_" +
                          std::to_string(j) + " b_" + std::to_string(i) + " at (" +
                          std::to_string(i) + ", " + std::to_string(j) + ")");
        }
      } else if (given[i * n + j]) {
        ji = ij;
      } else {
        ij = ji;
      }
    }
  }

  Algebra alg(d);
  for (std::size_t i = 0; i < n; ++i) {
    if (!equal(alg.mul(alg.unit(), alg.basis(i)), alg.basis(i))) {
      throw Error(ErrorCode::BadUnit, "1 b_" + std::to_string(i) + " != b_" + std::to_string(i) +
                                          " at index " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& bij = alg.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const auto left = alg.mul(bij, alg.basis(k));
        const auto right = alg.mul(alg.basis(i), alg.product(j, k));
        if (!equal(left, right)) {
          throw Error(ErrorCode::NotAssociative,
                      "(b_i b_j) b_k != b_i (b_j b_k) at " + triple(i, j, k));
        }
      }
    }
  }
  return alg;
}

AlgebraData Algebra::data() const {
  AlgebraData out;
  out.field = d_->field;
  out.basis_names = d_->names;
  out.unit = d_->unit;
  for (std::size_t i = 0; i < d_->n; ++i) {
    for (std::size_t j = i; j < d_->n; ++j) {
      if (!is_zero(product(i, j))) out.products.emplace(std::make_pair(i, j), product(i, j));
    }
  }
  return out;
}

void Algebra::check_size(const AlgElement& a) const {
  if (a.size() != d_->n) {
    throw Error(ErrorCode::DimensionMismatch, "element has " + std::to_string(a.size()) +
                                                  " coordinates, algebra has dimension " +
                                                  std::to_string(d_->n));
  }
}

AlgElement Algebra::zero() const { return zero_vector(d_->field, d_->n); }
AlgElement Algebra::basis(std::size_t i) const { return unit_vector(d_->field, d_->n, i); }
AlgElement Algebra::scalar(const Element& c) const { return gelfand::scale(c, d_->unit); }

AlgElement Algebra::mul(const AlgElement& a, const AlgElement& b) const {
  check_size(a);
  check_size(b);
  const std::size_t n = d_->n;
  AlgElement out = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const auto& c = product(i, j);
      const Element w = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!c[k].is_zero()) out[k] += w * c[k];
      }
    }
  }
  return out;
}

AlgElement Algebra::pow(const AlgElement& a, unsigned exponent) const {
  AlgElement result = unit();
  AlgElement base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

Matrix Algebra::regular_matrix(const AlgElement& a) const {
  check_size(a);
  std::vector<Vector> columns;
  columns.reserve(d_->n);
  for (std::size_t j = 0; j < d_->n; ++j) columns.push_back(mul(a, basis(j)));
  return Matrix::from_columns(d_->field, d_->n, columns);
}

std::optional<AlgElement> Algebra::invert(const AlgElement& a) const {
  auto y = solve(regular_matrix(a), unit());
  if (!y) return std::nullopt;
  // Guards against digits lost during elimination over Q_p.
  if (!equal(mul(a, *y), unit())) return std::nullopt;
  return y;
}

Element Algebra::trace(const AlgElement& a) const {
  check_size(a);
  Element t = d_->field.zero();
  for (std::size_t i = 0; i < d_->n; ++i) {
    if (a[i].is_zero()) continue;
    Element ti = d_->field.zero();
    for (std::size_t j = 0; j < d_->n; ++j) ti += product(i, j)[j];
    t += a[i] * ti;
  }
  return t;
}

Polynomial Algebra::minimal_polynomial(const AlgElement& a) const {
  check_size(a);
  std::vector<Vector> powers{unit()};
  for (std::size_t d = 1; d <= d_->n; ++d) {
    Vector next = mul(powers.back(), a);
    auto c = solve(Matrix::from_columns(d_->field, d_->n, powers), next);
    if (c) {
      std::vector<Element> coeffs;
      for (const auto& x : *c) coeffs.push_back(-x);
      coeffs.push_back(d_->field.one());
      return Polynomial(d_->field, coeffs);
    }
    powers.push_back(std::move(next));
  }
  throw Error(ErrorCode::DimensionMismatch, "no minimal polynomial of degree <= dim");
}

Polynomial Algebra::characteristic_polynomial(const AlgElement& a) const {
  return gelfand::characteristic_polynomial(regular_matrix(a));
}

bool Algebra::is_idempotent(const AlgElement& e) const { return equal(mul(e, e), e); }

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.d_ == b.d_) return true;
  if (!(a.field() == b.field()) || a.dim() != b.dim() || a.basis_names() != b.basis_names()) {
    return false;
  }
  if (!equal(a.unit(), b.unit())) return false;
  for (std::size_t i = 0; i < a.d_->table.size(); ++i) {
    if (!equal(a.d_->table[i], b.d_->table[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------- builders

Algebra pointwise_algebra(const FieldDescriptor& field, std::size_t n,
                          std::vector<std::string> names) {
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  }
  if (names.size() != n) throw Error(ErrorCode::DimensionMismatch, "wrong number of basis names");
  AlgebraData raw;
  raw.field = field;
  raw.basis_names = std::move(names);
  raw.unit = Vector(n, field.one());
  for (std::size_t i = 0; i < n; ++i) raw.products.emplace(std::make_pair(i, i), unit_vector(field, n, i));
  return Algebra::validate(raw);
}

Algebra monogenic_algebra(const Polynomial& f, const std::string& variable) {
  if (f.degree() < 1) throw Error(ErrorCode::DimensionMismatch, "modulus must have degree >= 1");
  const auto& field = f.field();
  const Polynomial g = f.monic();
  const auto d = static_cast<std::size_t>(g.degree());
  AlgebraData raw;
  raw.field = field;
  for (std::size_t i = 0; i < d; ++i) {
    raw.basis_names.push_back(i == 0 ? "1" : i == 1 ? variable : variable + "^" + std::to_string(i));
  }
  raw.unit = unit_vector(field, d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      std::vector<Element> mono(i + j + 1, field.zero());
      mono.back() = field.one();
      auto [q, r] = Polynomial(field, mono).divmod(g);
      Vector coords = zero_vector(field, d);
      for (std::size_t k = 0; k < r.coefficients().size(); ++k) coords[k] = r.coefficients()[k];
      raw.products.emplace(std::make_pair(i, j), coords);
    }
  }
  return Algebra::validate(raw);
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::InvalidField, "direct sum over different fields");
  const std::size_t n = a.dim(), m = b.dim();
  const auto& field = a.field();
  AlgebraData raw;
  raw.field = field;
  std::set<std::string> seen(a.basis_names().begin(), a.basis_names().end());
  raw.basis_names = a.basis_names();
  for (auto name : b.basis_names()) {
    while (seen.count(name)) name += "'";
    seen.insert(name);
    raw.basis_names.push_back(name);
  }
  raw.unit = a.unit();
  raw.unit.insert(raw.unit.end(), b.unit().begin(), b.unit().end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vector v = a.product(i, j);
      v.resize(n + m, field.zero());
      raw.products.emplace(std::make_pair(i, j), v);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      Vector v = zero_vector(field, n);
      const auto& p = b.product(i, j);
      v.insert(v.end(), p.begin(), p.end());
      raw.products.emplace(std::make_pair(n + i, n + j), v);
    }
  }
  return Algebra::validate(raw);
}

Algebra change_basis(const Algebra& a, const Matrix& p) {
  const std::size_t n = a.dim();
  if (p.rows() != n || p.cols() != n) throw Error(ErrorCode::DimensionMismatch, "basis change size");
  auto pinv = inverse(p);
  if (!pinv) throw Error(ErrorCode::DimensionMismatch, "basis change matrix is singular");
  AlgebraData raw;
  raw.field = a.field();
  for (std::size_t i = 0; i < n; ++i) raw.basis_names.push_back("v" + std::to_string(i));
  raw.unit = pinv->apply(a.unit());
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(p.column(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      raw.products.emplace(std::make_pair(i, j), pinv->apply(a.mul(cols[i], cols[j])));
    }
  }
  return validate_derived(raw, "a change of basis");
}

// ---------------------------------------------------------------- ideals

Ideal Ideal::generated(const Algebra& a, const std::vector<AlgElement>& generators) {
  Subspace s = Subspace::span(a.field(), a.dim(), generators);
  for (;;) {
    std::vector<Vector> more;
    for (const auto& x : s.basis()) {
      for (std::size_t i = 0; i < a.dim(); ++i) {
        Vector y = a.mul(a.basis(i), x);
        if (!s.contains(y)) more.push_back(std::move(y));
      }
    }
    if (more.empty()) break;
    s = s.joined(more);
  }
  return Ideal(generators, std::move(s));
}

Ideal Ideal::from_subspace(std::vector<AlgElement> generators, Subspace space) {
  return Ideal(std::move(generators), std::move(space));
}

bool is_ideal(const Algebra& a, const Subspace& s) {
  for (const auto& x : s.basis()) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!s.contains(a.mul(a.basis(i), x))) return false;
    }
  }
  return true;
}

Quotient quotient(const Algebra& a, const Ideal& ideal) {
  if (ideal.contains(a.unit())) throw Error(ErrorCode::ImproperIdeal, "the ideal contains 1");
  const auto& field = a.field();
  const Subspace& s = ideal.subspace();
  std::vector<bool> pivot(a.dim(), false);
  for (auto c : s.pivots()) pivot[c] = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!pivot[i]) keep.push_back(i);
  }
  const std::size_t m = keep.size();
  auto project = [&](const Vector& v) {
    Vector r = s.reduce(v);
    Vector out;
    out.reserve(m);
    for (auto i : keep) out.push_back(r[i]);
    return out;
  };
  Matrix proj(field, m, a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Vector col = project(a.basis(j));
    for (std::size_t i = 0; i < m; ++i) proj(i, j) = col[i];
  }
  AlgebraData raw;
  raw.field = field;
  for (auto i : keep) raw.basis_names.push_back(a.basis_names()[i]);
  raw.unit = project(a.unit());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      raw.products.emplace(std::make_pair(i, j), project(a.product(keep[i], keep[j])));
    }
  }
  return Quotient{validate_derived(raw, "a quotient"), std::move(proj), std::move(keep)};
}

// ---------------------------------------------------------------- radical

namespace {

Matrix trace_form(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Element> t;
  for (std::size_t k = 0; k < n; ++k) t.push_back(a.trace(a.basis(k)));
  Matrix form(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Element v = a.field().zero();
      const auto& c = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!c[k].is_zero()) v += c[k] * t[k];
      }
      form(i, j) = v;
      form(j, i) = v;
    }
  }
  return form;
}

bool trace_form_candidate_valid(const Algebra& a, const std::vector<Vector>& kernel_basis) {
  const auto n = static_cast<unsigned>(a.dim());
  for (const auto& x : kernel_basis) {
    if (!is_zero(a.pow(x, n))) return false;
  }
  if (kernel_basis.size() == a.dim()) return false;  // nilpotent 1 is impossible
  // In characteristic 0 the kernel of the trace form is the radical.
  if (a.field().characteristic() == 0) return true;
  Ideal k = Ideal::from_subspace(kernel_basis, Subspace::span(a.field(), a.dim(), kernel_basis));
  Quotient q = quotient(a, k);
  return rank(trace_form(q.algebra)) == q.algebra.dim();
}

/// ker Φ^m for the F_p-linear Frobenius Φ(x) = x^p, with p^m >= dim.
std::vector<Vector> frobenius_nilradical(const Algebra& a) {
  const auto p = static_cast<unsigned>(a.field().prime());
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < a.dim(); ++i) cols.push_back(a.pow(a.basis(i), p));
  const Matrix phi = Matrix::from_columns(a.field(), a.dim(), cols);
  Matrix power = phi;
  for (std::uint64_t reach = p; reach < a.dim(); reach *= p) power = power * phi;
  return kernel(power);
}

}  // namespace

Radical jacobson_radical_with_method(const Algebra& a) {
  auto ker = kernel(trace_form(a));
  if (trace_form_candidate_valid(a, ker)) {
    return Radical{Ideal::from_subspace(ker, Subspace::span(a.field(), a.dim(), ker)),
                   RadicalMethod::TraceForm};
  }
  if (a.field().kind() == FieldKind::PrimeField) {
    auto nil = frobenius_nilradical(a);
    return Radical{Ideal::from_subspace(nil, Subspace::span(a.field(), a.dim(), nil)),
                   RadicalMethod::Frobenius};
  }
  if (a.field().kind() == FieldKind::PAdic) {
    // in characteristic 0 the trace form always certifies, given enough digits
    throw Error(ErrorCode::PrecisionExhausted, "trace form radical not certified at " + a.field().name());
  }
  throw Error(ErrorCode::UnsupportedAlgebra,
              "trace form does not certify the radical over " + a.field().name() +
                  " (characteristic " + std::to_string(a.field().characteristic()) + ", dimension " +
                  std::to_string(a.dim()) + ")");
}

Ideal jacobson_radical(const Algebra& a) { return jacobson_radical_with_method(a).ideal; }

bool is_semisimple(const Algebra& a) { return jacobson_radical(a).dim() == 0; }

// ---------------------------------------------------------------- spectra

std::vector<Element> spectrum(const Algebra& a, const AlgElement& x) {
  return distinct_roots(a.characteristic_polynomial(x));
}

bool in_entourage(const Algebra& alg, const AlgElement& a, const AlgElement& b, int k) {
  for (const auto& lambda : spectrum(alg, subtract(b, a))) {
    if (!in_neighborhood(lambda, k)) return false;
  }
  return true;
}

std::optional<mpq_class> spectral_radius(const Algebra& alg, const AlgElement& a) {
  std::optional<mpq_class> best;
  for (const auto& lambda : spectrum(alg, a)) {
    mpq_class v = abs_value(lambda);
    if (!best || v > *best) best = v;
  }
  return best;
}

// ---------------------------------------------------------------- idempotents

namespace {

void require_idempotent(const Algebra& a, const AlgElement& e) {
  if (!a.is_idempotent(e)) throw Error(ErrorCode::NotIdempotent, "element is not idempotent");
}

struct Atom {
  AlgElement element;
  std::vector<bool> under;  // which inputs dominate this atom
};

std::vector<Atom> refine(const Algebra& a, const std::vector<AlgElement>& idempotents) {
  std::vector<Atom> atoms{Atom{a.unit(), {}}};
  for (const auto& e : idempotents) {
    require_idempotent(a, e);
    const AlgElement not_e = subtract(a.unit(), e);
    std::vector<Atom> next;
    for (auto& atom : atoms) {
      AlgElement inside = a.mul(atom.element, e);
      AlgElement outside = a.mul(atom.element, not_e);
      if (!is_zero(inside)) {
        auto under = atom.under;
        under.push_back(true);
        next.push_back(Atom{std::move(inside), std::move(under)});
      }
      if (!is_zero(outside)) {
        auto under = atom.under;
        under.push_back(false);
        next.push_back(Atom{std::move(outside), std::move(under)});
      }
    }
    atoms = std::move(next);
  }
  if (a.field().kind() == FieldKind::PAdic) {
    // Atoms dropped as zero at working precision must not be missed by the
    // inputs they came from, and the survivors must still be orthogonal.
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      for (std::size_t j = i + 1; j < atoms.size(); ++j) {
        if (!is_zero(a.mul(atoms[i].element, atoms[j].element))) {
          throw Error(ErrorCode::PrecisionExhausted, "atoms are not orthogonal at " + a.field().name());
        }
      }
    }
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
      AlgElement sum = a.zero();
      for (const auto& atom : atoms) {
        if (atom.under[i]) sum = add(sum, atom.element);
      }
      if (!equal(sum, idempotents[i])) {
        throw Error(ErrorCode::PrecisionExhausted, "atoms of idempotent " + std::to_string(i) +
                                                       " do not sum back to it at " + a.field().name());
      }
    }
  }
  return atoms;
}

}  // namespace

AlgElement bool_and(const Algebra& a, const AlgElement& e, const AlgElement& f) {
  require_idempotent(a, e);
  require_idempotent(a, f);
  return a.mul(e, f);
}

AlgElement bool_or(const Algebra& a, const AlgElement& e, const AlgElement& f) {
  require_idempotent(a, e);
  require_idempotent(a, f);
  return subtract(add(e, f), a.mul(e, f));
}

AlgElement bool_not(const Algebra& a, const AlgElement& e) {
  require_idempotent(a, e);
  return subtract(a.unit(), e);
}

std::vector<WeightedIdempotent> orthogonalize(const Algebra& a,
                                              const std::vector<WeightedIdempotent>& terms) {
  std::vector<AlgElement> idempotents;
  for (const auto& t : terms) idempotents.push_back(t.idempotent);
  std::vector<WeightedIdempotent> out;
  for (auto& atom : refine(a, idempotents)) {
    Element c = a.field().zero();
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (atom.under[i]) c += terms[i].coefficient;
    }
    if (!c.is_zero()) out.push_back(WeightedIdempotent{std::move(c), std::move(atom.element)});
  }
  return out;
}

std::vector<AlgElement> boolean_atoms(const Algebra& a, const std::vector<AlgElement>& idempotents) {
  std::vector<AlgElement> out;
  for (auto& atom : refine(a, idempotents)) out.push_back(std::move(atom.element));
  return out;
}

std::vector<AlgElement> boolean_closure(const Algebra& a, const std::vector<AlgElement>& atoms) {
  if (atoms.size() > 20) throw Error(ErrorCode::DimensionCapExceeded, "too many atoms to enumerate");
  std::vector<AlgElement> out;
  const std::size_t total = std::size_t{1} << atoms.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    AlgElement e = a.zero();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (mask >> i & 1U) e = add(e, atoms[i]);
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace gelfand

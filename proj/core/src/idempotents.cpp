#include "gelfand/idempotents.hpp"

#include <bit>

namespace gelfand {

namespace {

[[noreturn]] void lifting_failed(const Algebra& a, const std::string& what) {
  throw Error(a.field().kind() == FieldKind::PAdic ? ErrorCode::PrecisionExhausted : ErrorCode::NotIdempotent, what);
}

/// Newton iteration for idempotents; converges because e^2 - e is nilpotent.
AlgElement lift_idempotent(const Algebra& a, AlgElement e, int& steps) {
  const int bound = std::bit_width(a.dim()) + 1;
  const Element two = a.field().from_integer(2), three = a.field().from_integer(3);
  for (int i = 0; i <= bound; ++i) {
    const AlgElement sq = a.mul(e, e);
    if (equal(sq, e)) {
      steps = std::max(steps, i);
      return e;
    }
    e = subtract(scale(three, sq), scale(two, a.mul(sq, e)));
  }
  lifting_failed(a, "idempotent lifting did not converge");
}

}  // namespace

IdempotentSet primitive_idempotents(const Algebra& a, bool with_closure, std::size_t budget) {
  auto chars = enumerate_characters(a, budget).characters;
  const std::size_t radical = jacobson_radical(a).dim();
  if (chars.size() != a.dim() - radical) {
    throw Error(ErrorCode::NotGelfandUnsplit,
                "A/Jrad has dimension " + std::to_string(a.dim() - radical) + " but only " +
                    std::to_string(chars.size()) + " characters; a simple factor is larger than F");
  }
  const auto& field = a.field();
  std::vector<Vector> rows;
  for (const auto& c : chars) rows.push_back(c.values);
  const Matrix ev = Matrix::from_rows(field, a.dim(), rows);

  IdempotentSet out;
  for (std::size_t k = 0; k < chars.size(); ++k) {
    auto e0 = solve(ev, unit_vector(field, chars.size(), k));
    if (!e0) throw Error(ErrorCode::NotGelfandUnsplit, "characters are not independent");
    out.atoms.push_back(lift_idempotent(a, *e0, out.newton_steps));
  }
  // Lifts are unique in a commutative ring, so the lifted family is again
  // orthogonal and sums to 1; checked rather than assumed.
  AlgElement total = a.zero();
  for (std::size_t i = 0; i < out.atoms.size(); ++i) {
    total = add(total, out.atoms[i]);
    for (std::size_t j = i + 1; j < out.atoms.size(); ++j) {
      if (!is_zero(a.mul(out.atoms[i], out.atoms[j]))) {
        lifting_failed(a, "lifted idempotents are not orthogonal");
      }
    }
  }
  if (!out.atoms.empty() && !equal(total, a.unit())) {
    lifting_failed(a, "lifted idempotents do not sum to 1");
  }
  out.characters = std::move(chars);
  if (with_closure) out.all = boolean_closure(a, out.atoms);
  return out;
}

Subspace span_of_idempotents(const Algebra& a, std::size_t budget) {
  auto set = primitive_idempotents(a, false, budget);
  return Subspace::span(a.field(), a.dim(), set.atoms);
}

bool spans_all(const Algebra& a, std::size_t budget) {
  return enumerate_characters(a, budget).characters.size() == a.dim();
}

std::vector<SeparatingIdempotent> separating_idempotents(const Algebra& a, std::size_t budget) {
  auto set = primitive_idempotents(a, false, budget);
  std::vector<SeparatingIdempotent> out;
  for (std::size_t i = 0; i < set.atoms.size(); ++i) {
    for (std::size_t j = 0; j < set.atoms.size(); ++j) {
      if (i != j) out.push_back(SeparatingIdempotent{i, j, set.atoms[i]});
    }
  }
  return out;
}

}  // namespace gelfand

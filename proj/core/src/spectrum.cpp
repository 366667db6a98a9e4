#include "gelfand/spectrum.hpp"

#include <algorithm>
#include <bit>

namespace gelfand {

Element evaluate(const Character& chi, const AlgElement& a) {
  if (a.size() != chi.values.size()) throw Error(ErrorCode::DimensionMismatch, "evaluate: size");
  Element v = chi.values.empty() ? Element() : chi.values.front().field().zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) v += a[i] * chi.values[i];
  }
  return v;
}

Ideal character_kernel(const Algebra& a, const Character& chi) {
  Matrix row = Matrix::from_rows(a.field(), a.dim(), {chi.values});
  auto basis = kernel(row);
  return Ideal::from_subspace(basis, Subspace::span(a.field(), a.dim(), basis));
}

bool is_character(const Algebra& a, const Vector& values) {
  if (values.size() != a.dim()) return false;
  Character chi{values};
  if (!(evaluate(chi, a.unit()) == a.field().one())) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      if (!(evaluate(chi, a.product(i, j)) == values[i] * values[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- search

namespace {

struct Relation {
  std::size_t i, j;  // product relation χ(b_i b_j) = χ(b_i) χ(b_j); i == n marks the unit
};

class CharacterDfs {
 public:
  CharacterDfs(const Algebra& a, std::size_t budget) : a_(a), budget_(budget) {
    const std::size_t n = a.dim();
    candidates_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      candidates_[i] = distinct_roots(a.minimal_polynomial(a.basis(i)));
    }
    // Each relation is checked at the first depth where all its coordinates
    // are assigned.
    ready_.resize(n);
    auto last_support = [&](const Vector& v) {
      std::size_t last = 0;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_zero()) last = k;
      }
      return last;
    };
    ready_[last_support(a.unit())].push_back(Relation{n, n});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        std::size_t at = std::max({i, j, last_support(a.product(i, j))});
        ready_[at].push_back(Relation{i, j});
      }
    }
    values_.assign(n, a.field().zero());
  }

  CharacterSearch run() {
    for (const auto& c : candidates_) {
      if (c.empty()) return std::move(result_);
    }
    descend(0);
    return std::move(result_);
  }

 private:
  bool consistent(std::size_t depth) const {
    const std::size_t n = a_.dim();
    for (const auto& r : ready_[depth]) {
      if (r.i == n) {
        if (!(dot(a_.unit()) == a_.field().one())) return false;
      } else if (!(dot(a_.product(r.i, r.j)) == values_[r.i] * values_[r.j])) {
        return false;
      }
    }
    return true;
  }

  Element dot(const Vector& v) const {
    Element s = a_.field().zero();
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k].is_zero()) s += v[k] * values_[k];
    }
    return s;
  }

  void descend(std::size_t depth) {
    if (depth == a_.dim()) {
      result_.characters.push_back(Character{values_});
      return;
    }
    for (const auto& lambda : candidates_[depth]) {
      if (++result_.nodes_visited > budget_) {
        throw Error(ErrorCode::SearchBudgetExceeded,
                    "character search visited " + std::to_string(result_.nodes_visited) +
                        " nodes, budget " + std::to_string(budget_));
      }
      values_[depth] = lambda;
      if (consistent(depth)) descend(depth + 1);
    }
    values_[depth] = a_.field().zero();
  }

  const Algebra& a_;
  std::size_t budget_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<std::vector<Relation>> ready_;
  Vector values_;
  CharacterSearch result_;
};

}  // namespace

CharacterSearch enumerate_characters(const Algebra& a, std::size_t budget) {
  if (a.field().kind() != FieldKind::PAdic) return CharacterDfs(a, budget).run();
  // Over Q_p a nilpotent part gives minimal polynomials repeated roots, which
  // cost digits. Characters kill the radical, so search A/Jrad instead.
  const Ideal radical = jacobson_radical(a);
  if (radical.dim() == 0) return CharacterDfs(a, budget).run();
  const Quotient q = quotient(a, radical);
  CharacterSearch reduced = CharacterDfs(q.algebra, budget).run();
  CharacterSearch out;
  out.nodes_visited = reduced.nodes_visited;
  for (const auto& chi : reduced.characters) {
    Vector values;
    for (std::size_t i = 0; i < a.dim(); ++i) values.push_back(evaluate(chi, q.projection.column(i)));
    out.characters.push_back(Character{std::move(values)});
  }
  std::sort(out.characters.begin(), out.characters.end(), [](const Character& x, const Character& y) {
    for (std::size_t i = 0; i < x.values.size(); ++i) {
      const auto c = canonical_compare(x.values[i], y.values[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  return out;
}

// ---------------------------------------------------------------- topologies

PointSet full_set(std::size_t points) {
  if (points > 64) throw Error(ErrorCode::DimensionCapExceeded, "more than 64 points");
  return points == 64 ? ~PointSet{0} : (PointSet{1} << points) - 1;
}

FiniteTopology FiniteTopology::discrete(std::size_t points) {
  std::vector<PointSet> c;
  for (std::size_t i = 0; i < points; ++i) c.push_back(PointSet{1} << i);
  return FiniteTopology(std::move(c));
}

FiniteTopology FiniteTopology::indiscrete(std::size_t points) {
  return FiniteTopology(std::vector<PointSet>(points, full_set(points)));
}

FiniteTopology FiniteTopology::from_closed_sets(std::size_t points,
                                                const std::vector<PointSet>& family) {
  // cl{x} is the intersection of the generating closed sets containing x.
  std::vector<PointSet> c(points, full_set(points));
  for (std::size_t x = 0; x < points; ++x) {
    for (PointSet s : family) {
      if (s >> x & 1U) c[x] &= s;
    }
  }
  return FiniteTopology(std::move(c));
}

FiniteTopology FiniteTopology::from_closures(std::vector<PointSet> closures) {
  return FiniteTopology(std::move(closures));
}

PointSet FiniteTopology::closure(PointSet s) const {
  PointSet out = 0;
  for (std::size_t x = 0; x < size(); ++x) {
    if (s >> x & 1U) out |= closures_[x];
  }
  return out;
}

bool FiniteTopology::is_closed(PointSet s) const { return closure(s) == s; }

bool FiniteTopology::is_open(PointSet s) const { return is_closed(full_set(size()) & ~s); }

std::vector<PointSet> FiniteTopology::closed_sets() const {
  if (size() > 20) throw Error(ErrorCode::DimensionCapExceeded, "too many points to list closed sets");
  std::vector<PointSet> out;
  for (PointSet s = 0; s <= full_set(size()); ++s) {
    if (is_closed(s)) out.push_back(s);
    if (s == full_set(size())) break;
  }
  return out;
}

bool FiniteTopology::is_discrete() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (closures_[x] != (PointSet{1} << x)) return false;
  }
  return true;
}

bool FiniteTopology::is_coarser_than(const FiniteTopology& finer) const {
  if (size() != finer.size()) return false;
  for (std::size_t x = 0; x < size(); ++x) {
    if ((finer.closures_[x] & ~closures_[x]) != 0) return false;
  }
  return true;
}

PointSet basic_open(const std::vector<Character>& chars, const AlgElement& a) {
  PointSet s = 0;
  for (std::size_t x = 0; x < chars.size(); ++x) {
    if (!evaluate(chars[x], a).is_zero()) s |= PointSet{1} << x;
  }
  return s;
}

PointSet vanishing_set(const std::vector<Character>& chars, const std::vector<AlgElement>& ideal_basis) {
  PointSet s = 0;
  for (std::size_t x = 0; x < chars.size(); ++x) {
    bool vanishes = true;
    for (const auto& v : ideal_basis) vanishes = vanishes && evaluate(chars[x], v).is_zero();
    if (vanishes) s |= PointSet{1} << x;
  }
  return s;
}

FiniteTopology zariski_topology(const Algebra& a, const std::vector<Character>& chars) {
  std::vector<PointSet> closures;
  for (const auto& chi : chars) closures.push_back(vanishing_set(chars, character_kernel(a, chi).basis()));
  return FiniteTopology::from_closures(std::move(closures));
}

FiniteTopology gelfand_topology(const Algebra& a, const std::vector<Character>& chars) {
  const std::size_t m = chars.size();
  std::vector<PointSet> closures(m, 0);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      // y ∈ cl{x} iff every basic open set around y contains x.
      bool separated = false;
      for (std::size_t i = 0; i < a.dim() && !separated; ++i) {
        const Element diff = chars[y].values[i] - chars[x].values[i];
        if (diff.is_zero()) continue;
        const int k = neighborhoods::separation_witness(diff);
        separated = !in_neighborhood(diff, k);
      }
      if (!separated) closures[x] |= PointSet{1} << y;
    }
  }
  return FiniteTopology::from_closures(std::move(closures));
}

MaxSpec max_spec(const Algebra& a, std::size_t budget) {
  auto chars = enumerate_characters(a, budget).characters;
  auto z = zariski_topology(a, chars);
  auto g = gelfand_topology(a, chars);
  return MaxSpec{std::move(chars), std::move(z), std::move(g)};
}

TopologyComparison compare_topologies(const Algebra& a, const std::vector<Character>& chars) {
  TopologyComparison out;
  const auto zariski = zariski_topology(a, chars);
  const auto gelfand = gelfand_topology(a, chars);
  out.zariski_coarser = zariski.is_coarser_than(gelfand);
  bool all = true;
  for (std::size_t m = 0; m < chars.size(); ++m) {
    // Largest τ_G-closed set not containing m.
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t y = 0; y < chars.size(); ++y) {
      const bool in_c = y != m && !(gelfand.closure_of_point(y) >> m & 1U);
      if (y == m || in_c) {
        rows.push_back(chars[y].values);
        rhs.push_back(y == m ? a.field().one() : a.field().zero());
      }
    }
    auto w = solve(Matrix::from_rows(a.field(), a.dim(), rows), rhs);
    all = all && w.has_value();
    out.witnesses.push_back(std::move(w));
  }
  out.coincide = out.zariski_coarser && all;
  return out;
}

// ---------------------------------------------------------------- properties

GelfandCheck check_gelfand(const Algebra& a, std::size_t budget) {
  GelfandCheck out;
  out.characters = enumerate_characters(a, budget).characters.size();
  out.radical_dim = jacobson_radical(a).dim();
  out.quotient_dim = a.dim() - out.radical_dim;
  out.holds = out.characters == out.quotient_dim;
  out.reason = std::to_string(out.characters) + " characters, dim A/Jrad = " +
               std::to_string(out.quotient_dim);
  return out;
}

PmCheck check_pm(const Algebra&) { return PmCheck{true, "Artinian: Spec = Max"}; }

PropertyReport property_report(const Algebra& a, std::size_t budget) {
  PropertyReport r;
  auto chars = enumerate_characters(a, budget).characters;
  r.characters = chars.size();
  try {
    auto rad = jacobson_radical(a);
    r.semisimple = rad.dim() == 0;
    r.gelfand = chars.size() == a.dim() - rad.dim();
    r.justifications.push_back("gelfand: " + std::to_string(chars.size()) +
                               " characters, dim A/Jrad = " + std::to_string(a.dim() - rad.dim()));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedAlgebra) throw;
    r.justifications.push_back(std::string("semisimple: unsupported: ") + e.what());
  }
  r.spectra_compact = true;
  r.justifications.push_back(
      "spectra_compact: every spectrum is a finite root set; the infinite-product closedness "
      "argument is not exercised at finite dimension");
  auto pm = check_pm(a);
  r.pm = pm.holds;
  r.justifications.push_back("pm: " + pm.justification);
  auto z = zariski_topology(a, chars);
  r.zariski_hausdorff = z.is_hausdorff();
  r.topologies_coincide = compare_topologies(a, chars).coincide;
  return r;
}

}  // namespace gelfand

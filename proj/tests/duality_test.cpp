#include <gtest/gtest.h>

#include <set>

#include "corpus.hpp"
#include "gelfand/duality.hpp"
#include "oracles.hpp"

using namespace gelfand;

namespace {

const auto Q = FieldDescriptor::rational();
const auto F2 = FieldDescriptor::prime_field(2);
const auto F3 = FieldDescriptor::prime_field(3);
const auto F5 = FieldDescriptor::prime_field(5);

Polynomial poly(const FieldDescriptor& f, std::initializer_list<long> low_first) {
  std::vector<Element> c;
  for (long v : low_first) c.push_back(f.from_integer(v));
  return Polynomial(f, c);
}

Vector ints(const FieldDescriptor& f, std::initializer_list<long> v) {
  Vector out;
  for (long x : v) out.push_back(f.from_integer(x));
  return out;
}

bool contains_all(const std::vector<Element>& outer, const std::vector<Element>& inner) {
  for (const auto& x : inner) {
    if (std::find(outer.begin(), outer.end(), x) == outer.end()) return false;
  }
  return true;
}

/// Every map {0..n-1} -> {0..m-1}, as assignment vectors.
std::vector<std::vector<std::size_t>> all_maps(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> a(n, 0);
  for (;;) {
    out.push_back(a);
    std::size_t i = 0;
    while (i < n && ++a[i] == m) a[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST(Spaces, LabelsAreUnique) {
  EXPECT_THROW(FiniteSpace({"a", "b", "a"}), Error);
  try {
    FiniteSpace({"a", "b", "a"});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SchemaError);
    EXPECT_NE(std::string(e.what()).find("\"a\""), std::string::npos);
  }
  FiniteSpace x({"p", "q"});
  EXPECT_EQ(x.index_of("q"), 1u);
  EXPECT_FALSE(x.index_of("r").has_value());
  EXPECT_THROW(SpaceMap(x, x, {0}), Error);
  EXPECT_THROW(SpaceMap(x, x, {0, 2}), Error);
}

TEST(Functors, ConOnSpaceExamples) {
  Algebra one = C_on_space(FiniteSpace({"*"}), Q);
  EXPECT_EQ(one.dim(), 1u);
  EXPECT_TRUE(equal(one.unit(), ints(Q, {1})));

  Algebra two = C_on_space(FiniteSpace::numbered(2), F3);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_TRUE(equal(two.product(i, j), i == j ? unit_vector(F3, 2, i) : zero_vector(F3, 2)));
    }
  }

  Algebra three = C_on_space(FiniteSpace::numbered(3), Q);
  EXPECT_TRUE(spans_all(three));
  EXPECT_TRUE(is_semisimple(three));
  EXPECT_TRUE(check_gelfand(three).holds);
}

TEST(Functors, ConOnMapExamples) {
  FiniteSpace x({"a", "b"});
  EXPECT_TRUE(C_on_map(SpaceMap::identity(x), F5).matrix().is_identity());

  // constant map onto y0
  FiniteSpace y({"y0", "y1", "y2"});
  auto c = C_on_map(SpaceMap(x, y, {0, 0}), F5);
  EXPECT_TRUE(equal(c(unit_vector(F5, 3, 0)), ints(F5, {1, 1})));
  EXPECT_TRUE(is_zero(c(unit_vector(F5, 3, 1))));
  EXPECT_TRUE(is_zero(c(unit_vector(F5, 3, 2))));

  FiniteSpace cd({"c", "d"});
  auto f = C_on_map(SpaceMap(x, cd, {0, 0}), Q);
  EXPECT_TRUE(equal(f(unit_vector(Q, 2, 0)), ints(Q, {1, 1})));
  EXPECT_TRUE(equal(f(unit_vector(Q, 2, 1)), ints(Q, {0, 0})));
}

TEST(Functors, ConOnMapIsContravariant) {
  corpus::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 4);
    FiniteSpace x = FiniteSpace::numbered(size(rng), "x");
    FiniteSpace y = FiniteSpace::numbered(size(rng), "y");
    FiniteSpace z = FiniteSpace::numbered(size(rng), "z");
    auto random_map = [&](const FiniteSpace& s, const FiniteSpace& t) {
      std::uniform_int_distribution<std::size_t> pick(0, t.size() - 1);
      std::vector<std::size_t> a(s.size());
      for (auto& v : a) v = pick(rng);
      return SpaceMap(s, t, a);
    };
    SpaceMap f = random_map(x, y);
    SpaceMap g = random_map(y, z);
    auto lhs = C_on_map(compose(g, f), F3);
    auto rhs = compose(C_on_map(f, F3), C_on_map(g, F3));
    EXPECT_EQ(lhs.matrix(), rhs.matrix());
  }
}

TEST(Functors, MorphismValidation) {
  Algebra a = pointwise_algebra(Q, 2);
  Matrix not_unital = Matrix::from_rows(Q, 2, {ints(Q, {1, 0}), ints(Q, {0, 0})});
  try {
    AlgebraMorphism(a, a, not_unital);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotMorphism);
  }
  // unital but not multiplicative: e0 -> (1/2, 1/2)
  const Element half = Q.from_rational(mpq_class(1, 2));
  Matrix swap_half = Matrix::from_rows(Q, 2, {Vector{half, half}, Vector{half, half}});
  try {
    AlgebraMorphism(a, a, swap_half);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotMorphism);
    EXPECT_NE(std::string(e.what()).find("(0, 0)"), std::string::npos);
  }
  EXPECT_THROW(AlgebraMorphism(a, pointwise_algebra(Q, 3), Matrix::identity(Q, 2)), Error);
}

TEST(Functors, MOnMorphismExamples) {
  Algebra a = pointwise_algebra(F5, 3);
  auto id = M_on_morphism(AlgebraMorphism::identity(a));
  EXPECT_EQ(id.assignment, (std::vector<std::size_t>{0, 1, 2}));

  // diagonal embedding F -> F^2
  Algebra f = pointwise_algebra(F5, 1);
  Matrix ones = Matrix::from_rows(F5, 1, {ints(F5, {1}), ints(F5, {1})});
  auto diag = M_on_morphism(AlgebraMorphism(f, pointwise_algebra(F5, 2), ones));
  EXPECT_EQ(diag.assignment, (std::vector<std::size_t>{0, 0}));

  // M(f*) recovers f: χ_a ∘ f* = χ_c
  FiniteSpace x({"a", "b"});
  FiniteSpace cd({"c", "d"});
  SpaceMap map(x, cd, {0, 0});
  auto m = M_on_morphism(C_on_map(map, F5));
  auto gx = gelfand_transform(x, F5);
  auto gy = gelfand_transform(cd, F5);
  for (std::size_t p = 0; p < 2; ++p) EXPECT_EQ(m.assignment[gx.assignment[p]], gy.assignment[map(p)]);
}

TEST(Functors, MOnMorphismRejectsNonGelfand) {
  Algebra bad = monogenic_algebra(poly(F5, {-2, 0, 1}));
  try {
    M_on_morphism(AlgebraMorphism::identity(bad));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotGelfand);
  }
}

TEST(Functors, MIsFunctorial) {
  corpus::Rng rng(5);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    auto phi = corpus::random_gelfand_morphism(F3, rng);
    auto psi = corpus::random_gelfand_morphism(F3, rng);
    if (!(psi.source() == phi.target())) {
      // chain through a second morphism out of phi's target instead
      auto chars = enumerate_characters(phi.target()).characters;
      psi = AlgebraMorphism(phi.target(), pointwise_algebra(F3, 1),
                            Matrix::from_rows(F3, phi.target().dim(), {chars.front().values}));
    }
    auto whole = M_on_morphism(compose(psi, phi));
    auto m_phi = M_on_morphism(phi);
    auto m_psi = M_on_morphism(psi);
    for (std::size_t k = 0; k < whole.assignment.size(); ++k) {
      EXPECT_EQ(whole.assignment[k], m_phi.assignment[m_psi.assignment[k]]);
    }
    ++checked;
  }
  EXPECT_EQ(checked, 40);
}

TEST(Transform, Examples) {
  auto single = gelfand_transform(FiniteSpace({"*"}), Q);
  EXPECT_EQ(single.characters.size(), 1u);
  EXPECT_TRUE(single.bijective);

  auto three = gelfand_transform(FiniteSpace::numbered(3), F2);
  EXPECT_EQ(three.characters.size(), 3u);
  EXPECT_TRUE(three.bijective);
  EXPECT_TRUE(three.homeomorphism);
  std::set<std::size_t> image(three.assignment.begin(), three.assignment.end());
  EXPECT_EQ(image.size(), 3u);
  // the three coordinate projections, matching the exhaustive oracle
  auto brute = oracle::brute_force_characters(three.algebra);
  EXPECT_EQ(brute.size(), 3u);
}

TEST(Transform, NaturalInRandomMaps) {
  corpus::Rng rng(17);
  for (const auto& field : {Q, F2, F5}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<std::size_t> size(1, 4);
      FiniteSpace x = FiniteSpace::numbered(size(rng), "x");
      FiniteSpace y = FiniteSpace::numbered(size(rng), "y");
      std::uniform_int_distribution<std::size_t> pick(0, y.size() - 1);
      std::vector<std::size_t> a(x.size());
      for (auto& v : a) v = pick(rng);
      EXPECT_TRUE(transform_is_natural(SpaceMap(x, y, a), field));
    }
  }
}

TEST(GelfandMap, Examples) {
  Algebra split = monogenic_algebra(poly(Q, {-1, 0, 1}));
  auto i = gelfand_map(split);
  EXPECT_TRUE(i.injective);
  EXPECT_TRUE(i.surjective);
  Vector image = i.morphism(split.basis(1));
  std::multiset<std::string> values;
  for (const auto& v : image) values.insert(v.to_string());
  EXPECT_EQ(values, (std::multiset<std::string>{"1", "-1"}));

  Algebra dual = monogenic_algebra(poly(Q, {0, 0, 1}));
  auto d = gelfand_map(dual);
  ASSERT_EQ(d.kernel.size(), 1u);
  EXPECT_TRUE(Subspace::span(Q, 2, d.kernel).contains(dual.basis(1)));
  EXPECT_TRUE(d.kernel_is_radical);
  EXPECT_FALSE(d.injective);
  EXPECT_TRUE(d.surjective);

  // F^n: a permutation matrix
  auto p = gelfand_map(pointwise_algebra(F5, 4));
  const Matrix& m = p.morphism.matrix();
  for (std::size_t r = 0; r < 4; ++r) {
    int ones = 0;
    for (std::size_t c = 0; c < 4; ++c) {
      EXPECT_TRUE(m(r, c).is_zero() || m(r, c).is_one());
      ones += m(r, c).is_one();
    }
    EXPECT_EQ(ones, 1);
  }

  EXPECT_THROW(gelfand_map(monogenic_algebra(poly(F5, {-2, 0, 1}))), Error);
}

TEST(GelfandMap, KernelIsRadicalOnCorpus) {
  corpus::Rng rng(23);
  for (const auto& field : {Q, F2, F3, F5}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 4);
      Algebra a = corpus::random_gelfand_algebra(field, dim(rng), rng);
      auto i = gelfand_map(a);
      EXPECT_TRUE(i.kernel_is_radical);
      EXPECT_EQ(i.injective, is_semisimple(a));
      EXPECT_TRUE(i.surjective);
    }
  }
}

TEST(Adjunction, TriangleExamples) {
  EXPECT_TRUE(triangle_identities(FiniteSpace::numbered(2), F3).holds());
  EXPECT_TRUE(triangle_identities(monogenic_algebra(poly(Q, {0, -1, 1}))).holds());
  EXPECT_TRUE(triangle_identities(FiniteSpace({"*"}), Q).holds());
}

TEST(Adjunction, TriangleTwoPointsExhaustive) {
  // Every element of C(X, F_3) for |X| = 2 is fixed by C(G_X) ∘ I.
  FiniteSpace x = FiniteSpace::numbered(2);
  auto g = gelfand_transform(x, F3);
  auto i = gelfand_map(g.algebra);
  auto cg = C_on_map(g.as_space_map(x), F3);
  oracle::FpTable table(g.algebra);
  for (std::uint64_t code = 0; code < table.size(); ++code) {
    auto digits = table.decode(code);
    Vector f;
    for (auto d : digits) f.push_back(F3.from_integer(static_cast<long>(d)));
    EXPECT_TRUE(equal(cg(i.morphism(f)), f));
  }
}

TEST(Adjunction, RoundTripsRecoverInputs) {
  for (const auto& field : {Q, F2, F5}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      FiniteSpace x = FiniteSpace::numbered(n);
      auto r = space_round_trip(x, field);
      EXPECT_TRUE(r.recovered);
      ASSERT_EQ(r.table.size(), n);
      std::set<std::size_t> image;
      for (const auto& [label, k] : r.table) image.insert(k);
      EXPECT_EQ(image.size(), n);
      EXPECT_TRUE(triangle_identities(x, field).holds());
    }
  }
  corpus::Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    Algebra a = corpus::scrambled_pointwise(F5, 1 + trial % 4, rng);
    auto r = algebra_round_trip(a);
    EXPECT_TRUE(r.recovered);
    ASSERT_TRUE(r.isomorphism.has_value());
    EXPECT_TRUE(r.isomorphism->is_injective());
    EXPECT_TRUE(r.isomorphism->is_surjective());
  }
  EXPECT_FALSE(algebra_round_trip(monogenic_algebra(poly(Q, {0, 0, 1}))).recovered);
  EXPECT_FALSE(algebra_round_trip(monogenic_algebra(poly(F5, {-2, 0, 1}))).recovered);
}

TEST(Adjunction, GelfandMapIsNatural) {
  corpus::Rng rng(31);
  for (const auto& field : {Q, F3}) {
    for (int trial = 0; trial < 30; ++trial) {
      EXPECT_TRUE(gelfand_map_is_natural(corpus::random_gelfand_morphism(field, rng)));
    }
  }
}

TEST(Adjunction, ConOnMapIsFullAndFaithful) {
  for (const auto& field : {F2, F3}) {
    for (std::size_t nx = 1; nx <= 3; ++nx) {
      for (std::size_t ny = 1; ny <= 3; ++ny) {
        FiniteSpace x = FiniteSpace::numbered(nx, "x");
        FiniteSpace y = FiniteSpace::numbered(ny, "y");
        std::set<std::vector<std::uint64_t>> images;
        for (const auto& a : all_maps(nx, ny)) {
          auto m = C_on_map(SpaceMap(x, y, a), field).matrix();
          std::vector<std::uint64_t> flat;
          for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) flat.push_back(m(r, c).is_one() ? 1 : 0);
          }
          images.insert(flat);
        }
        auto brute = oracle::brute_force_morphisms(C_on_space(y, field), C_on_space(x, field));
        std::set<std::vector<std::uint64_t>> all(brute.begin(), brute.end());
        EXPECT_EQ(images.size(), all_maps(nx, ny).size()) << "faithful " << nx << "," << ny;
        EXPECT_EQ(images, all) << "full " << nx << "," << ny;
      }
    }
  }
}

TEST(Adjunction, MorphismsShrinkSpectra) {
  corpus::Rng rng(37);
  for (const auto& field : {Q, F2, F3, F5}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto phi = corpus::random_gelfand_morphism(field, rng);
      const Algebra& a = phi.source();
      const Algebra& b = phi.target();
      for (int e = 0; e < 5; ++e) {
        AlgElement x = corpus::random_element(a, rng);
        AlgElement y = corpus::random_element(a, rng);
        EXPECT_TRUE(contains_all(spectrum(a, x), spectrum(b, phi(x))));
        for (int k = 0; k <= 3; ++k) {
          if (in_entourage(a, x, y, k)) EXPECT_TRUE(in_entourage(b, phi(x), phi(y), k));
        }
        auto ra = spectral_radius(a, x);
        auto rb = spectral_radius(b, phi(x));
        if (rb) {
          ASSERT_TRUE(ra.has_value());
          EXPECT_LE(*rb, *ra);
        }
      }
    }
  }
}

TEST(Adjunction, GelfandMapPreservesSpectralRadius) {
  corpus::Rng rng(41);
  for (const auto& field : {Q, F3}) {
    for (int trial = 0; trial < 20; ++trial) {
      Algebra a = corpus::random_gelfand_algebra(field, 1 + trial % 4, rng);
      if (!is_semisimple(a)) continue;
      auto i = gelfand_map(a);
      for (int e = 0; e < 5; ++e) {
        AlgElement x = corpus::random_element(a, rng);
        EXPECT_EQ(spectral_radius(a, x), spectral_radius(i.morphism.target(), i.morphism(x)));
      }
    }
  }
}

TEST(Characterize, Examples) {
  corpus::Rng rng(43);
  Algebra scrambled = corpus::scrambled_pointwise(F5, 2, rng);
  auto ok = characterize(scrambled);
  EXPECT_TRUE(ok.is_continuous_function_algebra);
  ASSERT_TRUE(ok.space.has_value());
  EXPECT_EQ(ok.space->size(), 2u);
  ASSERT_TRUE(ok.isomorphism.has_value());
  EXPECT_TRUE(ok.isomorphism->is_injective());
  EXPECT_TRUE(ok.isomorphism->is_surjective());
  EXPECT_TRUE(ok.failures.empty());

  auto not_gelfand = characterize(monogenic_algebra(poly(F5, {-2, 0, 1})));
  EXPECT_FALSE(not_gelfand.is_continuous_function_algebra);
  EXPECT_EQ(not_gelfand.failures,
            (std::vector<FailedCondition>{FailedCondition::NotGelfand, FailedCondition::IdempotentsDoNotSpan}));
  EXPECT_EQ(not_gelfand.justifications.front(), "gelfand: 0 characters, dim A/Jrad = 2");

  auto not_semisimple = characterize(monogenic_algebra(poly(Q, {0, 0, 1})));
  EXPECT_EQ(not_semisimple.failures, (std::vector<FailedCondition>{FailedCondition::NotSemisimple,
                                                                   FailedCondition::IdempotentsDoNotSpan}));
  EXPECT_FALSE(not_semisimple.completeness_asserted);
}

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "gelfand/algebra.hpp"
#include "oracles.hpp"

using namespace gelfand;

namespace {

Polynomial poly(const FieldDescriptor& f, std::initializer_list<long> low_first) {
  std::vector<Element> c;
  for (long v : low_first) c.push_back(f.from_integer(v));
  return Polynomial(f, c);
}

Vector vec(const FieldDescriptor& f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(f.from_integer(x));
  return v;
}

std::vector<std::string> strings(const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::IoError;
}

const auto Q = FieldDescriptor::rational();
const auto F2 = FieldDescriptor::prime_field(2);
const auto F5 = FieldDescriptor::prime_field(5);

}  // namespace

TEST(Validate, AcceptsQuadraticExtension) {
  AlgebraData raw;
  raw.field = Q;
  raw.basis_names = {"1", "x"};
  raw.unit = vec(Q, {1, 0});
  raw.products[{0, 0}] = vec(Q, {1, 0});
  raw.products[{0, 1}] = vec(Q, {0, 1});
  raw.products[{1, 1}] = vec(Q, {1, 0});
  Algebra a = Algebra::validate(raw);
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_EQ(a.mul(a.basis(1), a.basis(1)), vec(Q, {1, 0}));
  EXPECT_EQ(a, monogenic_algebra(poly(Q, {-1, 0, 1})));
}

TEST(Validate, RejectsNonAssociativeTable) {
  // x x = x with x (1) inconsistent: take y with x y = y, y y = x
  AlgebraData raw;
  raw.field = Q;
  raw.basis_names = {"1", "x", "y"};
  raw.unit = vec(Q, {1, 0, 0});
  raw.products[{0, 0}] = vec(Q, {1, 0, 0});
  raw.products[{0, 1}] = vec(Q, {0, 1, 0});
  raw.products[{0, 2}] = vec(Q, {0, 0, 1});
  raw.products[{1, 1}] = vec(Q, {0, 1, 0});
  raw.products[{1, 2}] = vec(Q, {0, 0, 0});
  raw.products[{2, 2}] = vec(Q, {0, 1, 0});
  try {
    Algebra::validate(raw);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAssociative);
    EXPECT_NE(std::string(e.what()).find("(1, 2, 2)"), std::string::npos) << e.what();
  }
}

TEST(Validate, RejectsAsymmetricAndBadUnit) {
  AlgebraData raw;
  raw.field = Q;
  raw.basis_names = {"1", "x"};
  raw.unit = vec(Q, {1, 0});
  raw.products[{0, 0}] = vec(Q, {1, 0});
  raw.products[{0, 1}] = vec(Q, {0, 1});
  raw.products[{1, 0}] = vec(Q, {1, 1});
  EXPECT_EQ(code_of([&] { Algebra::validate(raw); }), ErrorCode::NotCommutative);
  raw.products.erase({1, 0});
  raw.unit = vec(Q, {0, 1});
  EXPECT_EQ(code_of([&] { Algebra::validate(raw); }), ErrorCode::BadUnit);
}

TEST(Validate, DimensionCap) {
  EXPECT_NO_THROW(pointwise_algebra(F2, kMaxAlgebraDimension));
  EXPECT_EQ(code_of([] { pointwise_algebra(F2, kMaxAlgebraDimension + 1); }),
            ErrorCode::DimensionCapExceeded);
}

TEST(Validate, PointwiseOverF2) {
  Algebra a = pointwise_algebra(F2, 2);
  EXPECT_EQ(a.unit(), vec(F2, {1, 1}));
}

TEST(Multiplication, Examples) {
  Algebra a = monogenic_algebra(poly(Q, {-1, 0, 1}));
  Matrix lx = a.regular_matrix(a.basis(1));
  EXPECT_EQ(lx, Matrix::from_rows(Q, 2, {vec(Q, {0, 1}), vec(Q, {1, 0})}));
  Algebra b = pointwise_algebra(F5, 2);
  EXPECT_EQ(b.mul(vec(F5, {2, 3}), vec(F5, {3, 2})), vec(F5, {1, 1}));
}

TEST(Invert, Examples) {
  Algebra b = pointwise_algebra(F5, 2);
  EXPECT_EQ(*b.invert(b.unit()), b.unit());
  EXPECT_EQ(*b.invert(vec(F5, {2, 3})), vec(F5, {3, 2}));
  Algebra dual = monogenic_algebra(poly(Q, {0, 0, 1}));
  EXPECT_EQ(dual.regular_matrix(dual.basis(1)),
            Matrix::from_rows(Q, 2, {vec(Q, {0, 0}), vec(Q, {1, 0})}));
  EXPECT_FALSE(dual.invert(dual.basis(1)));
}

TEST(Spectrum, Examples) {
  Algebra a = monogenic_algebra(poly(Q, {-1, 0, 1}));
  EXPECT_EQ(strings(spectrum(a, a.basis(1))), (std::vector<std::string>{"-1", "1"}));
  EXPECT_EQ(strings(spectrum(a, a.scalar(Q.from_integer(7)))), (std::vector<std::string>{"7"}));
  Algebra idem = monogenic_algebra(poly(Q, {0, -1, 1}));
  EXPECT_EQ(strings(spectrum(idem, idem.basis(1))), (std::vector<std::string>{"0", "1"}));
  Algebra gaussian = monogenic_algebra(poly(Q, {1, 0, 1}));
  EXPECT_TRUE(spectrum(gaussian, gaussian.basis(1)).empty());
  EXPECT_FALSE(spectral_radius(gaussian, gaussian.basis(1)).has_value());
  EXPECT_EQ(*spectral_radius(a, a.basis(1)), 1);
}

TEST(Radical, Examples) {
  Algebra dual = monogenic_algebra(poly(Q, {0, 0, 1}));
  auto r = jacobson_radical_with_method(dual);
  EXPECT_EQ(r.ideal.dim(), 1u);
  EXPECT_TRUE(r.ideal.contains(dual.basis(1)));
  EXPECT_EQ(r.method, RadicalMethod::TraceForm);
  EXPECT_FALSE(is_semisimple(dual));
  EXPECT_TRUE(is_semisimple(pointwise_algebra(F5, 2)));
  EXPECT_TRUE(is_semisimple(monogenic_algebra(poly(Q, {-1, 0, 1}))));

  Algebra dual2 = monogenic_algebra(poly(F2, {0, 0, 1}));
  auto r2 = jacobson_radical_with_method(dual2);
  EXPECT_EQ(r2.method, RadicalMethod::Frobenius);
  EXPECT_EQ(r2.ideal.dim(), 1u);
  EXPECT_TRUE(r2.ideal.contains(dual2.basis(1)));
}

TEST(Radical, MatchesNilpotentCount) {
  corpus::Rng rng(21);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto f = FieldDescriptor::prime_field(p);
    for (int trial = 0; trial < 40; ++trial) {
      Algebra a = corpus::random_algebra(f, 1 + trial % 4, rng);
      auto r = jacobson_radical(a);
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < r.dim(); ++i) expected *= p;
      EXPECT_EQ(oracle::count_nilpotents(a), expected);
      EXPECT_TRUE(is_ideal(a, r.subspace()));
    }
  }
}

TEST(Quotient, Examples) {
  Algebra dual = monogenic_algebra(poly(Q, {0, 0, 1}));
  Quotient q = quotient(dual, jacobson_radical(dual));
  EXPECT_EQ(q.algebra.dim(), 1u);
  Quotient same = quotient(dual, Ideal::generated(dual, {}));
  EXPECT_EQ(same.algebra, dual);

  Algebra b = pointwise_algebra(F5, 2);
  Quotient r = quotient(b, Ideal::generated(b, {vec(F5, {1, 0})}));
  EXPECT_EQ(r.algebra.dim(), 1u);
  EXPECT_EQ(r.projection.apply(vec(F5, {3, 4})), vec(F5, {4}));
  EXPECT_THROW(quotient(b, Ideal::generated(b, {b.unit()})), Error);
}

TEST(Quotient, ProjectionIsUnitalMorphism) {
  corpus::Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    Algebra a = corpus::random_algebra(Q, 2 + trial % 3, rng);
    AlgElement g = corpus::random_element(a, rng);
    Ideal i = Ideal::generated(a, {a.mul(g, g)});
    if (i.contains(a.unit())) continue;
    Quotient q = quotient(a, i);
    EXPECT_EQ(q.algebra.dim(), a.dim() - i.dim());
    EXPECT_EQ(q.projection.apply(a.unit()), q.algebra.unit());
    for (int s = 0; s < 5; ++s) {
      AlgElement x = corpus::random_element(a, rng), y = corpus::random_element(a, rng);
      EXPECT_EQ(q.projection.apply(a.mul(x, y)),
                q.algebra.mul(q.projection.apply(x), q.projection.apply(y)));
    }
  }
}

TEST(Boolean, Examples) {
  Algebra b = pointwise_algebra(F5, 2);
  EXPECT_EQ(bool_or(b, vec(F5, {1, 0}), vec(F5, {0, 1})), vec(F5, {1, 1}));
  Algebra idem = monogenic_algebra(poly(Q, {0, -1, 1}));
  AlgElement x = idem.basis(1);
  EXPECT_TRUE(is_zero(bool_and(idem, x, bool_not(idem, x))));
  EXPECT_EQ(bool_or(idem, x, bool_not(idem, x)), idem.unit());
  EXPECT_THROW(bool_not(b, vec(F5, {2, 0})), Error);
}

TEST(Orthogonalize, Examples) {
  Algebra a = pointwise_algebra(Q, 3);
  AlgElement e = vec(Q, {1, 1, 0}), f = vec(Q, {0, 1, 1});
  auto out = orthogonalize(a, {{Q.from_integer(2), e}, {Q.from_integer(3), f}});
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].coefficient, Q.from_integer(5));
  EXPECT_EQ(out[0].idempotent, vec(Q, {0, 1, 0}));
  EXPECT_EQ(out[1].coefficient, Q.from_integer(2));
  EXPECT_EQ(out[1].idempotent, vec(Q, {1, 0, 0}));
  EXPECT_EQ(out[2].coefficient, Q.from_integer(3));
  EXPECT_EQ(out[2].idempotent, vec(Q, {0, 0, 1}));

  auto single = orthogonalize(a, {{Q.from_integer(4), e}});
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].idempotent, e);

  auto unit = orthogonalize(a, {{Q.one(), e}, {Q.one(), bool_not(a, e)}});
  ASSERT_EQ(unit.size(), 2u);
  EXPECT_EQ(add(unit[0].idempotent, unit[1].idempotent), a.unit());
  EXPECT_THROW(orthogonalize(a, {{Q.one(), vec(Q, {2, 0, 0})}}), Error);
}

TEST(Entourage, Examples) {
  auto q3 = FieldDescriptor::p_adic(3, 6);
  Algebra a = pointwise_algebra(q3, 2);
  AlgElement x = vec(q3, {1, 2});
  AlgElement y = add(x, vec(q3, {3 * 2, 9 * 4}));
  EXPECT_TRUE(in_entourage(a, x, y, 1));
  EXPECT_FALSE(in_entourage(a, x, y, 2));
  for (int k = 0; k < 5; ++k) EXPECT_TRUE(in_entourage(a, x, x, k));
  EXPECT_EQ(in_entourage(a, x, y, 1), in_entourage(a, y, x, 1));
}

TEST(Properties, RegularRepresentationIsHomomorphism) {
  corpus::Rng rng(8);
  for (auto f : {Q, F5, FieldDescriptor::p_adic(3, 8)}) {
    for (int trial = 0; trial < 25; ++trial) {
      Algebra a = corpus::random_algebra(f, 1 + trial % 4, rng);
      EXPECT_TRUE(a.regular_matrix(a.unit()).is_identity());
      AlgElement x = corpus::random_element(a, rng), y = corpus::random_element(a, rng);
      EXPECT_EQ(a.regular_matrix(a.mul(x, y)), a.regular_matrix(x) * a.regular_matrix(y));
    }
  }
}

TEST(Properties, InvertibleIffZeroNotInSpectrum) {
  corpus::Rng rng(9);
  for (auto f : {Q, F5, FieldDescriptor::prime_field(2), FieldDescriptor::p_adic(5, 8)}) {
    for (int trial = 0; trial < 30; ++trial) {
      Algebra a = corpus::random_algebra(f, 1 + trial % 4, rng);
      for (int s = 0; s < 6; ++s) {
        AlgElement x = corpus::random_element(a, rng, 2);
        auto sigma = spectrum(a, x);
        bool zero_in = std::any_of(sigma.begin(), sigma.end(), [](const Element& l) { return l.is_zero(); });
        auto inv = a.invert(x);
        EXPECT_EQ(inv.has_value(), !zero_in);
        if (inv) EXPECT_EQ(a.mul(x, *inv), a.unit());
      }
    }
  }
}

TEST(Properties, SpectrumMatchesLambdaSweep) {
  corpus::Rng rng(10);
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 97u}) {
    auto f = FieldDescriptor::prime_field(p);
    for (int trial = 0; trial < 20; ++trial) {
      Algebra a = corpus::random_algebra(f, 1 + trial % 4, rng);
      for (int s = 0; s < 10; ++s) {
        AlgElement x = corpus::random_element(a, rng);
        std::vector<std::uint64_t> got;
        for (const auto& l : spectrum(a, x)) got.push_back(l.residue());
        EXPECT_EQ(got, oracle::lambda_sweep_spectrum(a, x));
      }
    }
  }
}

TEST(Properties, MinimalPolynomialDividesCharacteristic) {
  corpus::Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    Algebra a = corpus::random_algebra(Q, 1 + trial % 5, rng);
    AlgElement x = corpus::random_element(a, rng);
    Polynomial m = a.minimal_polynomial(x);
    EXPECT_TRUE(a.characteristic_polynomial(x).divmod(m).second.is_zero());
    // m(x) = 0
    AlgElement acc = a.zero();
    for (std::size_t i = m.coefficients().size(); i-- > 0;) {
      acc = add(a.mul(acc, x), a.scalar(m.coefficients()[i]));
    }
    EXPECT_TRUE(is_zero(acc));
  }
}

TEST(Properties, EntourageSymmetryAndDiagonal) {
  corpus::Rng rng(14);
  auto q3 = FieldDescriptor::p_adic(3, 8);
  for (auto f : {Q, q3, F5}) {
    for (int trial = 0; trial < 20; ++trial) {
      Algebra a = corpus::random_algebra(f, 1 + trial % 3, rng);
      AlgElement x = corpus::random_element(a, rng), y = corpus::random_element(a, rng);
      for (int k = 0; k < 4; ++k) {
        EXPECT_TRUE(in_entourage(a, x, x, k));
        EXPECT_EQ(in_entourage(a, x, y, k), in_entourage(a, y, x, k));
      }
    }
  }
}

#include <gtest/gtest.h>

#include <random>

#include "gelfand/linalg.hpp"

using namespace gelfand;

namespace {

Matrix random_matrix(const FieldDescriptor& f, std::size_t r, std::size_t c, std::mt19937_64& rng,
                     int zero_bias = 0) {
  std::uniform_int_distribution<long> v(-6, 6);
  std::uniform_int_distribution<int> z(0, 9);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) < zero_bias ? f.zero() : f.from_integer(v(rng));
  }
  return m;
}

// Laplace expansion along the first row.
Element cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return m.field().one();
  Element total = m.field().zero();
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor(m.field(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j != c) minor(i - 1, jj++) = m(i, j);
      }
    }
    Element term = m(0, c) * cofactor_det(minor);
    total = (c % 2 == 0) ? total + term : total - term;
  }
  return total;
}

}  // namespace

TEST(Matrix, ProductAndTranspose) {
  auto q = FieldDescriptor::rational();
  auto a = Matrix::from_rows(q, 2, {{q.from_integer(1), q.from_integer(2)},
                                    {q.from_integer(3), q.from_integer(4)}});
  auto b = a * Matrix::identity(q, 2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.transpose()(0, 1), q.from_integer(3));
  EXPECT_EQ(determinant(a), q.from_integer(-2));
  auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_TRUE((a * *inv).is_identity());
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(1);
  for (auto f : {FieldDescriptor::rational(), FieldDescriptor::prime_field(7),
                 FieldDescriptor::p_adic(3, 10)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t n = 1 + trial % 5;
      Matrix m = random_matrix(f, n, n, rng, trial % 4);
      EXPECT_EQ(determinant(m), cofactor_det(m)) << f.name();
    }
  }
}

TEST(CharacteristicPolynomial, ExampleAndCayleyHamilton) {
  auto q = FieldDescriptor::rational();
  auto swap = Matrix::from_rows(q, 2, {{q.zero(), q.one()}, {q.one(), q.zero()}});
  EXPECT_EQ(characteristic_polynomial(swap).to_string(), "t^2 - 1");

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 6;
    Matrix m = random_matrix(q, n, n, rng, trial % 5);
    Polynomial chi = characteristic_polynomial(m);
    ASSERT_EQ(chi.degree(), static_cast<int>(n));
    EXPECT_TRUE(chi.leading().is_one());
    // det(lambda I - m) at a few sample points
    for (long lambda : {-2L, 0L, 3L}) {
      Matrix shifted = Matrix::identity(q, n);
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) = q.from_integer(lambda);
      EXPECT_EQ(chi.evaluate(q.from_integer(lambda)), cofactor_det(shifted - m));
    }
    // Cayley-Hamilton by Horner evaluation on matrices
    Matrix acc(q, n, n);
    for (std::size_t i = chi.coefficients().size(); i-- > 0;) {
      acc = acc * m;
      for (std::size_t d = 0; d < n; ++d) acc(d, d) += chi.coefficients()[i];
    }
    EXPECT_EQ(acc, Matrix(q, n, n));
  }
}

TEST(Elimination, KernelRankSolve) {
  std::mt19937_64 rng(3);
  for (auto f : {FieldDescriptor::rational(), FieldDescriptor::prime_field(3),
                 FieldDescriptor::p_adic(5, 12)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
      Matrix m = random_matrix(f, r, c, rng, 5);
      auto ker = kernel(m);
      EXPECT_EQ(rank(m) + ker.size(), c);
      for (const auto& v : ker) EXPECT_TRUE(is_zero(m.apply(v)));
      Vector x = zero_vector(f, c);
      for (auto& e : x) e = f.from_integer(static_cast<long>(rng() % 7) - 3);
      Vector b = m.apply(x);
      auto sol = solve(m, b);
      ASSERT_TRUE(sol);
      EXPECT_TRUE(equal(m.apply(*sol), b));
    }
  }
}

TEST(Elimination, InconsistentSystem) {
  auto q = FieldDescriptor::rational();
  auto m = Matrix::from_rows(q, 2, {{q.one(), q.one()}, {q.one(), q.one()}});
  EXPECT_FALSE(solve(m, {q.zero(), q.one()}));
  EXPECT_FALSE(inverse(m));
}

TEST(Subspace, SpanReduceEquality) {
  auto q = FieldDescriptor::rational();
  Vector a{q.one(), q.from_integer(2), q.zero()};
  Vector b{q.zero(), q.one(), q.one()};
  auto s = Subspace::span(q, 3, {a, b, add(a, b)});
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains(subtract(scale(q.from_integer(3), a), b)));
  EXPECT_FALSE(s.contains(unit_vector(q, 3, 2)));
  auto t = Subspace::span(q, 3, {add(a, b), b});
  EXPECT_EQ(s, t);
  EXPECT_EQ(s.joined({unit_vector(q, 3, 2)}), Subspace::whole(q, 3));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    EXPECT_TRUE(s.reduce(unit_vector(q, 3, 0))[s.pivots()[i]].is_zero());
  }
}

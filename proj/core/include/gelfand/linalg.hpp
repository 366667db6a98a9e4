#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gelfand/field.hpp"
#include "gelfand/polynomial.hpp"

namespace gelfand {

using Vector = std::vector<Element>;

Vector zero_vector(const FieldDescriptor& field, std::size_t n);
Vector unit_vector(const FieldDescriptor& field, std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Element& c, const Vector& v);
bool is_zero(const Vector& v);
bool equal(const Vector& a, const Vector& b);

/// Dense row-major matrix over a base field.
class Matrix {
 public:
  Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldDescriptor& field, std::size_t n);
  static Matrix from_rows(const FieldDescriptor& field, std::size_t cols,
                          const std::vector<Vector>& rows);
  static Matrix from_columns(const FieldDescriptor& field, std::size_t rows,
                             const std::vector<Vector>& columns);

  const FieldDescriptor& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  bool is_identity() const;

 private:
  FieldDescriptor field_;
  std::size_t rows_, cols_;
  std::vector<Element> data_;
};

/// Reduced row echelon form. Over Q_p the pivot in each column is an entry of
/// least valuation, which keeps elimination multipliers integral.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> kernel(const Matrix& m);
/// Some x with m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Fraction-free (Bareiss) elimination.
Element determinant(const Matrix& m);

/// det(t I - m) by the division-free Berkowitz recurrence.
Polynomial characteristic_polynomial(const Matrix& m);

/// A subspace of F^n held as a reduced row-echelon basis, so equality of
/// subspaces is equality of bases.
class Subspace {
 public:
  Subspace(FieldDescriptor field, std::size_t ambient);
  static Subspace span(const FieldDescriptor& field, std::size_t ambient,
                       const std::vector<Vector>& vectors);
  static Subspace whole(const FieldDescriptor& field, std::size_t ambient);

  const FieldDescriptor& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its component along the basis; zero iff v lies in the subspace.
  /// The result vanishes on every pivot coordinate.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace joined(const std::vector<Vector>& more) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  FieldDescriptor field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace gelfand

#include "gelfand/linalg.hpp"

#include <utility>

namespace gelfand {

Vector zero_vector(const FieldDescriptor& field, std::size_t n) {
  return Vector(n, field.zero());
}

Vector unit_vector(const FieldDescriptor& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  Vector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

Vector subtract(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  Vector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

Vector scale(const Element& c, const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(c * x);
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool equal(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const FieldDescriptor& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const FieldDescriptor& field, std::size_t cols,
                         const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const FieldDescriptor& field, std::size_t rows,
                            const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Element& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Element& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Element& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix sum mismatch");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix difference mismatch");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && equal(a.data_, b.data_);
}

bool Matrix::is_identity() const {
  return rows_ == cols_ && *this == identity(field_, rows_);
}

// ---------------------------------------------------------------- elimination

namespace {

/// Row index in [from, rows) holding the preferred pivot of column c.
std::optional<std::size_t> choose_pivot(const Matrix& m, std::size_t from, std::size_t c) {
  std::optional<std::size_t> best;
  const bool padic = m.field().kind() == FieldKind::PAdic;
  for (std::size_t r = from; r < m.rows(); ++r) {
    const Element& x = m(r, c);
    if (x.is_zero()) continue;
    if (!padic) return r;
    if (!best || x.padic().valuation < m(*best, c).padic().valuation) best = r;
  }
  return best;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

Echelon row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    auto p = choose_pivot(m, row, c);
    if (!p) continue;
    swap_rows(m, row, *p);
    const Element inv = m(row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    m(row, c) = m.field().one();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      const Element factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= factor * m(row, j);
      }
      m(r, c) = m.field().zero();
    }
    pivots.push_back(c);
    ++row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel(const Matrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = m.field().one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: rhs size");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = m.field().one();
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  }
  return inv;
}

Element determinant(const Matrix& input) {
  if (input.rows() != input.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "determinant of non-square");
  }
  const auto& field = input.field();
  const std::size_t n = input.rows();
  if (n == 0) return field.one();
  Matrix m = input;
  Element previous = field.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    auto p = choose_pivot(m, k, k);
    if (!p) return field.zero();
    if (*p != k) {
      swap_rows(m, k, *p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = field.zero();
    }
    previous = m(k, k);
  }
  Element det = m(n - 1, n - 1);
  return negate ? -det : det;
}

namespace {

Polynomial berkowitz(const Matrix& m);

/// Over Q_p, entries of negative valuation make the recurrence cancel away
/// known digits. Work with the integral matrix p^s m and substitute back:
/// det(t - m) = p^{-sn} det(p^s t - p^s m).
Polynomial padic_characteristic_polynomial(const Matrix& m) {
  const auto& field = m.field();
  long lowest = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) lowest = std::min(lowest, m(i, j).padic().valuation);
    }
  }
  if (lowest == 0) return berkowitz(m);
  PAdicValue up;
  up.valuation = -lowest;
  up.unit = 1;
  up.relative = field.precision();
  const Element scale_up = Element::from_padic(field, up);
  Matrix scaled = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) scaled(i, j) *= scale_up;
  }
  std::vector<Element> c = berkowitz(scaled).coefficients();
  // coefficient of t^i picks up p^{-s(n - i)}
  const Element down = scale_up.inverse();
  Element factor = field.one();
  for (std::size_t i = c.size(); i-- > 0;) {
    c[i] *= factor;
    factor *= down;
  }
  return Polynomial(field, c);
}

}  // namespace

Polynomial characteristic_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of non-square");
  }
  if (m.field().kind() == FieldKind::PAdic) return padic_characteristic_polynomial(m);
  return berkowitz(m);
}

namespace {

Polynomial berkowitz(const Matrix& m) {
  const auto& field = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(field, {field.one()});

  // Coefficients highest degree first, for the leading r x r block.
  std::vector<Element> current{field.one(), -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
    std::vector<Element> toeplitz{field.one(), -m(r, r)};
    Vector x(r, field.zero());
    for (std::size_t i = 0; i < r; ++i) x[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Element dot = field.zero();
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * x[i];
      toeplitz.push_back(-dot);
      if (k + 1 < r) {
        Vector next(r, field.zero());
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * x[j];
        }
        x = std::move(next);
      }
    }
    std::vector<Element> next(r + 2, field.zero());
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += toeplitz[i - j] * current[j];
    }
    current = std::move(next);
  }
  return Polynomial(field, std::vector<Element>(current.rbegin(), current.rend()));
}

}  // namespace

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(FieldDescriptor field, std::size_t ambient) : field_(field), ambient_(ambient) {}

Subspace Subspace::span(const FieldDescriptor& field, std::size_t ambient,
                        const std::vector<Vector>& vectors) {
  Subspace s(field, ambient);
  if (vectors.empty()) return s;
  Echelon e = row_reduce(Matrix::from_rows(field, ambient, vectors));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(const FieldDescriptor& field, std::size_t ambient) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < ambient; ++i) units.push_back(unit_vector(field, ambient, i));
  return span(field, ambient, units);
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "subspace reduce");
  Vector out = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Element c = out[pivots_[r]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!basis_[r][j].is_zero()) out[j] -= c * basis_[r][j];
    }
    out[pivots_[r]] = field_.zero();
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& b : other.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

Subspace Subspace::joined(const std::vector<Vector>& more) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), more.begin(), more.end());
  return span(field_, ambient_, all);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
}

}  // namespace gelfand

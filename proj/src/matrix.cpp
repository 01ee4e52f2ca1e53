#include "opalg/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace opalg {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const Field& f, const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::unflatten(const Field& f, std::size_t rows, std::size_t cols, std::span<const Scalar> v) {
  if (v.size() != rows * cols) throw std::invalid_argument("unflatten size mismatch");
  Matrix m(f, 0, 0);
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_.assign(v.begin(), v.end());
  return m;
}

Vector Matrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return Vector(r.begin(), r.end());
}

Vector Matrix::column(std::size_t j) const {
  Vector c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (b.is_zero()) continue;
        out(i, j).add_product(a, b);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) out[i].add_product((*this)(i, j), v[j]);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Scalar Matrix::trace() const {
  Scalar t = field_.zero();
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  }
  return true;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
  Matrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  }
  return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return Matrix();
  std::size_t cols = parts.front().cols();
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += p.rows();
  }
  Matrix out(parts.front().field(), 0, 0);
  out.rows_ = rows;
  out.cols_ = cols;
  out.data_.reserve(rows * cols);
  for (const auto& p : parts) out.data_.insert(out.data_.end(), p.data_.begin(), p.data_.end());
  return out;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pr = r;
    while (pr < a.rows() && a(pr, c).is_zero()) ++pr;
    if (pr == a.rows()) continue;
    if (pr != r) {
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(pr, j), a(r, j));
    }
    Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (a(r, j).is_zero()) continue;
        a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  auto [red, pivots] = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
    basis.push_back(std::move(v));
  }
  // Free-variable vectors are already in echelon form up to row order;
  // re-reduce so callers always get canonical RREF rows.
  Matrix b = Matrix::from_rows(f, basis, m.cols());
  return rref(b).reduced;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  auto [red, pivots] = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  return red.block(0, n, n, n);
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve shape mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [red, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
  return x;
}

Matrix matrix_power(const Matrix& m, std::size_t e) {
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace opalg

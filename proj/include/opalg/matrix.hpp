#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "opalg/scalar.hpp"

namespace opalg {

/// Dense row-major matrix over a single Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const Field& f, const std::vector<Vector>& cols, std::size_t rows);
  /// Inverse of flatten(): a rows×cols matrix from a row-major vector.
  static Matrix unflatten(const Field& f, std::size_t rows, std::size_t cols, std::span<const Scalar> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Vector row_vector(std::size_t i) const;
  Vector column(std::size_t j) const;
  const std::vector<Scalar>& flatten() const { return data_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Vector apply(std::span<const Scalar> v) const;

  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_identity() const;

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Stack vertically; all operands need the same column count.
  static Matrix vstack(const std::vector<Matrix>& parts);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Zero rows are kept at the bottom so the shape
/// of the input is preserved.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Rows form a basis (in RREF) of {x : m x = 0}.
Matrix nullspace(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Some x with m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

Matrix matrix_power(const Matrix& m, std::size_t e);

}  // namespace opalg

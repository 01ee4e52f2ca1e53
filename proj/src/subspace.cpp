#include "opalg/subspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "opalg/errors.hpp"

namespace opalg {

namespace {

Matrix strip_zero_rows(const Matrix& reduced, std::size_t rank) {
  return reduced.block(0, 0, rank, reduced.cols());
}

}  // namespace

Subspace::Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient), basis_(f, 0, ambient) {}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vector>& generators) {
  if (generators.empty()) return Subspace(f, ambient);
  return row_space(Matrix::from_rows(f, generators, ambient));
}

Subspace Subspace::row_space(const Matrix& m) {
  auto [red, pivots] = rref(m);
  Subspace s(m.field(), m.cols());
  s.basis_ = strip_zero_rows(red, pivots.size());
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::whole(const Field& f, std::size_t ambient) {
  Subspace s(f, ambient);
  s.basis_ = Matrix::identity(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vector(i));
  return out;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw ValidationError("vector length does not match ambient dimension");
  Vector out(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = out[pivots_[i]];
    if (c.is_zero()) continue;
    auto r = basis_.row(i);
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
      if (!r[j].is_zero()) out[j] -= c * r[j];
    }
  }
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const { return is_zero_vector(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ValidationError("subspace ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) throw std::invalid_argument("vector not in subspace");
  Vector c;
  c.reserve(dim());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

Subspace Subspace::image(const Matrix& map) const {
  if (map.cols() != ambient_) throw ValidationError("map does not act on the ambient space");
  std::vector<Vector> gens;
  gens.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) gens.push_back(map.apply(basis_.row(i)));
  return span(field_, map.rows(), gens);
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
  if (a.pivots_ != b.pivots_) return a.pivots_ < b.pivots_;
  const auto& x = a.basis_.flatten();
  const auto& y = b.basis_.flatten();
  for (std::size_t i = 0; i < x.size(); ++i) {
    int c = x[i].compare(y[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw ValidationError("subspace ambient dimension mismatch");
  auto gens = a.basis_vectors();
  for (auto& v : b.basis_vectors()) gens.push_back(std::move(v));
  return Subspace::span(a.field(), a.ambient_dim(), gens);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw ValidationError("subspace ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  const Field& f = a.field();
  // Rows [a | a] and [b | 0]; echelon rows with zero left half span the intersection.
  Matrix z(f, a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      z(i, j) = a.basis()(i, j);
      z(i, n + j) = a.basis()(i, j);
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) z(a.dim() + i, j) = b.basis()(i, j);
  }
  auto [red, pivots] = rref(z);
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < n) continue;
    Vector v(red.row(i).begin() + static_cast<std::ptrdiff_t>(n), red.row(i).end());
    gens.push_back(std::move(v));
  }
  return Subspace::span(f, n, gens);
}

SubspaceRelations subspace_ops(const Subspace& a, const Subspace& b) {
  SubspaceRelations r{subspace_sum(a, b), subspace_intersection(a, b), false};
  r.contains = (r.intersection == b);
  return r;
}

Vector EchelonBuilder::reduced(Vector v) const {
  for (const auto& [p, row] : rows_) {
    if (v[p].is_zero()) continue;
    Scalar c = v[p];
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!row[j].is_zero()) v[j] -= c * row[j];
    }
  }
  return v;
}

bool EchelonBuilder::contains(const Vector& v) const { return is_zero_vector(reduced(v)); }

bool EchelonBuilder::insert(Vector v) {
  if (v.size() != ambient_) throw ValidationError("vector length does not match ambient dimension");
  v = reduced(std::move(v));
  std::size_t p = 0;
  while (p < ambient_ && v[p].is_zero()) ++p;
  if (p == ambient_) return false;
  Scalar inv = v[p].inverse();
  for (auto& x : v) {
    if (!x.is_zero()) x *= inv;
  }
  for (auto& [q, row] : rows_) {
    if (row[p].is_zero()) continue;
    Scalar c = row[p];
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!v[j].is_zero()) row[j] -= c * v[j];
    }
  }
  rows_.emplace(p, std::move(v));
  return true;
}

Subspace EchelonBuilder::finish() const {
  std::vector<Vector> gens;
  gens.reserve(rows_.size());
  for (const auto& [p, row] : rows_) gens.push_back(row);
  return Subspace::span(field_, ambient_, gens);
}

}  // namespace opalg

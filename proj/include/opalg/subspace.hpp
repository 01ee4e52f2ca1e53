#pragma once

#include <map>
#include <vector>

#include "opalg/matrix.hpp"

namespace opalg {

/// Subspace of F^n held as a canonical RREF basis, so equality is structural.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of F^ambient.
  Subspace(Field f, std::size_t ambient);

  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vector>& generators);
  static Subspace row_space(const Matrix& m);
  static Subspace whole(const Field& f, std::size_t ambient);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_; }

  /// dim × ambient matrix whose rows are the canonical basis.
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const;
  /// Ambient coordinates not used as pivots; the unit vectors there span a complement.
  std::vector<std::size_t> free_columns() const;

  /// v minus its projection along the pivot coordinates; zero iff v lies in the subspace.
  Vector reduce(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the canonical basis. v must lie in the subspace.
  Vector coordinates(std::span<const Scalar> v) const;

  /// Image under a linear map given as an ambient'×ambient matrix.
  Subspace image(const Matrix& map) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  /// Canonical order: pivot column lists compared lexicographically, then
  /// basis entries. Coordinate axes sort as e_0 < e_1 < ...
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  Field field_;
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Zassenhaus intersection.
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

struct SubspaceRelations {
  Subspace sum;
  Subspace intersection;
  bool contains = false;  // b ⊆ a
};

/// Throws ValidationError on ambient dimension mismatch.
SubspaceRelations subspace_ops(const Subspace& a, const Subspace& b);

/// Incrementally grown RREF basis. insert() is O(rank · ambient).
class EchelonBuilder {
 public:
  EchelonBuilder(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

  /// Adds v to the span; returns false when v was already in it.
  bool insert(Vector v);
  bool contains(const Vector& v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  Subspace finish() const;

 private:
  Vector reduced(Vector v) const;

  Field field_;
  std::size_t ambient_;
  std::map<std::size_t, Vector> rows_;  // pivot column -> row with 1 at pivot
};

}  // namespace opalg

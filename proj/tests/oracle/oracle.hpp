#pragma once

// Brute-force reference computations over small prime fields. Everything
// here uses its own residue arithmetic and point-set subspaces; the library
// is only used to read structure constants and to hand over test inputs.

#include <cstdint>
#include <vector>

#include "opalg/algebra.hpp"
#include "opalg/polynomial.hpp"

namespace oracle {

using Point = std::uint64_t;           // coordinates in base p, coordinate 0 least significant
using PointSet = std::vector<Point>;   // sorted; a subspace listed point by point
using ModVec = std::vector<std::uint32_t>;

struct ModOp {
  std::size_t arity;
  std::vector<std::uint32_t> tensor;
};

struct ModAlgebra {
  std::uint32_t p = 2;
  std::size_t n = 0;
  std::vector<ModOp> ops;

  Point encode(const ModVec& v) const;
  ModVec decode(Point x) const;
  std::size_t points() const;
  /// α(args) computed straight from the tensor.
  ModVec apply(const ModOp& op, const std::vector<ModVec>& args) const;
};

ModAlgebra from_presentation(const opalg::AlgebraPresentation& a);

/// Every subspace of F_p^n, grown one vector at a time from {0}.
std::vector<PointSet> all_subspaces(std::uint32_t p, std::size_t n);

PointSet span_points(const ModAlgebra& a, const std::vector<ModVec>& gens);
PointSet to_points(const ModAlgebra& a, const opalg::Subspace& s);
PointSet intersect(const PointSet& x, const PointSet& y);
PointSet sum(const ModAlgebra& a, const PointSet& x, const PointSet& y);
bool contains(const PointSet& big, const PointSet& small);
std::size_t dimension(const ModAlgebra& a, const PointSet& s);
/// A spanning set chosen greedily from the points.
std::vector<ModVec> basis_of(const ModAlgebra& a, const PointSet& s);

/// Closed under every operation with one argument in I and the rest
/// ranging over the standard basis.
bool is_ideal(const ModAlgebra& a, const PointSet& s);
std::vector<PointSet> all_ideals(const ModAlgebra& a);

/// A/I is a direct sum of simple algebras: some family of minimal ideals
/// above I, each with a product escaping I, is independent modulo I and
/// spans A. I = A counts (empty sum).
bool semisimple_modulo(const ModAlgebra& a, const std::vector<PointSet>& ideals, const PointSet& i);

/// Intersection of all I with A/I semisimple; throws if that intersection
/// does not itself have a semisimple quotient.
PointSet radical(const ModAlgebra& a, const std::vector<PointSet>& ideals);

/// Minimal nonzero ideals.
std::vector<PointSet> minimal_ideals(const std::vector<PointSet>& ideals);

/// J(R_A) from a composition series of A as an R_A-module. Returned as
/// flattened n×n matrices spanning J; rank gives its dimension.
std::vector<ModVec> jacobson_radical(const ModAlgebra& a);
/// Dimension of R_A (unital algebra generated by partial applications and unary ops).
std::size_t operator_algebra_dim(const ModAlgebra& a);

/// Row rank mod p.
std::size_t rank_mod(std::uint32_t p, std::vector<ModVec> rows);

/// Exhaustive trial division by all monic polynomials of degree ≤ deg/2.
bool irreducible_by_trial_division(const opalg::Polynomial& f);
/// Over Q: degree ≤ 3 and no rational root (rational root theorem).
bool irreducible_cubic_over_q(const opalg::Polynomial& f);

}  // namespace oracle

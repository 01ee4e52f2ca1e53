#pragma once

#include <vector>

#include "opalg/algebra.hpp"
#include "opalg/polynomial.hpp"

namespace opalg {

/// Jacobson radical of an operator algebra R ⊆ End(F^dim), returned as an
/// operator subspace. In characteristic 0 or p > dim this is the radical of
/// the trace form; for p ≤ dim the trace form is refined by the integer-lift
/// power-trace functionals g_i(a) = tr(ã^{p^i}) / p^i mod p for
/// i = 1..⌊log_p dim⌋. The result is checked to be nilpotent of index ≤ dim.
Subspace jacobson_radical(const Subspace& operators, std::size_t dim);

struct RadicalReport {
  Subspace jacobson_radical_of_R;  // operators, ambient dim²
  Subspace module_radical;         // J(R)·A
  Subspace radical;                // Rad(A) ⊆ A
  AlgebraPresentation semisimple_part;
  Matrix projection;               // A → semisimple_part
};

/// A′ = A / J(R_A)·A, then Ā = A′ / {v : E_A v = 0}; Rad(A) = ker(A → Ā).
RadicalReport radical(const AlgebraPresentation& a);
RadicalReport radical(const AlgebraPresentation& a, const OperatorAlgebras& ops);

bool is_semisimple(const AlgebraPresentation& a);

/// E_A ≠ 0, Rad(A) = 0 and a single minimal ideal. When true, also asserts
/// E_A = R_A, J(R_A) = 0 and that every central element of R_A has an
/// irreducible minimal polynomial; a failure raises TheoremViolation.
bool is_simple(const AlgebraPresentation& a);

struct Decomposition {
  std::vector<Subspace> summands;               // canonical order
  std::vector<AlgebraPresentation> algebras;    // summand i in its own RREF basis
  std::vector<Matrix> idempotents;              // projections P_i, each in E_A
};

/// Minimal ideals of a semisimple algebra via the center of R_A.
/// Throws ValidationError when A is not semisimple.
Decomposition minimal_ideal_decomposition(const AlgebraPresentation& a);

/// is_semisimple(A/I), cross-checked against Rad(A) ⊆ I.
bool semisimple_quotient_test(const AlgebraPresentation& a, const Subspace& ideal);

/// Center of an operator algebra, as an operator subspace.
Subspace center(const OperatorAlgebras& ops);

/// dim Hom_R(W1, W2) for R-invariant subspaces W1, W2 of A.
std::size_t intertwiner_dimension(const OperatorAlgebras& ops, const Subspace& w1, const Subspace& w2);

/// Splits A into R-isotypic components, canonical order.
std::vector<Subspace> isotypic_components(const OperatorAlgebras& ops);

/// Matrix of an operator restricted to an invariant subspace, in its canonical basis.
Matrix restrict_operator(const Matrix& op, const Subspace& w);

}  // namespace opalg

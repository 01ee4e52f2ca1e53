#pragma once

#include <cstdint>
#include <vector>

#include "opalg/algebra.hpp"

namespace opalg {

/// Number of subspaces of F_p^n, saturating at UINT64_MAX.
std::uint64_t subspace_count(std::uint32_t p, std::size_t n);

/// Every subspace of F_p^n, generated as reduced echelon forms in canonical
/// order. Throws ValidationError over Q.
std::vector<Subspace> enumerate_subspaces(const Field& f, std::size_t n);

/// All ideals of a finite-field algebra by exhaustive enumeration, in
/// canonical order. Work is spread over `threads` workers in an order drawn
/// from `seed`; the result does not depend on either.
std::vector<Subspace> ideal_lattice(const AlgebraPresentation& a, unsigned threads = 1, std::uint64_t seed = 0);

}  // namespace opalg

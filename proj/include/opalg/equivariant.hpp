#pragma once

#include <string>
#include <vector>

#include "opalg/structure.hpp"

namespace opalg {

using Subgroup = std::vector<std::size_t>;  // sorted element indices

/// Finite group given by its Cayley table; validated on construction.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> mult, std::string name = {});

  std::size_t order() const { return mult_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mult_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return mult_; }
  const std::string& name() const { return name_; }

  bool is_subgroup(const Subgroup& h) const;
  /// Smallest subgroup containing the generators, sorted.
  Subgroup generated(const std::vector<std::size_t>& generators) const;
  /// g H g⁻¹, sorted.
  Subgroup conjugate(const Subgroup& h, std::size_t g) const;
  /// Right cosets Hx, each listed by its smallest element, ascending.
  std::vector<std::size_t> right_coset_representatives(const Subgroup& h) const;
  /// The subgroup as a group in its own right; element i is h[i].
  FiniteGroup subgroup_group(const Subgroup& h) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.mult_ == b.mult_; }

 private:
  std::vector<std::vector<std::size_t>> mult_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::string name_;
};

bool same_subgroup_up_to_conjugacy(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2);

/// Left action of a finite group on an algebra by automorphisms.
struct GroupAction {
  FiniteGroup group;
  std::vector<Matrix> matrices;  // indexed by group element
};

/// Identity, homomorphism and automorphism checks. Throws ValidationError.
void validate_action(const AlgebraPresentation& a, const GroupAction& action);

/// matrices[g]·I = I for every g. Throws ValidationError when I is not an ideal.
bool is_invariant_ideal(const AlgebraPresentation& a, const GroupAction& action, const Subspace& ideal);

bool is_simple_equivariant(const AlgebraPresentation& a, const GroupAction& action);

struct OrbitReport {
  std::vector<Subspace> summands;
  std::vector<std::vector<std::size_t>> permutations;  // permutations[g][i] = σ_g(i)
  bool transitive = false;
};

/// Permutation of the minimal ideals induced by each group element.
/// Requires A semisimple; throws ValidationError if an image is not a summand.
OrbitReport orbit_on_minimal_ideals(const AlgebraPresentation& a, const GroupAction& action);
OrbitReport orbit_on_minimal_ideals(const GroupAction& action, const std::vector<Subspace>& summands);

struct AutomorphismDecomposition {
  std::vector<std::size_t> permutation;  // block i goes to block permutation[i]
  std::vector<Matrix> blocks;            // blocks[i]: B → B, the (permutation[i], i) block
};

/// g = (block permutation s) ∘ diag(b_1..b_n) on B^{⊕n}, with block i at
/// coordinates [i·dim B, (i+1)·dim B). Throws ValidationError when g is not
/// an automorphism or does not permute the blocks.
AutomorphismDecomposition decompose_automorphism(const AlgebraPresentation& b, std::size_t copies, const Matrix& g);
Matrix recompose_automorphism(const AutomorphismDecomposition& d);

struct FunH {
  AlgebraPresentation algebra;
  GroupAction action;
  std::vector<std::size_t> coset_reps;
};

/// Functions f: G → B with f(hx) = φ(h) f(x), G acting by (g·f)(x) = f(xg).
/// Coordinates: block i holds f(r_i) for the i-th coset representative.
/// phi is indexed like the sorted subgroup h.
FunH build_fun_H(const FiniteGroup& g, const Subgroup& h, const AlgebraPresentation& b, const std::vector<Matrix>& phi);

struct SimpleBase {
  Subgroup K;  // K ⊆ H, in G's element indices
  AlgebraPresentation B;
  std::vector<Matrix> phi;  // indexed like K
};

/// Fun_H(G, B) ≅ Fun_K(G, B′) with B′ a simple constituent of B and K its
/// stabilizer in H. Requires (B, φ) to be simple as an H-algebra; when B is
/// already simple, K = H and B′ = B.
SimpleBase simple_base_reduction(const FiniteGroup& g, const Subgroup& h, const AlgebraPresentation& b,
                                 const std::vector<Matrix>& phi);

struct ClassificationResult {
  Subgroup H;
  std::vector<Matrix> phi;
  AlgebraPresentation B;
  Subspace B_summand;  // the minimal ideal of A carried onto B
  Matrix psi;          // A → Fun_H(G, B)
  std::vector<std::size_t> coset_reps;
  FunH fun;
  bool psi_invertible = false;
  bool psi_equivariant = false;
  bool psi_preserves_ops = false;
  bool stabilizers_conjugate = false;
  bool transitive = false;
};

/// A ≅ Fun_H(G, B) with H the stabilizer of the first minimal ideal.
/// Throws ValidationError when A is not simple equivariant and
/// TheoremViolation when any verification of ψ fails.
ClassificationResult classify(const AlgebraPresentation& a, const GroupAction& action);

}  // namespace opalg

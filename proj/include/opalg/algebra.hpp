#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opalg/subspace.hpp"

namespace opalg {

/// One generating operation α(c): A^{⊗n} → A as a structure tensor.
/// Entry (k; i_1..i_n) sits at k·d^n + i_1·d^{n-1} + ... + i_n and gives the
/// k-th coordinate of α(e_{i_1}, ..., e_{i_n}).
struct MultilinearOp {
  std::string name;
  std::size_t arity = 0;
  std::vector<Scalar> tensor;

  friend bool operator==(const MultilinearOp&, const MultilinearOp&) = default;
};

/// Finite presentation of an algebra over a linear operad: a vector space
/// F^dim with the images of a finite generating set of operations. The
/// identity of C(1) is implicit; nullary operations are never stored.
class AlgebraPresentation {
 public:
  AlgebraPresentation() = default;
  AlgebraPresentation(Field f, std::size_t dim);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<MultilinearOp>& ops() const { return ops_; }
  const MultilinearOp& op(std::size_t i) const { return ops_.at(i); }
  std::optional<std::size_t> find_op(const std::string& name) const;
  std::vector<std::size_t> unary_ops() const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Zero-filled op; fill it with coefficient().
  std::size_t add_op(const std::string& name, std::size_t arity);
  /// Validates the tensor length against dim^{arity+1}.
  std::size_t add_op(const std::string& name, std::size_t arity, std::vector<Scalar> tensor);
  void set_labels(std::vector<std::string> labels);

  /// Mutable entry (k; indices) of op i.
  Scalar& coefficient(std::size_t op, std::size_t k, std::initializer_list<std::size_t> indices);
  std::size_t tensor_index(std::size_t op, std::size_t k, std::span<const std::size_t> indices) const;

  /// α(args...). args.size() must equal the arity.
  Vector apply(std::size_t op, const std::vector<Vector>& args) const;

  friend bool operator==(const AlgebraPresentation&, const AlgebraPresentation&) = default;

 private:
  Field field_;
  std::size_t dim_ = 0;
  std::vector<MultilinearOp> ops_;
  std::vector<std::string> labels_;
};

/// dim×dim matrix of x ↦ α(a_1, .., x, .., a_{n-1}) with x in slot `slot`
/// (0-based). Throws ValidationError on arity or slot mismatch.
Matrix partial_apply(const AlgebraPresentation& a, std::size_t op, std::size_t slot, const std::vector<Vector>& fixed);

/// Records how a spanning element of E was produced: from a seed, or as
/// letter·parent (left) / parent·letter (right).
struct ClosureStep {
  enum class Kind { Seed, Left, Right } kind = Kind::Seed;
  std::size_t parent = 0;  // index into spanning_words, or into seeds for Kind::Seed
  std::size_t letter = 0;  // index into the alphabet (seeds first, then unary generators)
};

/// L_A, E_A and R_A = L_A + E_A as subspaces of End(A) ≅ F^{dim²}
/// (matrices flattened row-major).
struct OperatorAlgebras {
  std::size_t dim = 0;
  Subspace L;
  Subspace E;
  Subspace R;
  std::vector<Matrix> unary_generators;
  std::vector<Matrix> seeds;           // independent partial applications of arity ≥ 2 ops
  std::vector<Matrix> spanning_words;  // independent words spanning E, in discovery order
  std::vector<ClosureStep> certificate;

  /// seeds followed by unary generators: generates R as a unital algebra.
  std::vector<Matrix> alphabet() const;
  static std::vector<Matrix> basis_matrices(const Subspace& s, std::size_t dim);
};

OperatorAlgebras build_operator_algebras(const AlgebraPresentation& a);

/// Checks id ∈ L, L·E ⊆ E, E·L ⊆ E, E·E ⊆ E, L·L ⊆ L and R = L + E on basis
/// products. Throws TheoremViolation naming the first failure.
void verify_operator_algebras(const OperatorAlgebras& ops);

/// Ideal test as R_A-submodule closure. Throws ValidationError on dimension mismatch.
bool is_ideal(const AlgebraPresentation& a, const Subspace& ideal);
bool is_ideal(const OperatorAlgebras& ops, const Subspace& ideal);
/// Ideal test straight from the definition: every generating op with one
/// slot in I and the others over the basis of A lands in I.
bool is_ideal_by_definition(const AlgebraPresentation& a, const Subspace& ideal);

Subspace ideal_generated_by(const AlgebraPresentation& a, const Subspace& seed);
Subspace ideal_generated_by(const OperatorAlgebras& ops, const Subspace& seed);

/// Span of j·v for j in the operator subspace and v in the basis of A.
Subspace apply_operators(const Subspace& operators, std::size_t dim);

struct Quotient {
  AlgebraPresentation algebra;
  Matrix projection;  // (dim A/I) × dim A
  Matrix section;     // dim A × (dim A/I), unit vectors at the free columns of I
};

/// A/I on the complement spanned by the non-pivot coordinates of I.
/// Throws ValidationError when I is not an ideal.
Quotient quotient_algebra(const AlgebraPresentation& a, const Subspace& ideal);

/// X ↦ π X s for operators preserving the ideal; as a map on flattened operators.
Subspace induced_operators(const Subspace& operators, const Quotient& q, std::size_t dim);

/// Block sum. Both summands must carry the same operation names and arities;
/// mixed-slot evaluations vanish.
AlgebraPresentation direct_sum(const AlgebraPresentation& a, const AlgebraPresentation& b);

/// Block-diagonal embedding End(A_1) ⊕ End(A_2) → End(A_1 ⊕ A_2) applied to E_{A_1} ⊕ E_{A_2}.
Subspace block_diagonal_sum(const Subspace& e1, std::size_t d1, const Subspace& e2, std::size_t d2);

/// Presentation of an ideal (or any op-closed subspace) in its canonical basis.
/// Throws ValidationError if some operation leaves the subspace.
AlgebraPresentation restrict_to_subspace(const AlgebraPresentation& a, const Subspace& s);

/// Tensor of x_1..x_n ↦ out · α(in x_1, ..., in x_n), where in: F^m → F^dim
/// and out: F^dim → F^r.
std::vector<Scalar> transform_tensor(const AlgebraPresentation& a, std::size_t op, const Matrix& out, const Matrix& in);

/// map ∘ α_src = α_dst ∘ (map ⊗ ... ⊗ map) for every operation, matched by name.
bool is_homomorphism(const AlgebraPresentation& src, const AlgebraPresentation& dst, const Matrix& map);
bool is_automorphism(const AlgebraPresentation& a, const Matrix& g);

}  // namespace opalg

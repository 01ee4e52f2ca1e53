#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opalg/equivariant.hpp"

namespace opalg {

/// Every preset carries a single binary operation named "mul" (the product
/// or the bracket), so any two presets over one field can be summed.
AlgebraPresentation pointwise(const Field& f, std::size_t n);
AlgebraPresentation matrix_algebra(const Field& f, std::size_t n);
AlgebraPresentation dual_numbers(const Field& f);
/// Basis h, e, f. Throws ValidationError in characteristic 2.
AlgebraPresentation sl2(const Field& f);
AlgebraPresentation abelian_lie(const Field& f, std::size_t n);
AlgebraPresentation group_algebra(const Field& f, const FiniteGroup& g);
/// e_i e_j = e_{i+j}, zero past e_n.
AlgebraPresentation nilpotent_chain(const Field& f, std::size_t n);

FiniteGroup cyclic_group(std::size_t n);
/// Permutations of {0..n-1} in lexicographic order, (ab)(x) = a(b(x)); n ≤ 4.
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup klein_four_group();
/// "C<n>", "S<n>" or "V4". Throws ValidationError on unknown names.
FiniteGroup standard_group(const std::string& name);

/// Image of element i of symmetric_group(n) on the point x.
std::size_t permutation_image(std::size_t n, std::size_t element, std::size_t x);
bool permutation_is_odd(std::size_t n, std::size_t element);

struct FunHSpec {
  std::string group;              // standard_group name
  Subgroup H;
  std::string base;               // "F", "M2" or "F2swap"
  std::vector<Matrix> phi;        // indexed like H
};

struct Preset {
  std::string name;
  AlgebraPresentation algebra;
  std::optional<GroupAction> action;
  std::optional<FunHSpec> fun_h;
};

/// "Q" or "F<p>".
Field field_from_name(const std::string& name);

/// Names in the default corpus, e.g. "pointwise3", "matrix2", "sl2",
/// "group_algebra_S3", "fun_h_S3_S2_F", "abelian_lie2_C3".
std::vector<std::string> preset_names();

/// Builds a preset by name over the field; a suffix "@Q" or "@F<p>" overrides it.
Preset build_preset(const std::string& name, const Field& f = Field::rationals());

}  // namespace opalg

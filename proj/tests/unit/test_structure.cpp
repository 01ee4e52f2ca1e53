#include <doctest.h>

#include "opalg/lattice.hpp"
#include "opalg/structure.hpp"
#include "support.hpp"

using namespace opalg;

namespace {

const Field Q = Field::rationals();

Subspace span1(const Field& f, std::vector<long long> xs) {
  Vector v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return Subspace::span(f, xs.size(), {v});
}

oracle::ModVec residues(std::span<const Scalar> v) {
  oracle::ModVec out;
  for (const auto& s : v) out.push_back(s.residue());
  return out;
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("Jacobson radical examples") {
    const Matrix id = Matrix::identity(Q, 3);
    CHECK(jacobson_radical(Subspace::span(Q, 9, {id.flatten()}), 3).is_zero());

    const OperatorAlgebras dual = build_operator_algebras(dual_numbers(Q));
    Matrix n(Q, 2, 2);
    n(1, 0) = Q.one();  // 1 ↦ x, x ↦ 0
    CHECK(jacobson_radical(dual.R, 2) == Subspace::span(Q, 4, {n.flatten()}));

    const OperatorAlgebras m2 = build_operator_algebras(matrix_algebra(Q, 2));
    CHECK(m2.R.dim() == 16);
    CHECK(jacobson_radical(m2.R, 4).is_zero());
  }

  TEST_CASE("Jacobson radical agrees with composition-series oracle") {
    for (const Field& f : {Field::prime(2), Field::prime(3), Field::prime(5)}) {
      for (const Preset& p : support::corpus(f, 4)) {
        CAPTURE(p.name);
        CAPTURE(f.name());
        const auto m = oracle::from_presentation(p.algebra);
        const OperatorAlgebras ops = build_operator_algebras(p.algebra);
        const Subspace j = jacobson_radical(ops.R, p.algebra.dim());
        const auto expected = oracle::jacobson_radical(m);
        CHECK(j.dim() == oracle::rank_mod(f.characteristic(), expected));
        for (const auto& x : expected) {
          Vector v;
          for (auto r : x) v.push_back(f.from_int(r));
          CHECK(j.contains(v));
        }
      }
    }
  }

  TEST_CASE("radical examples") {
    CHECK(radical(pointwise(Q, 2)).radical.is_zero());
    CHECK(radical(dual_numbers(Q)).radical == span1(Q, {0, 1}));
    for (std::size_t n = 1; n <= 3; ++n) {
      const RadicalReport r = radical(abelian_lie(Q, n));
      CHECK(r.radical.is_whole());
      CHECK(r.semisimple_part.dim() == 0);
    }
    const RadicalReport chain = radical(nilpotent_chain(Q, 3));
    CHECK(chain.radical.is_whole());
  }

  TEST_CASE("radical agrees with the ideal-lattice oracle") {
    for (const Field& f : {Field::prime(2), Field::prime(5)}) {
      for (const Preset& p : support::corpus(f, f.characteristic() == 2 ? 4 : 3)) {
        CAPTURE(p.name);
        CAPTURE(f.name());
        const auto m = oracle::from_presentation(p.algebra);
        const auto ideals = oracle::all_ideals(m);
        const RadicalReport r = radical(p.algebra);
        CHECK(oracle::to_points(m, r.radical) == oracle::radical(m, ideals));
        CHECK(Subspace::row_space(nullspace(r.projection)) == r.radical);
      }
    }
  }

  TEST_CASE("semisimple part has zero radical") {
    for (const Field& f : {Q, Field::prime(2), Field::prime(5)}) {
      for (const Preset& p : support::corpus(f, 9)) {
        CAPTURE(p.name);
        const RadicalReport r = radical(p.algebra);
        CHECK(radical(r.semisimple_part).radical.is_zero());
      }
    }
  }

  TEST_CASE("simplicity examples") {
    CHECK(is_simple(pointwise(Q, 1)));
    CHECK(is_simple(sl2(Q)));
    CHECK(is_simple(matrix_algebra(Q, 2)));
    CHECK_FALSE(is_simple(pointwise(Q, 2)));
    CHECK_FALSE(is_simple(abelian_lie(Q, 3)));
    CHECK_FALSE(is_simple(dual_numbers(Q)));

    // The F7 reduction of sl2 has only the trivial ideals.
    const AlgebraPresentation s7 = sl2(Field::prime(7));
    CHECK(is_simple(s7));
    CHECK(oracle::all_ideals(oracle::from_presentation(s7)).size() == 2);
  }

  TEST_CASE("semisimplicity examples") {
    CHECK(is_semisimple(direct_sum(pointwise(Q, 1), matrix_algebra(Q, 2))));
    CHECK_FALSE(is_semisimple(dual_numbers(Q)));
    CHECK(is_semisimple(AlgebraPresentation(Q, 0)));
    CHECK(is_semisimple(group_algebra(Q, symmetric_group(3))));
    CHECK_FALSE(is_semisimple(group_algebra(Field::prime(2), cyclic_group(2))));
  }

  TEST_CASE("decomposition examples") {
    const Decomposition three = minimal_ideal_decomposition(pointwise(Q, 3));
    REQUIRE(three.summands.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(three.summands[i] == Subspace::span(Q, 3, {unit_vector(Q, 3, i)}));
      Matrix p(Q, 3, 3);
      p(i, i) = Q.one();
      CHECK(three.idempotents[i] == p);
    }

    // Q[C2] on the basis 1, g splits along (1 ± g)/2.
    const Decomposition c2 = minimal_ideal_decomposition(group_algebra(Q, cyclic_group(2)));
    REQUIRE(c2.summands.size() == 2);
    CHECK(c2.summands[0] == span1(Q, {1, -1}));
    CHECK(c2.summands[1] == span1(Q, {1, 1}));
    const Scalar half = Q.parse("1/2");
    CHECK(c2.idempotents[0](0, 0) == half);
    CHECK(c2.idempotents[0](0, 1) == -half);
    CHECK(c2.idempotents[1](0, 1) == half);

    const FiniteGroup g = cyclic_group(3);
    const AlgebraPresentation m2 = matrix_algebra(Q, 2);
    const FunH fun = build_fun_H(g, {0}, m2, {Matrix::identity(Q, 4)});
    const Decomposition blocks = minimal_ideal_decomposition(fun.algebra);
    REQUIRE(blocks.summands.size() == 3);
    for (const auto& alg : blocks.algebras) CHECK(alg.ops() == m2.ops());

    CHECK_THROWS_AS(minimal_ideal_decomposition(dual_numbers(Q)), ValidationError);
  }

  TEST_CASE("decomposition soundness across the corpus") {
    for (const Field& f : {Q, Field::prime(2), Field::prime(5)}) {
      for (const Preset& p : support::corpus(f, 9)) {
        if (!is_semisimple(p.algebra) || p.algebra.dim() == 0) continue;
        CAPTURE(p.name);
        CAPTURE(f.name());
        const std::size_t n = p.algebra.dim();
        const OperatorAlgebras ops = build_operator_algebras(p.algebra);
        const Decomposition d = minimal_ideal_decomposition(p.algebra);
        Subspace total(f, n);
        std::size_t dims = 0;
        Matrix sum(f, n, n);
        for (std::size_t i = 0; i < d.summands.size(); ++i) {
          total = subspace_sum(total, d.summands[i]);
          dims += d.summands[i].dim();
          CHECK(ops.E.contains(d.idempotents[i].flatten()));
          sum = sum + d.idempotents[i];
          for (std::size_t j = 0; j < d.summands.size(); ++j) {
            const Matrix prod = d.idempotents[i] * d.idempotents[j];
            CHECK(prod == (i == j ? d.idempotents[i] : Matrix(f, n, n)));
            if (i != j) CHECK(intertwiner_dimension(ops, d.summands[i], d.summands[j]) == 0);
          }
          CHECK(is_simple(d.algebras[i]));
          if (i > 0) CHECK(d.summands[i - 1] < d.summands[i]);
        }
        CHECK(total.is_whole());
        CHECK(dims == n);
        CHECK(sum.is_identity());
      }
    }
  }

  TEST_CASE("decomposition matches oracle minimal ideals") {
    for (const Field& f : {Field::prime(2), Field::prime(5)}) {
      for (const Preset& p : support::corpus(f, f.characteristic() == 2 ? 4 : 3)) {
        if (!is_semisimple(p.algebra) || p.algebra.dim() == 0) continue;
        CAPTURE(p.name);
        const auto m = oracle::from_presentation(p.algebra);
        auto expected = oracle::minimal_ideals(oracle::all_ideals(m));
        std::vector<oracle::PointSet> got;
        for (const auto& s : minimal_ideal_decomposition(p.algebra).summands) got.push_back(oracle::to_points(m, s));
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
      }
    }
  }

  TEST_CASE("semisimple quotient test") {
    const AlgebraPresentation d = dual_numbers(Q);
    CHECK(semisimple_quotient_test(d, Subspace::whole(Q, 2)));
    CHECK_FALSE(semisimple_quotient_test(d, Subspace(Q, 2)));
    CHECK(semisimple_quotient_test(d, span1(Q, {0, 1})));

    const Field f = Field::prime(2);
    for (const Preset& p : support::corpus(f, 3)) {
      CAPTURE(p.name);
      const auto m = oracle::from_presentation(p.algebra);
      const auto ideals = oracle::all_ideals(m);
      for (const auto& i : ideals) {
        CHECK(semisimple_quotient_test(p.algebra, support::from_points(f, m, i)) ==
              oracle::semisimple_modulo(m, ideals, i));
      }
    }
  }

  TEST_CASE("simple algebras have E = R, J = 0 and a field as center") {
    for (const char* name : {"pointwise1", "matrix2", "sl2"}) {
      CAPTURE(name);
      const AlgebraPresentation a = build_preset(name, Q).algebra;
      REQUIRE(is_simple(a));
      const OperatorAlgebras ops = build_operator_algebras(a);
      CHECK(ops.E == ops.R);
      CHECK(jacobson_radical(ops.R, a.dim()).is_zero());
      const Subspace z = center(ops);
      for (const auto& c : OperatorAlgebras::basis_matrices(z, a.dim())) CHECK(is_irreducible(min_poly(c)));
      CHECK(isotypic_components(ops).size() == 1);
    }
  }

  TEST_CASE("power-trace refinement in small characteristic") {
    // F2[V4] is local: J has codimension 1 in R.
    const AlgebraPresentation v4 = group_algebra(Field::prime(2), klein_four_group());
    const OperatorAlgebras ops = build_operator_algebras(v4);
    const Subspace j = jacobson_radical(ops.R, 4);
    CHECK(j.dim() == ops.R.dim() - 1);
    // Every element of J is nilpotent.
    for (const auto& x : OperatorAlgebras::basis_matrices(j, 4)) CHECK(matrix_power(x, 4).is_zero());
    std::vector<oracle::ModVec> rows;
    for (const auto& x : OperatorAlgebras::basis_matrices(j, 4)) rows.push_back(residues(x.flatten()));
    CHECK(oracle::rank_mod(2, rows) == j.dim());
  }
}

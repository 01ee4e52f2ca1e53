#include <doctest.h>

#include "opalg/presets.hpp"
#include "support.hpp"

using namespace opalg;

namespace {

const Field Q = Field::rationals();

Vector e(std::size_t n, std::size_t i) { return unit_vector(Q, n, i); }

Vector scaled(Vector v, long long k) {
  for (auto& x : v) x *= Q.from_int(k);
  return v;
}

}  // namespace

TEST_SUITE("presets") {
  TEST_CASE("structure constants") {
    const AlgebraPresentation f1 = build_preset("pointwise1", Q).algebra;
    CHECK(f1.dim() == 1);
    CHECK(f1.apply(0, {e(1, 0), e(1, 0)}) == e(1, 0));

    const AlgebraPresentation p3 = pointwise(Q, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) CHECK(p3.apply(0, {e(3, i), e(3, j)}) == (i == j ? e(3, i) : zero_vector(Q, 3)));
    }

    // E_ij E_kl = δ_jk E_il with E_ij at index 2i + j.
    const AlgebraPresentation m2 = matrix_algebra(Q, 2);
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) {
        const std::size_t i = a / 2, j = a % 2, k = b / 2, l = b % 2;
        CHECK(m2.apply(0, {e(4, a), e(4, b)}) == (j == k ? e(4, 2 * i + l) : zero_vector(Q, 4)));
      }
    }

    const AlgebraPresentation s = sl2(Q);  // h, e, f
    CHECK(s.apply(0, {e(3, 0), e(3, 1)}) == scaled(e(3, 1), 2));
    CHECK(s.apply(0, {e(3, 0), e(3, 2)}) == scaled(e(3, 2), -2));
    CHECK(s.apply(0, {e(3, 1), e(3, 2)}) == e(3, 0));
    CHECK(s.apply(0, {e(3, 2), e(3, 1)}) == scaled(e(3, 0), -1));

    const AlgebraPresentation d = dual_numbers(Q);  // 1, x
    CHECK(d.apply(0, {e(2, 1), e(2, 1)}) == zero_vector(Q, 2));
    CHECK(d.apply(0, {e(2, 0), e(2, 1)}) == e(2, 1));

    const AlgebraPresentation chain = nilpotent_chain(Q, 3);  // index k holds e_{k+1}
    CHECK(chain.apply(0, {e(3, 0), e(3, 1)}) == e(3, 2));
    CHECK(chain.apply(0, {e(3, 1), e(3, 1)}) == zero_vector(Q, 3));

    for (const auto& c : abelian_lie(Q, 3).op(0).tensor) CHECK(c.is_zero());

    const FiniteGroup s3 = symmetric_group(3);
    const AlgebraPresentation ga = group_algebra(Q, s3);
    for (std::size_t a = 0; a < 6; ++a) {
      for (std::size_t b = 0; b < 6; ++b) CHECK(ga.apply(0, {e(6, a), e(6, b)}) == e(6, s3.mul(a, b)));
    }
  }

  TEST_CASE("advertised predicates") {
    CHECK(is_simple(build_preset("pointwise1", Q).algebra));
    const AlgebraPresentation m2 = build_preset("matrix2", Q).algebra;
    CHECK(m2.dim() == 4);
    CHECK(is_simple(m2));
    CHECK(oracle::all_ideals(oracle::from_presentation(matrix_algebra(Field::prime(5), 2))).size() == 2);
    const AlgebraPresentation lie = build_preset("abelian_lie3", Q).algebra;
    CHECK(build_operator_algebras(lie).E.is_zero());
    CHECK_FALSE(is_simple(lie));
  }

  TEST_CASE("parameters and names") {
    CHECK_THROWS_AS(sl2(Field::prime(2)), ValidationError);
    CHECK_THROWS_AS(build_preset("sl2@F2"), ValidationError);
    CHECK_THROWS_AS(build_preset("no_such_preset"), ValidationError);
    CHECK_THROWS_AS(build_preset("pointwise0"), ValidationError);
    CHECK(build_preset("matrix2@F5").algebra.field() == Field::prime(5));
    CHECK(build_preset("matrix2", Field::prime(3)).algebra.field() == Field::prime(3));
    CHECK(field_from_name("F7") == Field::prime(7));
    CHECK_THROWS_AS(field_from_name("R"), ValidationError);

    CHECK(standard_group("C5").order() == 5);
    CHECK(standard_group("S4").order() == 24);
    CHECK(standard_group("V4") == klein_four_group());
    CHECK(permutation_image(3, 3, 0) == 1);  // [1, 2, 0]
    CHECK_FALSE(permutation_is_odd(3, 3));
    CHECK(permutation_is_odd(3, 1));
  }

  TEST_CASE("every preset builds and every action is valid") {
    for (const Field& f : {Q, Field::prime(3), Field::prime(5), Field::prime(2)}) {
      for (const auto& name : preset_names()) {
        CAPTURE(name);
        CAPTURE(f.name());
        if (f.characteristic() == 2 && name == "sl2") continue;
        const Preset p = build_preset(name, f);
        CHECK(p.name == name);
        if (p.action) CHECK_NOTHROW(validate_action(p.algebra, *p.action));
        if (p.fun_h) {
          CHECK(p.action);
          CHECK(standard_group(p.fun_h->group).is_subgroup(p.fun_h->H));
        }
      }
    }
  }

  TEST_CASE("fun_h presets are simple equivariant") {
    for (const Field& f : {Q, Field::prime(5)}) {
      for (const auto& name : preset_names()) {
        if (name.rfind("fun_h_", 0) != 0) continue;
        CAPTURE(name);
        const Preset p = build_preset(name, f);
        CHECK(is_simple_equivariant(p.algebra, *p.action));
      }
    }
  }
}

#include <doctest.h>

#include <map>

#include "opalg/errors.hpp"
#include "opalg/polynomial.hpp"
#include "opalg/subspace.hpp"
#include "support.hpp"

using namespace opalg;

namespace {

const Field Q = Field::rationals();

Matrix ints(const Field& f, std::vector<std::vector<long long>> rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

oracle::ModVec residues(std::span<const Scalar> v) {
  oracle::ModVec out;
  for (const auto& s : v) out.push_back(s.residue());
  return out;
}

/// Random polynomial of the given degree with a nonzero leading coefficient.
Polynomial random_poly(const Field& f, std::size_t degree, std::mt19937_64& rng) {
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < degree; ++i) c.push_back(support::random_scalar(f, rng, 4));
  Scalar lead = support::random_scalar(f, rng, 4);
  while (lead.is_zero()) lead = support::random_scalar(f, rng, 4);
  c.push_back(lead);
  return Polynomial(f, c);
}

bool independently_irreducible(const Polynomial& p) {
  return p.field().is_rational() ? oracle::irreducible_cubic_over_q(p) : oracle::irreducible_by_trial_division(p);
}

void check_factor_products(const Field& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t max_degree = f.is_rational() ? 3 : 4;
  std::uniform_int_distribution<std::size_t> deg(1, max_degree), count(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<Polynomial, int> expected;
    Polynomial product = Polynomial::constant(f, f.one());
    const std::size_t k = count(rng);
    while (expected.size() < k || product.degree() < 1) {
      Polynomial g = random_poly(f, deg(rng), rng);
      if (!independently_irreducible(g)) continue;
      ++expected[g.monic()];
      product = product * g;
      if (expected.size() >= k && rng() % 2) break;
    }
    const Factorization fac = factor(product);
    CHECK(fac.expand() == product);
    std::map<Polynomial, int> got;
    for (const auto& [p, mult] : fac.factors) {
      CHECK(p.is_monic());
      got[p] += mult;
    }
    CHECK(got == expected);
  }
}

}  // namespace

TEST_SUITE("kernel") {
  TEST_CASE("rref of small matrices") {
    auto id = rref(Matrix::identity(Q, 2));
    CHECK(id.reduced == Matrix::identity(Q, 2));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1});

    auto r = rref(ints(Q, {{2, 4}, {1, 2}}));
    CHECK(r.reduced == ints(Q, {{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
  }

  TEST_CASE("rref over F2 matches independent elimination") {
    const Field f = Field::prime(2);
    std::mt19937_64 rng(11);
    oracle::ModAlgebra shape{2, 5, {}};
    for (int trial = 0; trial < 50; ++trial) {
      const Matrix m = support::random_matrix(f, 5, 5, rng);
      const RrefResult r = rref(m);
      std::vector<oracle::ModVec> in, out;
      for (std::size_t i = 0; i < 5; ++i) {
        in.push_back(residues(m.row(i)));
        out.push_back(residues(r.reduced.row(i)));
      }
      CHECK(oracle::span_points(shape, in) == oracle::span_points(shape, out));
      CHECK(oracle::rank_mod(2, in) == r.pivots.size());
      for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        for (std::size_t k = 0; k < 5; ++k) CHECK(r.reduced(k, r.pivots[i]).residue() == (k == i ? 1u : 0u));
      }
    }
  }

  TEST_CASE("rref is idempotent and canonical") {
    std::mt19937_64 rng(12);
    for (const Field& f : {Q, Field::prime(3), Field::prime(7)}) {
      for (int trial = 0; trial < 40; ++trial) {
        const Matrix m = support::random_matrix(f, 4, 6, rng);
        const Matrix once = rref(m).reduced;
        CHECK(rref(once).reduced == once);
        // A different generating set of the same row space gives the same basis.
        Matrix mixed = m;
        for (std::size_t j = 0; j < 6; ++j) mixed(0, j) += m(1, j) * f.from_int(2);
        CHECK(Subspace::row_space(mixed) == Subspace::row_space(m));
      }
    }
  }

  TEST_CASE("subspace operations on coordinate axes") {
    const Subspace x = Subspace::span(Q, 2, {{Q.one(), Q.zero()}});
    const Subspace y = Subspace::span(Q, 2, {{Q.zero(), Q.one()}});
    const auto r = subspace_ops(x, y);
    CHECK(r.sum == Subspace::whole(Q, 2));
    CHECK(r.intersection.is_zero());
    CHECK_FALSE(r.contains);
    const auto same = subspace_ops(x, x);
    CHECK(same.sum == x);
    CHECK(same.intersection == x);
    CHECK(same.contains);
    CHECK_THROWS_AS(subspace_ops(x, Subspace(Q, 3)), ValidationError);
  }

  TEST_CASE("subspace sum and intersection against the F2 point lattice") {
    const Field f = Field::prime(2);
    oracle::ModAlgebra shape{2, 4, {}};
    const auto all = oracle::all_subspaces(2, 4);
    CHECK(all.size() == 67);
    for (std::size_t i = 0; i < all.size(); i += 3) {
      for (std::size_t j = 0; j < all.size(); j += 5) {
        const Subspace a = support::from_points(f, shape, all[i]);
        const Subspace b = support::from_points(f, shape, all[j]);
        const auto r = subspace_ops(a, b);
        CHECK(oracle::to_points(shape, r.sum) == oracle::sum(shape, all[i], all[j]));
        CHECK(oracle::to_points(shape, r.intersection) == oracle::intersect(all[i], all[j]));
        CHECK(r.contains == oracle::contains(all[i], all[j]));
      }
    }
  }

  TEST_CASE("dimension formula on 500 random pairs") {
    std::mt19937_64 rng(13);
    const std::vector<Field> fields = {Q, Field::prime(2), Field::prime(3), Field::prime(5)};
    for (int trial = 0; trial < 500; ++trial) {
      const Field& f = fields[trial % fields.size()];
      const std::size_t n = 1 + trial % 6;
      const Subspace a = support::random_subspace(f, n, rng);
      const Subspace b = support::random_subspace(f, n, rng);
      const auto r = subspace_ops(a, b);
      CHECK(r.sum.dim() + r.intersection.dim() == a.dim() + b.dim());
      CHECK(r.sum.contains(a));
      CHECK(r.sum.contains(b));
      CHECK(a.contains(r.intersection));
      CHECK(b.contains(r.intersection));
      if (!f.is_rational()) {
        oracle::ModAlgebra shape{f.characteristic(), n, {}};
        CHECK(oracle::to_points(shape, r.intersection) ==
              oracle::intersect(oracle::to_points(shape, a), oracle::to_points(shape, b)));
      }
    }
  }

  TEST_CASE("minimal polynomials of fixed matrices") {
    CHECK(min_poly(Matrix(Q, 3, 3)) == Polynomial::x(Q));
    CHECK(min_poly(Matrix::identity(Q, 3)) == Polynomial::from_ints(Q, {-1, 1}));
    CHECK(min_poly(ints(Q, {{0, 1}, {0, 0}})) == Polynomial::monomial(Q, 2));
  }

  TEST_CASE("minimal polynomials annihilate and are minimal") {
    std::mt19937_64 rng(14);
    for (const Field& f : {Q, Field::prime(2), Field::prime(5)}) {
      for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 4;
        Matrix m = support::random_matrix(f, n, n, rng);
        if (trial % 3 == 0) m = m * m - m;  // repeated eigenvalues more often
        const Polynomial mp = min_poly(m);
        CHECK(mp.is_monic());
        CHECK(mp.evaluate(m).is_zero());
        // No proper monic divisor annihilates m.
        for (const auto& [g, mult] : factor(mp).factors) {
          const Polynomial divisor = mp / g;
          CHECK_FALSE(divisor.evaluate(m).is_zero());
        }
        if (!f.is_rational()) {
          std::vector<oracle::ModVec> powers;
          Matrix pw = Matrix::identity(f, n);
          for (long i = 0; i < mp.degree(); ++i, pw = pw * m) powers.push_back(residues(pw.flatten()));
          CHECK(oracle::rank_mod(f.characteristic(), powers) == static_cast<std::size_t>(mp.degree()));
        }
      }
    }
  }

  TEST_CASE("factor of fixed polynomials") {
    const Factorization a = factor(Polynomial::from_ints(Q, {-1, 0, 1}));
    REQUIRE(a.factors.size() == 2);
    CHECK(a.factors[0] == std::pair{Polynomial::from_ints(Q, {-1, 1}), 1});
    CHECK(a.factors[1] == std::pair{Polynomial::from_ints(Q, {1, 1}), 1});

    const Factorization b = factor(Polynomial::from_ints(Q, {1, 0, 1}));
    REQUIRE(b.factors.size() == 1);
    CHECK(b.factors[0].first == Polynomial::from_ints(Q, {1, 0, 1}));

    const Field f2 = Field::prime(2);
    const Polynomial quartic = Polynomial::from_ints(f2, {1, 1, 0, 0, 1});
    CHECK(oracle::irreducible_by_trial_division(quartic));
    const Factorization c = factor(quartic);
    REQUIRE(c.factors.size() == 1);
    CHECK(c.factors[0] == std::pair{quartic, 1});
    CHECK(is_irreducible(quartic));

    CHECK_THROWS_AS(factor(Polynomial(Q)), ValidationError);
  }

  TEST_CASE("factor over Q reproduces 200 random products") { check_factor_products(Q, 21); }
  TEST_CASE("factor over F2 reproduces 200 random products") { check_factor_products(Field::prime(2), 22); }
  TEST_CASE("factor over F5 reproduces 200 random products") { check_factor_products(Field::prime(5), 23); }
  TEST_CASE("factor over F7 reproduces 200 random products") { check_factor_products(Field::prime(7), 24); }

  TEST_CASE("scalar fields") {
    CHECK_THROWS_AS(Field::prime(4), ValidationError);
    CHECK_THROWS_AS(Field::prime(2147483659ull), FieldGuardError);
    const Field f = Field::prime(7);
    CHECK((f.from_int(3) / f.from_int(5)) * f.from_int(5) == f.from_int(3));
    CHECK(f.from_int(-1).to_string() == "6 mod 7");
    CHECK(Q.parse("6/4").to_string() == "3/2");
    CHECK(Q.parse("-2").to_string() == "-2");
  }
}

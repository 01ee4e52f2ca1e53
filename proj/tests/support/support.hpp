#pragma once

// Shared fixtures for the unit and acceptance executables.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "opalg/errors.hpp"
#include "opalg/presets.hpp"
#include "oracle.hpp"

namespace support {

inline opalg::Subspace from_points(const opalg::Field& f, const oracle::ModAlgebra& a, const oracle::PointSet& s) {
  std::vector<opalg::Vector> gens;
  for (const auto& v : oracle::basis_of(a, s)) {
    opalg::Vector w;
    for (auto x : v) w.push_back(f.from_int(x));
    gens.push_back(std::move(w));
  }
  return opalg::Subspace::span(f, a.n, gens);
}

/// Presets that build over f with dim ≤ max_dim; presets rejecting the field are skipped.
inline std::vector<opalg::Preset> corpus(const opalg::Field& f, std::size_t max_dim) {
  std::vector<opalg::Preset> out;
  for (const auto& name : opalg::preset_names()) {
    try {
      opalg::Preset p = opalg::build_preset(name, f);
      if (p.algebra.dim() <= max_dim) out.push_back(std::move(p));
    } catch (const opalg::ValidationError&) {
    }
  }
  return out;
}

inline opalg::Scalar random_scalar(const opalg::Field& f, std::mt19937_64& rng, int span = 5) {
  if (f.is_rational()) {
    std::uniform_int_distribution<int> num(-span, span), den(1, 3);
    return f.from_mpq(mpq_class(num(rng), den(rng)));
  }
  std::uniform_int_distribution<std::uint32_t> d(0, f.characteristic() - 1);
  return f.from_int(d(rng));
}

inline opalg::Vector random_vector(const opalg::Field& f, std::size_t n, std::mt19937_64& rng) {
  opalg::Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
  return v;
}

inline opalg::Matrix random_matrix(const opalg::Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  opalg::Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(f, rng);
  }
  return m;
}

/// Random subspace spanned by up to n random vectors, some of them dependent.
inline opalg::Subspace random_subspace(const opalg::Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(0, n);
  std::vector<opalg::Vector> gens;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vector(f, n, rng));
  if (k >= 2) {
    opalg::Vector combo = gens[0];
    for (std::size_t j = 0; j < n; ++j) combo[j] += gens[1][j];
    gens.push_back(combo);
  }
  return opalg::Subspace::span(f, n, gens);
}

/// Independent certificate for one classification of Fun_H(G, B). Each
/// evaluation f ↦ f(x) is an algebra map Fun → B; on the first minimal ideal
/// A₁ it is zero or an isomorphism onto a minimal ideal J of B. For such x
/// the map W: B′ → J must preserve the operations, and conjugation by x must
/// carry H′ onto the stabilizer of J in H with W φ′(h′) = φ(x h′ x⁻¹)|_J W.
/// Returns an empty string on success, otherwise the first failed check.
inline std::string round_trip_witness(const opalg::FiniteGroup& g, const opalg::Subgroup& h,
                                      const opalg::AlgebraPresentation& b, const std::vector<opalg::Matrix>& phi,
                                      const opalg::FunH& fun, const opalg::ClassificationResult& c) {
  using opalg::Matrix;
  const opalg::Field& f = b.field();
  const std::size_t d = b.dim();
  auto h_index = [&](std::size_t x) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] == x) return i;
    }
    return std::nullopt;
  };
  const Matrix a1 = c.B_summand.basis().transpose();  // Fun coordinates of the basis of A₁
  bool found = false;
  for (std::size_t x = 0; x < g.order(); ++x) {
    // x = k r_i with k ∈ H.
    std::size_t block = 0, k = 0;
    for (std::size_t i = 0; i < fun.coset_reps.size(); ++i) {
      for (std::size_t e : h) {
        if (g.mul(e, fun.coset_reps[i]) == x) block = i, k = e;
      }
    }
    const Matrix eval = phi[*h_index(k)] * Matrix::identity(f, fun.algebra.dim()).block(block * d, 0, d, fun.algebra.dim());
    const Matrix m = eval * a1;
    if (m.is_zero()) continue;
    found = true;
    const opalg::Subspace j = opalg::Subspace::row_space(m.transpose());
    const opalg::AlgebraPresentation bj = opalg::restrict_to_subspace(b, j);
    Matrix w(f, j.dim(), m.cols());
    for (std::size_t col = 0; col < m.cols(); ++col) {
      const opalg::Vector coords = j.coordinates(m.column(col));
      for (std::size_t r = 0; r < j.dim(); ++r) w(r, col) = coords[r];
    }
    if (!opalg::inverse(w)) return "evaluation at " + std::to_string(x) + " is not invertible on A1";
    if (!opalg::is_homomorphism(c.B, bj, w)) return "evaluation at " + std::to_string(x) + " does not preserve operations";
    opalg::Subgroup conjugated;
    for (std::size_t i = 0; i < c.H.size(); ++i) {
      const std::size_t y = g.mul(g.mul(x, c.H[i]), g.inverse(x));
      const auto yi = h_index(y);
      if (!yi) return "x H' x^-1 leaves H for x = " + std::to_string(x);
      const Matrix phij = opalg::restrict_operator(phi[*yi], j);
      if (!(w * c.phi[i] == phij * w)) return "phi' and phi disagree through the witness at x = " + std::to_string(x);
      conjugated.push_back(y);
    }
    std::sort(conjugated.begin(), conjugated.end());
    opalg::Subgroup stab;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (j.image(phi[i]) == j) stab.push_back(h[i]);
    }
    if (conjugated != stab) return "x H' x^-1 is not the stabilizer of the constituent for x = " + std::to_string(x);
  }
  return found ? "" : "A1 evaluates to zero everywhere";
}

}  // namespace support

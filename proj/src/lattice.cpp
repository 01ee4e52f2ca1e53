#include "opalg/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "opalg/errors.hpp"

namespace opalg {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

std::uint64_t subspace_count(std::uint32_t p, std::size_t n) {
  // Count reduced echelon forms: a pivot set contributes p^(free positions).
  std::uint64_t total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::size_t free_positions = 0, pivots_seen = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (1u << c)) {
        ++pivots_seen;
      } else {
        free_positions += pivots_seen;
      }
    }
    std::uint64_t term = 1;
    for (std::size_t i = 0; i < free_positions; ++i) term = saturating_mul(term, p);
    total = term > std::numeric_limits<std::uint64_t>::max() - total ? std::numeric_limits<std::uint64_t>::max() : total + term;
  }
  return total;
}

std::vector<Subspace> enumerate_subspaces(const Field& f, std::size_t n) {
  const std::uint32_t p = f.characteristic();
  if (p == 0) throw ValidationError("subspace enumeration needs a finite field");
  if (n >= 32) throw ValidationError("subspace enumeration dimension too large");
  std::vector<Subspace> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (1u << c)) pivots.push_back(c);
    }
    // Free slots: (row r, column c) with c right of pivot r and not a pivot.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      for (std::size_t c = pivots[r] + 1; c < n; ++c) {
        if (!(mask & (1u << c))) slots.emplace_back(r, c);
      }
    }
    std::vector<std::uint32_t> digits(slots.size(), 0);
    while (true) {
      Matrix m(f, pivots.size(), n);
      for (std::size_t r = 0; r < pivots.size(); ++r) m(r, pivots[r]) = f.one();
      for (std::size_t s = 0; s < slots.size(); ++s) m(slots[s].first, slots[s].second) = f.from_int(digits[s]);
      out.push_back(Subspace::row_space(m));
      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == p) digits[s++] = 0;
      if (s == digits.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> ideal_lattice(const AlgebraPresentation& a, unsigned threads, std::uint64_t seed) {
  const std::vector<Subspace> all = enumerate_subspaces(a.field(), a.dim());
  const OperatorAlgebras ops = build_operator_algebras(a);
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<char> is_ideal_flag(all.size(), 0);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(all.size())));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < order.size(); i += workers) is_ideal_flag[order[i]] = is_ideal(ops, all[order[i]]) ? 1 : 0;
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (is_ideal_flag[i]) out.push_back(all[i]);
  }
  return out;
}

}  // namespace opalg

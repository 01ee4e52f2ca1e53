#include "opalg/equivariant.hpp"

#include <algorithm>

#include "opalg/errors.hpp"

namespace opalg {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> mult, std::string name)
    : mult_(std::move(mult)), name_(std::move(name)) {
  const std::size_t n = mult_.size();
  if (n == 0) throw ValidationError("group table is empty");
  for (const auto& row : mult_) {
    if (row.size() != n) throw ValidationError("group table is not square");
    for (std::size_t v : row) {
      if (v >= n) throw ValidationError("group table entry out of range");
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = mult_[e][a] == a && mult_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw ValidationError("group table has no identity");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mult_[a][b] == identity_ && mult_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] == n) throw ValidationError("element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]]) {
          throw ValidationError("group table is not associative at (" + std::to_string(a) + ", " + std::to_string(b) +
                                ", " + std::to_string(c) + ")");
        }
      }
    }
  }
}

bool FiniteGroup::is_subgroup(const Subgroup& h) const {
  if (h.empty() || !std::is_sorted(h.begin(), h.end())) return false;
  if (std::adjacent_find(h.begin(), h.end()) != h.end() || h.back() >= order()) return false;
  auto in = [&](std::size_t x) { return std::binary_search(h.begin(), h.end(), x); };
  for (std::size_t a : h) {
    if (!in(inverse(a))) return false;
    for (std::size_t b : h) {
      if (!in(mul(a, b))) return false;
    }
  }
  return true;
}

Subgroup FiniteGroup::generated(const std::vector<std::size_t>& generators) const {
  std::vector<bool> member(order(), false);
  std::vector<std::size_t> frontier{identity_};
  member[identity_] = true;
  while (!frontier.empty()) {
    std::size_t x = frontier.back();
    frontier.pop_back();
    for (std::size_t s : generators) {
      if (s >= order()) throw ValidationError("generator out of range");
      std::size_t y = mul(x, s);
      if (!member[y]) {
        member[y] = true;
        frontier.push_back(y);
      }
    }
  }
  Subgroup out;
  for (std::size_t i = 0; i < order(); ++i) {
    if (member[i]) out.push_back(i);
  }
  return out;
}

Subgroup FiniteGroup::conjugate(const Subgroup& h, std::size_t g) const {
  Subgroup out;
  for (std::size_t x : h) out.push_back(mul(mul(g, x), inverse(g)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> FiniteGroup::right_coset_representatives(const Subgroup& h) const {
  std::vector<bool> covered(order(), false);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (std::size_t y : h) covered[mul(y, x)] = true;
  }
  return reps;
}

FiniteGroup FiniteGroup::subgroup_group(const Subgroup& h) const {
  if (!is_subgroup(h)) throw ValidationError("not a subgroup");
  std::vector<std::vector<std::size_t>> t(h.size(), std::vector<std::size_t>(h.size()));
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) {
      t[i][j] = static_cast<std::size_t>(std::lower_bound(h.begin(), h.end(), mul(h[i], h[j])) - h.begin());
    }
  }
  return FiniteGroup(std::move(t));
}

bool same_subgroup_up_to_conjugacy(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2) {
  if (h1.size() != h2.size()) return false;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (g.conjugate(h1, x) == h2) return true;
  }
  return false;
}

void validate_action(const AlgebraPresentation& a, const GroupAction& action) {
  const auto& g = action.group;
  const std::size_t n = a.dim();
  if (action.matrices.size() != g.order()) throw ValidationError("action needs one matrix per group element");
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Matrix& m = action.matrices[i];
    if (m.rows() != n || m.cols() != n) throw ValidationError("action matrix " + std::to_string(i) + " has wrong shape");
    if (!(m.field() == a.field())) throw ValidationError("action matrix " + std::to_string(i) + " over a different field");
  }
  if (!action.matrices[g.identity()].is_identity()) throw ValidationError("identity element does not act trivially");
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y = 0; y < g.order(); ++y) {
      if (!(action.matrices[x] * action.matrices[y] == action.matrices[g.mul(x, y)])) {
        throw ValidationError("action is not a homomorphism at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
      }
    }
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!is_automorphism(a, action.matrices[x])) {
      throw ValidationError("group element " + std::to_string(x) + " does not act by an automorphism");
    }
  }
}

bool is_invariant_ideal(const AlgebraPresentation& a, const GroupAction& action, const Subspace& ideal) {
  if (ideal.ambient_dim() != a.dim()) throw ValidationError("ideal lives in the wrong ambient dimension");
  if (!is_ideal_by_definition(a, ideal)) throw ValidationError("subspace is not an ideal");
  for (const auto& m : action.matrices) {
    if (!(ideal.image(m) == ideal)) return false;
  }
  return true;
}

OrbitReport orbit_on_minimal_ideals(const GroupAction& action, const std::vector<Subspace>& summands) {
  OrbitReport out;
  out.summands = summands;
  const std::size_t m = summands.size();
  for (std::size_t g = 0; g < action.group.order(); ++g) {
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) {
      Subspace image = summands[i].image(action.matrices[g]);
      auto it = std::find(summands.begin(), summands.end(), image);
      if (it == summands.end()) {
        throw ValidationError("group element " + std::to_string(g) + " maps minimal ideal " + std::to_string(i) +
                              " off the set of minimal ideals");
      }
      perm[i] = static_cast<std::size_t>(it - summands.begin());
    }
    out.permutations.push_back(std::move(perm));
  }
  if (m == 0) return out;
  std::vector<bool> reached(m, false);
  for (const auto& perm : out.permutations) reached[perm[0]] = true;
  out.transitive = std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
  return out;
}

OrbitReport orbit_on_minimal_ideals(const AlgebraPresentation& a, const GroupAction& action) {
  return orbit_on_minimal_ideals(action, minimal_ideal_decomposition(a).summands);
}

bool is_simple_equivariant(const AlgebraPresentation& a, const GroupAction& action) {
  validate_action(a, action);
  if (a.dim() == 0) return false;
  OperatorAlgebras ops = build_operator_algebras(a);
  if (ops.E.is_zero()) return false;
  // A nonzero radical is itself a proper invariant ideal, or else equals A,
  // in which case E_A·A ⊆ J(R_A)·A ≠ A is one.
  if (!radical(a, ops).radical.is_zero()) return false;
  // Invariant ideals of a semisimple algebra are sums over σ-closed sets of summands.
  return orbit_on_minimal_ideals(a, action).transitive;
}

AutomorphismDecomposition decompose_automorphism(const AlgebraPresentation& b, std::size_t copies, const Matrix& g) {
  const std::size_t d = b.dim(), n = d * copies;
  if (g.rows() != n || g.cols() != n) throw ValidationError("automorphism has the wrong shape");
  if (copies == 0) throw ValidationError("block sum needs at least one copy");
  AlgebraPresentation total = b;
  for (std::size_t i = 1; i < copies; ++i) total = direct_sum(total, b);
  if (!is_automorphism(total, g)) throw ValidationError("matrix is not an automorphism of the block sum");

  AutomorphismDecomposition out;
  out.permutation.assign(copies, copies);
  out.blocks.resize(copies);
  std::vector<bool> hit(copies, false);
  for (std::size_t i = 0; i < copies; ++i) {
    for (std::size_t j = 0; j < copies; ++j) {
      Matrix blk = g.block(j * d, i * d, d, d);
      if (blk.is_zero()) continue;
      if (out.permutation[i] != copies) {
        throw ValidationError("automorphism spreads block " + std::to_string(i) + " over several blocks");
      }
      out.permutation[i] = j;
      out.blocks[i] = std::move(blk);
    }
    if (out.permutation[i] == copies) throw ValidationError("automorphism kills block " + std::to_string(i));
    if (hit[out.permutation[i]]) throw ValidationError("automorphism does not permute the blocks");
    hit[out.permutation[i]] = true;
  }
  for (std::size_t i = 0; i < copies; ++i) {
    if (!is_automorphism(b, out.blocks[i])) {
      throw TheoremViolation("block " + std::to_string(i) + " of an automorphism is not an automorphism of B");
    }
  }
  if (!(recompose_automorphism(out) == g)) throw TheoremViolation("block decomposition does not recompose");
  return out;
}

Matrix recompose_automorphism(const AutomorphismDecomposition& d) {
  const std::size_t copies = d.blocks.size();
  if (copies == 0) return Matrix(Field::rationals(), 0, 0);
  const std::size_t b = d.blocks.front().rows();
  Matrix g(d.blocks.front().field(), b * copies, b * copies);
  for (std::size_t i = 0; i < copies; ++i) {
    for (std::size_t r = 0; r < b; ++r) {
      for (std::size_t c = 0; c < b; ++c) g(d.permutation[i] * b + r, i * b + c) = d.blocks[i](r, c);
    }
  }
  return g;
}

FunH build_fun_H(const FiniteGroup& g, const Subgroup& h, const AlgebraPresentation& b, const std::vector<Matrix>& phi) {
  if (!g.is_subgroup(h)) throw ValidationError("H is not a subgroup of G");
  if (phi.size() != h.size()) throw ValidationError("phi needs one matrix per element of H");
  auto index_in_h = [&](std::size_t x) {
    return static_cast<std::size_t>(std::lower_bound(h.begin(), h.end(), x) - h.begin());
  };
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!is_automorphism(b, phi[i])) throw ValidationError("phi(" + std::to_string(h[i]) + ") is not an automorphism of B");
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (!(phi[i] * phi[j] == phi[index_in_h(g.mul(h[i], h[j]))])) {
        throw ValidationError("phi is not a homomorphism");
      }
    }
  }

  FunH out;
  out.coset_reps = g.right_coset_representatives(h);
  const std::size_t k = out.coset_reps.size(), d = b.dim(), n = k * d;
  const Field& f = b.field();

  out.algebra = b;
  for (std::size_t i = 1; i < k; ++i) out.algebra = direct_sum(out.algebra, b);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      std::string bl = b.labels().empty() ? "e" + std::to_string(c) : b.labels()[c];
      labels.push_back("g" + std::to_string(out.coset_reps[i]) + ":" + bl);
    }
  }
  out.algebra.set_labels(std::move(labels));

  // Which coset each element lies in, and the H-part: x = h·r_j.
  std::vector<std::size_t> coset_of(g.order()), h_part(g.order());
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t y : h) {
      std::size_t x = g.mul(y, out.coset_reps[j]);
      coset_of[x] = j;
      h_part[x] = y;
    }
  }
  out.action.group = g;
  for (std::size_t x = 0; x < g.order(); ++x) {
    // (x·f)(r_i) = f(r_i x) = φ(h) f(r_j) where r_i x = h r_j.
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t y = g.mul(out.coset_reps[i], x);
      const Matrix& p = phi[index_in_h(h_part[y])];
      const std::size_t j = coset_of[y];
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) m(i * d + r, j * d + c) = p(r, c);
      }
    }
    out.action.matrices.push_back(std::move(m));
  }
  validate_action(out.algebra, out.action);
  return out;
}

SimpleBase simple_base_reduction(const FiniteGroup& g, const Subgroup& h, const AlgebraPresentation& b,
                                 const std::vector<Matrix>& phi) {
  GroupAction local{g.subgroup_group(h), phi};
  ClassificationResult c = classify(b, local);
  SimpleBase out;
  for (std::size_t k : c.H) out.K.push_back(h[k]);
  out.B = std::move(c.B);
  out.phi = std::move(c.phi);
  return out;
}

ClassificationResult classify(const AlgebraPresentation& a, const GroupAction& action) {
  if (!is_simple_equivariant(a, action)) throw ValidationError("algebra is not simple equivariant");
  const FiniteGroup& g = action.group;
  Decomposition dec;
  try {
    dec = minimal_ideal_decomposition(a);
  } catch (const ValidationError&) {
    throw TheoremViolation("simple equivariant algebra is not semisimple");
  }
  OrbitReport orbit = orbit_on_minimal_ideals(action, dec.summands);
  if (!orbit.transitive) throw TheoremViolation("G is not transitive on the minimal ideals of a simple equivariant algebra");

  ClassificationResult out;
  out.transitive = true;
  const Subspace& a1 = dec.summands.front();
  auto stabilizer = [&](std::size_t i) {
    Subgroup s;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (orbit.permutations[x][i] == i) s.push_back(x);
    }
    return s;
  };
  out.H = stabilizer(0);
  for (std::size_t i = 1; i < dec.summands.size(); ++i) {
    if (!same_subgroup_up_to_conjugacy(g, out.H, stabilizer(i))) {
      throw TheoremViolation("stabilizers of minimal ideals 0 and " + std::to_string(i) + " are not conjugate");
    }
  }
  out.stabilizers_conjugate = true;
  out.B = dec.algebras.front();
  out.B_summand = a1;
  for (std::size_t x : out.H) out.phi.push_back(restrict_operator(action.matrices[x], a1));
  out.fun = build_fun_H(g, out.H, out.B, out.phi);
  out.coset_reps = out.fun.coset_reps;

  // ψ(a)(r_i) = P_1(r_i · a) in the basis of A_1.
  const std::size_t n = a.dim(), d = a1.dim();
  const Matrix& p1 = dec.idempotents.front();
  out.psi = Matrix(a.field(), out.fun.algebra.dim(), n);
  for (std::size_t i = 0; i < out.coset_reps.size(); ++i) {
    Matrix m = p1 * action.matrices[out.coset_reps[i]];
    for (std::size_t c = 0; c < n; ++c) {
      Vector coords = a1.coordinates(m.column(c));
      for (std::size_t r = 0; r < d; ++r) out.psi(i * d + r, c) = coords[r];
    }
  }

  out.psi_invertible = out.psi.rows() == n && inverse(out.psi).has_value();
  if (!out.psi_invertible) throw TheoremViolation("psi is not invertible");
  out.psi_equivariant = true;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!(out.psi * action.matrices[x] == out.fun.action.matrices[x] * out.psi)) {
      out.psi_equivariant = false;
      throw TheoremViolation("psi does not intertwine the actions of element " + std::to_string(x));
    }
  }
  out.psi_preserves_ops = is_homomorphism(a, out.fun.algebra, out.psi);
  if (!out.psi_preserves_ops) throw TheoremViolation("psi does not preserve the generating operations");
  return out;
}

}  // namespace opalg

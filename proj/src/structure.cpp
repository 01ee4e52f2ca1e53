#include "opalg/structure.hpp"

#include <algorithm>
#include <random>

#include "opalg/errors.hpp"

namespace opalg {

namespace {

using u128 = unsigned __int128;

Scalar trace_of_product(const Matrix& x, const Matrix& y) {
  Scalar t = x.field().zero();
  for (std::size_t a = 0; a < x.rows(); ++a) {
    for (std::size_t b = 0; b < x.cols(); ++b) {
      if (!x(a, b).is_zero()) t.add_product(x(a, b), y(b, a));
    }
  }
  return t;
}

/// tr(ã^{p^level}) / p^level mod p for the lift ã of a with entries in [0, p).
Scalar power_trace(const Matrix& a, std::uint32_t p, unsigned level) {
  const std::size_t n = a.rows();
  std::uint64_t pl = 1;
  for (unsigned i = 0; i < level; ++i) pl *= p;
  const u128 modulus = static_cast<u128>(pl) * p;
  if (modulus >> 63) throw FieldGuardError("power-trace modulus exceeds 63 bits");
  const std::uint64_t mod = static_cast<std::uint64_t>(modulus);

  using IntMatrix = std::vector<std::uint64_t>;
  auto mul = [&](const IntMatrix& x, const IntMatrix& y) {
    IntMatrix z(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t xv = x[i * n + k];
        if (!xv) continue;
        for (std::size_t j = 0; j < n; ++j) {
          z[i * n + j] = static_cast<std::uint64_t>((z[i * n + j] + static_cast<u128>(xv) * y[k * n + j]) % mod);
        }
      }
    }
    return z;
  };
  IntMatrix base(n * n), result(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    result[i * n + i] = 1 % mod;
    for (std::size_t j = 0; j < n; ++j) base[i * n + j] = a(i, j).residue();
  }
  std::uint64_t e = pl;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  u128 tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr += result[i * n + i];
  const std::uint64_t t = static_cast<std::uint64_t>(tr % mod);
  if (t % pl != 0) throw TheoremViolation("power trace not divisible by p^" + std::to_string(level));
  return a.field().from_int(static_cast<long long>((t / pl) % p));
}

void check_nilpotent(const Subspace& j, std::size_t dim) {
  if (j.is_zero()) return;
  const auto jb = OperatorAlgebras::basis_matrices(j, dim);
  Subspace power = j;
  std::size_t exponent = 1;
  while (!power.is_zero()) {
    if (exponent >= dim) {
      throw TheoremViolation("computed radical is not nilpotent: J^" + std::to_string(dim) + " != 0");
    }
    EchelonBuilder next(j.field(), dim * dim);
    for (const auto& x : OperatorAlgebras::basis_matrices(power, dim)) {
      for (const auto& y : jb) next.insert((x * y).flatten());
    }
    power = next.finish();
    ++exponent;
  }
}

Subspace from_coordinates(const Subspace& w, const Matrix& coords) {
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < coords.rows(); ++r) {
    Vector v = zero_vector(w.field(), w.ambient_dim());
    for (std::size_t c = 0; c < w.dim(); ++c) {
      if (coords(r, c).is_zero()) continue;
      for (std::size_t k = 0; k < w.ambient_dim(); ++k) v[k].add_product(coords(r, c), w.basis()(c, k));
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(w.field(), w.ambient_dim(), gens);
}

Matrix combine(const std::vector<Matrix>& ms, const Vector& coeffs) {
  Matrix out(ms.front().field(), ms.front().rows(), ms.front().cols());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (!coeffs[i].is_zero()) out = out + ms[i].scaled(coeffs[i]);
  }
  return out;
}

/// Deterministic stream of coefficient vectors for elements of a d-dim
/// commutative algebra: unit vectors, moment-curve points, then (over
/// finite fields) exhaustive or seeded pseudo-random vectors.
class CandidateStream {
 public:
  CandidateStream(const Field& f, std::size_t d) : f_(f), d_(d), rng_(0x5eedULL + d) {
    const std::uint32_t p = f.characteristic();
    if (p != 0) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < d && total <= kExhaustiveLimit; ++i) total *= p;
      exhaustive_ = total <= kExhaustiveLimit;
      total_ = total;
    }
  }

  bool next(Vector& out) {
    const std::uint32_t p = f_.characteristic();
    if (unit_ < d_) {
      out = unit_vector(f_, d_, unit_++);
      return true;
    }
    const long long moment_limit = static_cast<long long>(d_ * d_ + 8);
    while (t_ < moment_limit && (p == 0 || t_ < static_cast<long long>(p))) {
      Scalar t = f_.from_int(t_++);
      out.assign(d_, f_.zero());
      Scalar pw = f_.one();
      for (std::size_t i = 0; i < d_; ++i) {
        out[i] = pw;
        pw *= t;
      }
      return true;
    }
    if (p == 0) return false;
    if (exhaustive_) {
      if (counter_ >= total_) return false;
      std::uint64_t c = counter_++;
      out.assign(d_, f_.zero());
      for (std::size_t i = 0; i < d_; ++i) {
        out[i] = f_.from_int(static_cast<long long>(c % p));
        c /= p;
      }
      return true;
    }
    if (counter_++ >= kRandomLimit) return false;
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    out.assign(d_, f_.zero());
    for (std::size_t i = 0; i < d_; ++i) out[i] = f_.from_int(dist(rng_));
    return true;
  }

 private:
  static constexpr std::uint64_t kExhaustiveLimit = 1 << 14;
  static constexpr std::uint64_t kRandomLimit = 1 << 14;
  Field f_;
  std::size_t d_;
  std::mt19937_64 rng_;
  std::size_t unit_ = 0;
  long long t_ = 2;
  bool exhaustive_ = false;
  std::uint64_t total_ = 0;
  std::uint64_t counter_ = 0;
};

void split_component(const Subspace& w, const std::vector<Matrix>& center_ops, std::vector<Subspace>& out) {
  const Field& f = w.field();
  EchelonBuilder zspan(f, w.dim() * w.dim());
  std::vector<Matrix> zb;
  for (const auto& z : center_ops) {
    Matrix zw = restrict_operator(z, w);
    if (zspan.insert(zw.flatten())) zb.push_back(std::move(zw));
  }
  const std::size_t d = zb.size();
  if (d <= 1) {
    out.push_back(w);
    return;
  }
  CandidateStream stream(f, d);
  Vector coeffs;
  while (stream.next(coeffs)) {
    Matrix z = combine(zb, coeffs);
    Polynomial mp = min_poly(z);
    Factorization fac = factor(mp);
    if (fac.factors.size() > 1) {
      for (const auto& [g, k] : fac.factors) {
        Polynomial gk = Polynomial::constant(f, f.one());
        for (int i = 0; i < k; ++i) gk = gk * g;
        split_component(from_coordinates(w, nullspace(gk.evaluate(z))), center_ops, out);
      }
      return;
    }
    if (fac.factors.front().second > 1) {
      throw TheoremViolation("central element acts non-semisimply on an isotypic candidate");
    }
    if (static_cast<std::size_t>(mp.degree()) == d) {
      out.push_back(w);
      return;
    }
  }
  throw TheoremViolation("could not decide whether a central subalgebra is a field");
}

}  // namespace

Matrix restrict_operator(const Matrix& op, const Subspace& w) {
  Matrix out(w.field(), w.dim(), w.dim());
  for (std::size_t c = 0; c < w.dim(); ++c) {
    Vector img = op.apply(w.basis().row(c));
    if (!w.contains(img)) throw ValidationError("operator does not preserve the subspace");
    Vector coords = w.coordinates(img);
    for (std::size_t r = 0; r < w.dim(); ++r) out(r, c) = coords[r];
  }
  return out;
}

Subspace jacobson_radical(const Subspace& operators, std::size_t dim) {
  const Field& f = operators.field();
  const auto basis = OperatorAlgebras::basis_matrices(operators, dim);
  if (basis.empty()) return Subspace(f, dim * dim);
  const std::uint32_t p = f.characteristic();
  unsigned levels = 0;
  if (p != 0) {
    for (std::uint64_t pw = p; pw <= dim; pw *= p) ++levels;
  }
  std::vector<Matrix> current = basis;
  for (unsigned level = 0; level <= levels && !current.empty(); ++level) {
    Matrix system(f, basis.size(), current.size());
    for (std::size_t c = 0; c < current.size(); ++c) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        system(j, c) = level == 0 ? trace_of_product(current[c], basis[j])
                                  : power_trace(current[c] * basis[j], p, level);
      }
    }
    Matrix ker = nullspace(system);
    std::vector<Matrix> next;
    for (std::size_t r = 0; r < ker.rows(); ++r) next.push_back(combine(current, ker.row_vector(r)));
    current = std::move(next);
  }
  std::vector<Vector> gens;
  for (const auto& m : current) gens.push_back(m.flatten());
  Subspace j = Subspace::span(f, dim * dim, gens);
  check_nilpotent(j, dim);
  return j;
}

RadicalReport radical(const AlgebraPresentation& a) { return radical(a, build_operator_algebras(a)); }

RadicalReport radical(const AlgebraPresentation& a, const OperatorAlgebras& ops) {
  const std::size_t n = a.dim();
  RadicalReport out;
  out.jacobson_radical_of_R = jacobson_radical(ops.R, n);
  out.module_radical = apply_operators(out.jacobson_radical_of_R, n);
  Quotient first = quotient_algebra(a, out.module_radical);

  // Vectors of A′ killed by every element of E_A.
  const std::size_t q = first.algebra.dim();
  Subspace image_e = induced_operators(ops.E, first, n);
  std::vector<Matrix> blocks = OperatorAlgebras::basis_matrices(image_e, q);
  Subspace killed = blocks.empty() ? Subspace::whole(a.field(), q) : Subspace::row_space(nullspace(Matrix::vstack(blocks)));
  if (blocks.empty() && q == 0) killed = Subspace(a.field(), 0);

  Quotient second = quotient_algebra(first.algebra, killed);
  out.semisimple_part = std::move(second.algebra);
  out.projection = second.projection * first.projection;
  out.radical = Subspace::row_space(nullspace(out.projection));
  if (out.projection.rows() == 0) out.radical = Subspace::whole(a.field(), n);
  return out;
}

bool is_semisimple(const AlgebraPresentation& a) { return radical(a).radical.is_zero(); }

Subspace center(const OperatorAlgebras& ops) {
  const std::size_t n = ops.dim;
  const Field& f = ops.R.field();
  const auto basis = OperatorAlgebras::basis_matrices(ops.R, n);
  const auto gens = ops.alphabet();
  if (basis.empty()) return Subspace(f, n * n);
  // Column i stacks the commutators [r_i, g] over all generators g.
  std::vector<Vector> columns;
  for (const auto& r : basis) {
    Vector col;
    for (const auto& g : gens) {
      Matrix c = r * g - g * r;
      col.insert(col.end(), c.flatten().begin(), c.flatten().end());
    }
    columns.push_back(std::move(col));
  }
  std::vector<Vector> gens_z;
  if (gens.empty()) {
    for (const auto& r : basis) gens_z.push_back(r.flatten());
  } else {
    Matrix system = Matrix::from_columns(f, columns, columns.front().size());
    Matrix ker = nullspace(system);
    for (std::size_t i = 0; i < ker.rows(); ++i) gens_z.push_back(combine(basis, ker.row_vector(i)).flatten());
  }
  return Subspace::span(f, n * n, gens_z);
}

std::vector<Subspace> isotypic_components(const OperatorAlgebras& ops) {
  const std::size_t n = ops.dim;
  std::vector<Subspace> out;
  if (n == 0) return out;
  auto z = OperatorAlgebras::basis_matrices(center(ops), n);
  split_component(Subspace::whole(ops.R.field(), n), z, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t intertwiner_dimension(const OperatorAlgebras& ops, const Subspace& w1, const Subspace& w2) {
  const Field& f = ops.R.field();
  const std::size_t a = w1.dim(), b = w2.dim();
  if (a == 0 || b == 0) return 0;
  // Unknown X (b × a), flattened row-major: X r1 − r2 X = 0 for every generator.
  std::vector<Vector> rows;
  for (const auto& g : ops.alphabet()) {
    Matrix r1 = restrict_operator(g, w1);
    Matrix r2 = restrict_operator(g, w2);
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < a; ++j) {
        Vector eq = zero_vector(f, a * b);
        for (std::size_t k = 0; k < a; ++k) eq[i * a + k] += r1(k, j);
        for (std::size_t k = 0; k < b; ++k) eq[k * a + j] -= r2(i, k);
        rows.push_back(std::move(eq));
      }
    }
  }
  if (rows.empty()) return a * b;
  return a * b - rank(Matrix::from_rows(f, rows, a * b));
}

bool is_simple(const AlgebraPresentation& a) {
  if (a.dim() == 0) return false;
  OperatorAlgebras ops = build_operator_algebras(a);
  if (ops.E.is_zero()) return false;
  RadicalReport rad = radical(a, ops);
  if (!rad.radical.is_zero()) return false;
  if (isotypic_components(ops).size() != 1) return false;

  if (!(ops.E == ops.R)) throw TheoremViolation("simple algebra with E_A != R_A");
  if (!rad.jacobson_radical_of_R.is_zero()) throw TheoremViolation("simple algebra with J(R_A) != 0");
  for (const auto& z : OperatorAlgebras::basis_matrices(center(ops), a.dim())) {
    if (!is_irreducible(min_poly(z))) throw TheoremViolation("center of R_A of a simple algebra is not a field");
  }
  return true;
}

Decomposition minimal_ideal_decomposition(const AlgebraPresentation& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  OperatorAlgebras ops = build_operator_algebras(a);
  if (!radical(a, ops).radical.is_zero()) throw ValidationError("minimal ideal decomposition requires a semisimple algebra");
  Decomposition out;
  if (n == 0) return out;
  out.summands = isotypic_components(ops);

  std::vector<Vector> columns;
  for (const auto& s : out.summands) {
    for (auto& v : s.basis_vectors()) columns.push_back(std::move(v));
  }
  Matrix t = Matrix::from_columns(f, columns, n);
  auto t_inv = inverse(t);
  if (!t_inv) throw TheoremViolation("minimal ideals do not span A as a direct sum");

  Matrix total(f, n, n);
  std::size_t offset = 0;
  for (const auto& s : out.summands) {
    Matrix d(f, n, n);
    for (std::size_t i = 0; i < s.dim(); ++i) d(offset + i, offset + i) = f.one();
    offset += s.dim();
    Matrix p = t * d * *t_inv;
    if (!ops.E.contains(p.flatten())) throw TheoremViolation("projection onto a minimal ideal is not in E_A");
    total = total + p;
    out.idempotents.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < out.idempotents.size(); ++i) {
    for (std::size_t j = 0; j < out.idempotents.size(); ++j) {
      Matrix prod = out.idempotents[i] * out.idempotents[j];
      bool ok = i == j ? prod == out.idempotents[i] : prod.is_zero();
      if (!ok) throw TheoremViolation("projections are not orthogonal idempotents");
    }
  }
  if (!total.is_identity()) throw TheoremViolation("projections do not sum to the identity");

  for (const auto& s : out.summands) {
    AlgebraPresentation sub = restrict_to_subspace(a, s);
    if (!is_simple(sub)) throw TheoremViolation("a minimal ideal of a semisimple algebra is not simple");
    out.algebras.push_back(std::move(sub));
  }
  return out;
}

bool semisimple_quotient_test(const AlgebraPresentation& a, const Subspace& ideal) {
  Quotient q = quotient_algebra(a, ideal);
  const bool lhs = is_semisimple(q.algebra);
  const bool rhs = ideal.contains(radical(a).radical);
  if (lhs != rhs) {
    throw TheoremViolation(std::string("A/I semisimple = ") + (lhs ? "true" : "false") +
                           " but Rad(A) contained in I = " + (rhs ? "true" : "false"));
  }
  return lhs;
}

}  // namespace opalg

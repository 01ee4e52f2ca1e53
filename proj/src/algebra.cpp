#include "opalg/algebra.hpp"

#include <deque>
#include <numeric>
#include <set>

#include "opalg/errors.hpp"

namespace opalg {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Applies m (new × old) along one index of a dense tensor with the given shape.
std::vector<Scalar> apply_mode(const std::vector<Scalar>& data, std::vector<std::size_t>& shape, std::size_t mode,
                               const Matrix& m, const Field& f) {
  std::size_t outer = 1, inner = 1;
  for (std::size_t i = 0; i < mode; ++i) outer *= shape[i];
  for (std::size_t i = mode + 1; i < shape.size(); ++i) inner *= shape[i];
  const std::size_t old_n = shape[mode];
  const std::size_t new_n = m.rows();
  std::vector<Scalar> out(outer * new_n * inner, f.zero());
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t b = 0; b < old_n; ++b) {
      const std::size_t src = (o * old_n + b) * inner;
      for (std::size_t a = 0; a < new_n; ++a) {
        const Scalar& coef = m(a, b);
        if (coef.is_zero()) continue;
        const std::size_t dst = (o * new_n + a) * inner;
        for (std::size_t r = 0; r < inner; ++r) {
          if (!data[src + r].is_zero()) out[dst + r].add_product(coef, data[src + r]);
        }
      }
    }
  }
  shape[mode] = new_n;
  return out;
}

Matrix row_matrix(const Field& f, const Vector& v) { return Matrix::from_rows(f, {v}, v.size()); }

std::vector<std::size_t> tensor_shape(std::size_t dim, std::size_t arity) {
  return std::vector<std::size_t>(arity + 1, dim);
}

Vector flat(const Matrix& m) { return m.flatten(); }

/// Unital or non-unital span closure under left/right multiplication by an alphabet.
struct Spin {
  EchelonBuilder builder;
  std::vector<Matrix> words;
  std::vector<ClosureStep> steps;
  std::size_t cap;

  Spin(const Field& f, std::size_t dim) : builder(f, dim * dim), cap(dim * dim) {}

  bool offer(Matrix w, ClosureStep step) {
    if (builder.dim() == cap) return false;
    if (!builder.insert(flat(w))) return false;
    words.push_back(std::move(w));
    steps.push_back(step);
    return true;
  }

  void close(const std::vector<Matrix>& alphabet, bool both_sides) {
    for (std::size_t i = 0; i < words.size() && builder.dim() < cap; ++i) {
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        offer(alphabet[a] * words[i], {ClosureStep::Kind::Left, i, a});
        if (both_sides) offer(words[i] * alphabet[a], {ClosureStep::Kind::Right, i, a});
      }
    }
  }
};

void check_ambient(const AlgebraPresentation& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw ValidationError("subspace ambient dimension does not match the algebra");
  if (!(s.field() == a.field()) && s.dim() > 0) throw ValidationError("subspace field does not match the algebra");
}

}  // namespace

AlgebraPresentation::AlgebraPresentation(Field f, std::size_t dim) : field_(f), dim_(dim) {}

std::optional<std::size_t> AlgebraPresentation::find_op(const std::string& name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> AlgebraPresentation::unary_ops() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].arity == 1) out.push_back(i);
  }
  return out;
}

std::size_t AlgebraPresentation::add_op(const std::string& name, std::size_t arity) {
  return add_op(name, arity, std::vector<Scalar>(ipow(dim_, arity + 1), field_.zero()));
}

std::size_t AlgebraPresentation::add_op(const std::string& name, std::size_t arity, std::vector<Scalar> tensor) {
  if (arity == 0) throw ValidationError("operation \"" + name + "\": nullary operations are not stored");
  if (find_op(name)) throw ValidationError("duplicate operation name \"" + name + "\"");
  if (tensor.size() != ipow(dim_, arity + 1)) {
    throw ValidationError("operation \"" + name + "\": tensor has " + std::to_string(tensor.size()) +
                          " entries, expected " + std::to_string(ipow(dim_, arity + 1)));
  }
  for (const auto& x : tensor) {
    if (!(x.field() == field_)) throw ValidationError("operation \"" + name + "\": scalar over the wrong field");
  }
  ops_.push_back({name, arity, std::move(tensor)});
  return ops_.size() - 1;
}

void AlgebraPresentation::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != dim_) throw ValidationError("label count does not match dimension");
  labels_ = std::move(labels);
}

std::size_t AlgebraPresentation::tensor_index(std::size_t op, std::size_t k, std::span<const std::size_t> indices) const {
  const auto& o = ops_.at(op);
  if (indices.size() != o.arity) throw ValidationError("index count does not match arity");
  std::size_t idx = k;
  for (auto i : indices) idx = idx * dim_ + i;
  return idx;
}

Scalar& AlgebraPresentation::coefficient(std::size_t op, std::size_t k, std::initializer_list<std::size_t> indices) {
  std::vector<std::size_t> idx(indices);
  return ops_.at(op).tensor.at(tensor_index(op, k, idx));
}

Vector AlgebraPresentation::apply(std::size_t op, const std::vector<Vector>& args) const {
  const auto& o = ops_.at(op);
  if (args.size() != o.arity) throw ValidationError("argument count does not match arity of \"" + o.name + "\"");
  auto shape = tensor_shape(dim_, o.arity);
  std::vector<Scalar> data = o.tensor;
  for (std::size_t s = o.arity; s-- > 0;) data = apply_mode(data, shape, s + 1, row_matrix(field_, args[s]), field_);
  return data;
}

Matrix partial_apply(const AlgebraPresentation& a, std::size_t op, std::size_t slot, const std::vector<Vector>& fixed) {
  if (op >= a.ops().size()) throw ValidationError("operation index out of range");
  const auto& o = a.op(op);
  if (slot >= o.arity) throw ValidationError("slot out of range for \"" + o.name + "\"");
  if (fixed.size() + 1 != o.arity) throw ValidationError("expected arity - 1 fixed arguments for \"" + o.name + "\"");
  for (const auto& v : fixed) {
    if (v.size() != a.dim()) throw ValidationError("fixed argument has the wrong length");
  }
  auto shape = tensor_shape(a.dim(), o.arity);
  std::vector<Scalar> data = o.tensor;
  std::size_t arg = fixed.size();
  for (std::size_t s = o.arity; s-- > 0;) {
    if (s == slot) continue;
    data = apply_mode(data, shape, s + 1, row_matrix(a.field(), fixed[--arg]), a.field());
  }
  return Matrix::unflatten(a.field(), a.dim(), a.dim(), data);
}

std::vector<Matrix> OperatorAlgebras::alphabet() const {
  std::vector<Matrix> out = seeds;
  out.insert(out.end(), unary_generators.begin(), unary_generators.end());
  return out;
}

std::vector<Matrix> OperatorAlgebras::basis_matrices(const Subspace& s, std::size_t dim) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(Matrix::unflatten(s.field(), dim, dim, s.basis().row(i)));
  return out;
}

OperatorAlgebras build_operator_algebras(const AlgebraPresentation& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  OperatorAlgebras out;
  out.dim = n;

  for (auto i : a.unary_ops()) out.unary_generators.push_back(partial_apply(a, i, 0, {}));

  Spin l(f, n);
  l.offer(Matrix::identity(f, n), {});
  l.close(out.unary_generators, false);
  out.L = l.builder.finish();

  // Seeds: partial applications with the fixed slots running over basis tuples.
  EchelonBuilder seed_span(f, n * n);
  for (std::size_t op = 0; op < a.ops().size(); ++op) {
    const std::size_t arity = a.op(op).arity;
    if (arity < 2) continue;
    const std::size_t tuples = ipow(n, arity - 1);
    for (std::size_t slot = 0; slot < arity; ++slot) {
      for (std::size_t t = 0; t < tuples; ++t) {
        std::vector<Vector> fixed;
        std::size_t rem = t;
        for (std::size_t s = 0; s + 1 < arity; ++s) {
          fixed.push_back(unit_vector(f, n, rem % n));
          rem /= n;
        }
        Matrix m = partial_apply(a, op, slot, fixed);
        if (seed_span.dim() < n * n && seed_span.insert(flat(m))) out.seeds.push_back(std::move(m));
      }
    }
  }

  Spin e(f, n);
  for (std::size_t i = 0; i < out.seeds.size(); ++i) e.offer(out.seeds[i], {ClosureStep::Kind::Seed, i, i});
  e.close(out.alphabet(), true);
  out.E = e.builder.finish();
  out.spanning_words = std::move(e.words);
  out.certificate = std::move(e.steps);
  out.R = subspace_sum(out.L, out.E);
  return out;
}

void verify_operator_algebras(const OperatorAlgebras& ops) {
  const std::size_t n = ops.dim;
  const Field& f = ops.L.field();
  if (!ops.L.contains(Matrix::identity(f, n).flatten())) throw TheoremViolation("identity not in L_A");
  auto lb = OperatorAlgebras::basis_matrices(ops.L, n);
  auto eb = OperatorAlgebras::basis_matrices(ops.E, n);
  for (const auto& x : lb) {
    for (const auto& y : lb) {
      if (!ops.L.contains((x * y).flatten())) throw TheoremViolation("L_A not multiplicatively closed");
    }
  }
  for (const auto& x : eb) {
    for (const auto& y : lb) {
      if (!ops.E.contains((x * y).flatten())) throw TheoremViolation("E_A·L_A not inside E_A");
      if (!ops.E.contains((y * x).flatten())) throw TheoremViolation("L_A·E_A not inside E_A");
    }
    for (const auto& y : eb) {
      if (!ops.E.contains((x * y).flatten())) throw TheoremViolation("E_A·E_A not inside E_A");
    }
  }
  if (!(ops.R == subspace_sum(ops.L, ops.E))) throw TheoremViolation("R_A differs from L_A + E_A");
}

bool is_ideal(const AlgebraPresentation& a, const Subspace& ideal) {
  check_ambient(a, ideal);
  return is_ideal(build_operator_algebras(a), ideal);
}

bool is_ideal(const OperatorAlgebras& ops, const Subspace& ideal) {
  if (ideal.ambient_dim() != ops.dim) throw ValidationError("subspace ambient dimension does not match the algebra");
  for (const auto& r : OperatorAlgebras::basis_matrices(ops.R, ops.dim)) {
    for (std::size_t i = 0; i < ideal.dim(); ++i) {
      if (!ideal.contains(r.apply(ideal.basis().row(i)))) return false;
    }
  }
  return true;
}

bool is_ideal_by_definition(const AlgebraPresentation& a, const Subspace& ideal) {
  check_ambient(a, ideal);
  const std::size_t n = a.dim();
  const Field& f = a.field();
  for (const auto& o : a.ops()) {
    const std::size_t others = ipow(n, o.arity - 1);
    const std::size_t stride_out = ipow(n, o.arity);
    for (std::size_t slot = 0; slot < o.arity; ++slot) {
      const std::size_t slot_stride = ipow(n, o.arity - 1 - slot);
      for (std::size_t t = 0; t < others; ++t) {
        // Split t into the indices of the slots before and after `slot`.
        const std::size_t low = t % slot_stride;
        const std::size_t high = t / slot_stride;
        for (std::size_t b = 0; b < ideal.dim(); ++b) {
          auto v = ideal.basis().row(b);
          Vector out = zero_vector(f, n);
          for (std::size_t x = 0; x < n; ++x) {
            if (v[x].is_zero()) continue;
            const std::size_t base = (high * n + x) * slot_stride + low;
            for (std::size_t k = 0; k < n; ++k) out[k].add_product(o.tensor[k * stride_out + base], v[x]);
          }
          if (!ideal.contains(out)) return false;
        }
      }
    }
  }
  return true;
}

Subspace ideal_generated_by(const AlgebraPresentation& a, const Subspace& seed) {
  check_ambient(a, seed);
  return ideal_generated_by(build_operator_algebras(a), seed);
}

Subspace ideal_generated_by(const OperatorAlgebras& ops, const Subspace& seed) {
  if (seed.ambient_dim() != ops.dim) throw ValidationError("subspace ambient dimension does not match the algebra");
  EchelonBuilder b(seed.field(), ops.dim);
  std::vector<Vector> queue;
  for (auto& v : seed.basis_vectors()) {
    if (b.insert(v)) queue.push_back(std::move(v));
  }
  const auto alphabet = ops.alphabet();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : alphabet) {
      Vector w = g.apply(queue[i]);
      if (b.insert(w)) queue.push_back(std::move(w));
    }
  }
  return b.finish();
}

Subspace apply_operators(const Subspace& operators, std::size_t dim) {
  EchelonBuilder b(operators.field(), dim);
  for (const auto& m : OperatorAlgebras::basis_matrices(operators, dim)) {
    for (std::size_t j = 0; j < dim; ++j) b.insert(m.column(j));
  }
  return b.finish();
}

Quotient quotient_algebra(const AlgebraPresentation& a, const Subspace& ideal) {
  check_ambient(a, ideal);
  if (!is_ideal(a, ideal)) throw ValidationError("quotient by a subspace that is not an ideal");
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const auto free = ideal.free_columns();
  const std::size_t q = free.size();

  Matrix proj(f, q, n);
  Matrix sect(f, n, q);
  for (std::size_t j = 0; j < n; ++j) {
    Vector r = ideal.reduce(unit_vector(f, n, j));
    for (std::size_t c = 0; c < q; ++c) proj(c, j) = r[free[c]];
  }
  for (std::size_t c = 0; c < q; ++c) sect(free[c], c) = f.one();

  Quotient out{AlgebraPresentation(f, q), proj, sect};
  for (std::size_t op = 0; op < a.ops().size(); ++op) {
    out.algebra.add_op(a.op(op).name, a.op(op).arity, transform_tensor(a, op, proj, sect));
  }
  if (!a.labels().empty()) {
    std::vector<std::string> labels;
    for (auto c : free) labels.push_back(a.labels()[c]);
    out.algebra.set_labels(std::move(labels));
  }
  return out;
}

Subspace induced_operators(const Subspace& operators, const Quotient& q, std::size_t dim) {
  const std::size_t qd = q.projection.rows();
  EchelonBuilder b(operators.field(), qd * qd);
  for (const auto& m : OperatorAlgebras::basis_matrices(operators, dim)) b.insert((q.projection * m * q.section).flatten());
  return b.finish();
}

AlgebraPresentation direct_sum(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (!(a.field() == b.field())) throw ValidationError("direct sum of algebras over different fields");
  if (a.ops().size() != b.ops().size()) throw ValidationError("direct sum summands carry different operations");
  const std::size_t da = a.dim(), db = b.dim(), n = da + db;
  AlgebraPresentation out(a.field(), n);
  for (std::size_t op = 0; op < a.ops().size(); ++op) {
    const auto& oa = a.op(op);
    auto ib = b.find_op(oa.name);
    if (!ib || b.op(*ib).arity != oa.arity) {
      throw ValidationError("operation \"" + oa.name + "\" missing or of different arity in second summand");
    }
    // Embed each summand's tensor along the block inclusions.
    Matrix in_a(a.field(), da, n), in_b(a.field(), db, n);
    Matrix out_a(a.field(), n, da), out_b(a.field(), n, db);
    for (std::size_t i = 0; i < da; ++i) {
      in_a(i, i) = a.field().one();
      out_a(i, i) = a.field().one();
    }
    for (std::size_t i = 0; i < db; ++i) {
      in_b(i, da + i) = a.field().one();
      out_b(da + i, i) = a.field().one();
    }
    auto ta = transform_tensor(a, op, out_a, in_a);
    auto tb = transform_tensor(b, *ib, out_b, in_b);
    for (std::size_t i = 0; i < ta.size(); ++i) ta[i] += tb[i];
    out.add_op(oa.name, oa.arity, std::move(ta));
  }
  if (!a.labels().empty() && !b.labels().empty()) {
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    out.set_labels(std::move(labels));
  }
  return out;
}

Subspace block_diagonal_sum(const Subspace& e1, std::size_t d1, const Subspace& e2, std::size_t d2) {
  const std::size_t n = d1 + d2;
  const Field& f = e1.field();
  std::vector<Vector> gens;
  for (const auto& m : OperatorAlgebras::basis_matrices(e1, d1)) {
    Matrix big(f, n, n);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j) big(i, j) = m(i, j);
    gens.push_back(big.flatten());
  }
  for (const auto& m : OperatorAlgebras::basis_matrices(e2, d2)) {
    Matrix big(f, n, n);
    for (std::size_t i = 0; i < d2; ++i)
      for (std::size_t j = 0; j < d2; ++j) big(d1 + i, d1 + j) = m(i, j);
    gens.push_back(big.flatten());
  }
  return Subspace::span(f, n * n, gens);
}

AlgebraPresentation restrict_to_subspace(const AlgebraPresentation& a, const Subspace& s) {
  check_ambient(a, s);
  const Field& f = a.field();
  const std::size_t n = a.dim(), m = s.dim();
  Matrix in = s.basis().transpose();  // n × m, columns are basis vectors
  AlgebraPresentation out(f, m);
  for (std::size_t op = 0; op < a.ops().size(); ++op) {
    const auto& o = a.op(op);
    Matrix id = Matrix::identity(f, n);
    auto full = transform_tensor(a, op, id, in);  // n × m^arity
    const std::size_t cols = full.size() / n;
    std::vector<Scalar> t(m * cols, f.zero());
    for (std::size_t c = 0; c < cols; ++c) {
      Vector v(n, f.zero());
      for (std::size_t k = 0; k < n; ++k) v[k] = full[k * cols + c];
      if (!s.contains(v)) throw ValidationError("operation \"" + o.name + "\" leaves the subspace");
      Vector coords = s.coordinates(v);
      for (std::size_t k = 0; k < m; ++k) t[k * cols + c] = coords[k];
    }
    out.add_op(o.name, o.arity, std::move(t));
  }
  return out;
}

std::vector<Scalar> transform_tensor(const AlgebraPresentation& a, std::size_t op, const Matrix& out, const Matrix& in) {
  const auto& o = a.op(op);
  if (in.rows() != a.dim() || out.cols() != a.dim()) throw ValidationError("transform maps do not match the algebra");
  auto shape = tensor_shape(a.dim(), o.arity);
  std::vector<Scalar> data = o.tensor;
  const Matrix in_t = in.transpose();
  for (std::size_t s = 0; s < o.arity; ++s) data = apply_mode(data, shape, s + 1, in_t, a.field());
  return apply_mode(data, shape, 0, out, a.field());
}

bool is_homomorphism(const AlgebraPresentation& src, const AlgebraPresentation& dst, const Matrix& map) {
  if (map.rows() != dst.dim() || map.cols() != src.dim()) throw ValidationError("map shape does not match the algebras");
  if (src.ops().size() != dst.ops().size()) return false;
  const Matrix id_src = Matrix::identity(src.field(), src.dim());
  const Matrix id_dst = Matrix::identity(dst.field(), dst.dim());
  for (std::size_t op = 0; op < src.ops().size(); ++op) {
    auto j = dst.find_op(src.op(op).name);
    if (!j || dst.op(*j).arity != src.op(op).arity) return false;
    if (transform_tensor(src, op, map, id_src) != transform_tensor(dst, *j, id_dst, map)) return false;
  }
  return true;
}

bool is_automorphism(const AlgebraPresentation& a, const Matrix& g) {
  if (g.rows() != a.dim() || g.cols() != a.dim()) return false;
  return inverse(g).has_value() && is_homomorphism(a, a, g);
}

}  // namespace opalg

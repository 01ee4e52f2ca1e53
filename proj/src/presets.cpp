#include "opalg/presets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <regex>

#include "opalg/errors.hpp"

namespace opalg {

namespace {

AlgebraPresentation with_mul(const Field& f, std::size_t n, std::vector<std::string> labels) {
  AlgebraPresentation a(f, n);
  a.add_op("mul", 2);
  a.set_labels(std::move(labels));
  return a;
}

std::vector<std::string> indexed_labels(const std::string& prefix, std::size_t n, std::size_t first = 0) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(first + i));
  return out;
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t permutation_index(std::size_t n, const std::vector<std::size_t>& p) {
  const auto perms = all_permutations(n);
  return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), p) - perms.begin());
}

Matrix mat2(const Field& f, long long a, long long b, long long c, long long d) {
  Matrix m(f, 2, 2);
  m(0, 0) = f.from_int(a);
  m(0, 1) = f.from_int(b);
  m(1, 0) = f.from_int(c);
  m(1, 1) = f.from_int(d);
  return m;
}

/// X ↦ T X T⁻¹ on M_n in the E_ij basis.
Matrix conjugation_action(const Matrix& t) {
  const Field& f = t.field();
  const std::size_t n = t.rows();
  auto t_inv = inverse(t);
  if (!t_inv) throw ValidationError("conjugating matrix is singular");
  Matrix out(f, n * n, n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      Matrix e(f, n, n);
      e(k, l) = f.one();
      Vector img = (t * e * *t_inv).flatten();
      for (std::size_t r = 0; r < n * n; ++r) out(r, k * n + l) = img[r];
    }
  }
  return out;
}

/// Element k of C_n or S_n acting on F^n by permuting coordinates.
GroupAction permutation_action(const Field& f, const FiniteGroup& g, std::size_t n, bool symmetric) {
  GroupAction act{g, {}};
  for (std::size_t x = 0; x < g.order(); ++x) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = symmetric ? permutation_image(n, x, i) : (i + x) % n;
      m(j, i) = f.one();
    }
    act.matrices.push_back(std::move(m));
  }
  return act;
}

/// Reflection representation of S_3 (or its cyclic subgroup) on the
/// sum-zero vectors of F^3 in the basis e0 − e2, e1 − e2.
Matrix standard_rep(const Field& f, const std::vector<std::size_t>& perm) {
  Matrix m(f, 2, 2);
  for (std::size_t j = 0; j < 2; ++j) {
    Vector w = zero_vector(f, 3);
    w[perm[j]] += f.one();
    w[perm[2]] -= f.one();
    m(0, j) = w[0];
    m(1, j) = w[1];
  }
  return m;
}

GroupAction cyclic_power_action(const FiniteGroup& g, const Matrix& generator) {
  GroupAction act{g, {}};
  Matrix m = Matrix::identity(generator.field(), generator.rows());
  for (std::size_t x = 0; x < g.order(); ++x) {
    act.matrices.push_back(m);
    m = m * generator;
  }
  return act;
}

struct FunHRecipe {
  std::string group;
  std::function<Subgroup(const FiniteGroup&)> subgroup;
  std::string base;
  // φ(h) for h in the subgroup, given the base algebra's field.
  std::function<Matrix(const Field&, const FiniteGroup&, std::size_t)> phi;
};

Subgroup whole(const FiniteGroup& g) {
  Subgroup all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

Subgroup point_stabilizer(const FiniteGroup& g, std::size_t n, std::size_t point) {
  Subgroup h;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (permutation_image(n, x, point) == point) h.push_back(x);
  }
  return h;
}

Matrix identity_phi(const Field& f, std::size_t d) { return Matrix::identity(f, d); }

Matrix swap2(const Field& f) { return mat2(f, 0, 1, 1, 0); }

const std::map<std::string, FunHRecipe>& fun_h_recipes() {
  static const std::map<std::string, FunHRecipe> recipes = [] {
    std::map<std::string, FunHRecipe> r;
    auto trivial = [](const FiniteGroup& g) { return Subgroup{g.identity()}; };
    auto id_f = [](const Field& f, const FiniteGroup&, std::size_t) { return identity_phi(f, 1); };
    auto id_m2 = [](const Field& f, const FiniteGroup&, std::size_t) { return identity_phi(f, 4); };
    auto odd_swap = [](const Field& f, const FiniteGroup& g, std::size_t h) {
      const std::size_t n = g.order() == 6 ? 3 : 4;
      return permutation_is_odd(n, h) ? swap2(f) : identity_phi(f, 2);
    };
    auto nonidentity_swap = [](const Field& f, const FiniteGroup& g, std::size_t h) {
      return h == g.identity() ? identity_phi(f, 2) : swap2(f);
    };
    r["fun_h_C2_e_F"] = {"C2", trivial, "F", id_f};
    r["fun_h_C3_e_F"] = {"C3", trivial, "F", id_f};
    r["fun_h_C4_e_F"] = {"C4", trivial, "F", id_f};
    r["fun_h_V4_e_F"] = {"V4", trivial, "F", id_f};
    r["fun_h_S3_e_F"] = {"S3", trivial, "F", id_f};
    r["fun_h_S3_S2_F"] = {"S3", [](const FiniteGroup& g) { return point_stabilizer(g, 3, 2); }, "F", id_f};
    r["fun_h_S4_S3_F"] = {"S4", [](const FiniteGroup& g) { return point_stabilizer(g, 4, 3); }, "F", id_f};
    r["fun_h_C2_e_M2"] = {"C2", trivial, "M2", id_m2};
    r["fun_h_C3_C3_M2"] = {"C3", whole, "M2", [](const Field& f, const FiniteGroup&, std::size_t h) {
                             Matrix t = Matrix::identity(f, 2);
                             for (std::size_t i = 0; i < h; ++i) t = t * mat2(f, 0, -1, 1, -1);
                             return conjugation_action(t);
                           }};
    r["fun_h_C4_C2_M2"] = {"C4", [](const FiniteGroup& g) { return g.generated({2}); }, "M2",
                           [](const Field& f, const FiniteGroup&, std::size_t h) {
                             return h == 0 ? identity_phi(f, 4) : conjugation_action(swap2(f));
                           }};
    r["fun_h_C2_C2_F2swap"] = {"C2", whole, "F2swap", nonidentity_swap};
    r["fun_h_V4_C2_F2swap"] = {"V4", [](const FiniteGroup& g) { return g.generated({1}); }, "F2swap", nonidentity_swap};
    r["fun_h_S3_S2_F2swap"] = {"S3", [](const FiniteGroup& g) { return point_stabilizer(g, 3, 2); }, "F2swap", odd_swap};
    r["fun_h_S4_D4_F2swap"] = {"S4",
                               [](const FiniteGroup& g) {
                                 const std::size_t cycle = permutation_index(4, {1, 2, 3, 0});
                                 const std::size_t flip = permutation_index(4, {2, 1, 0, 3});
                                 return g.generated({cycle, flip});
                               },
                               "F2swap", odd_swap};
    return r;
  }();
  return recipes;
}

AlgebraPresentation fun_h_base(const std::string& base, const Field& f) {
  if (base == "F") return pointwise(f, 1);
  if (base == "M2") return matrix_algebra(f, 2);
  return pointwise(f, 2);
}

std::size_t parse_size(const std::string& s) { return static_cast<std::size_t>(std::stoul(s)); }

}  // namespace

AlgebraPresentation pointwise(const Field& f, std::size_t n) {
  if (n == 0) throw ValidationError("pointwise needs n >= 1");
  AlgebraPresentation a = with_mul(f, n, indexed_labels("e", n));
  for (std::size_t i = 0; i < n; ++i) a.coefficient(0, i, {i, i}) = f.one();
  return a;
}

AlgebraPresentation matrix_algebra(const Field& f, std::size_t n) {
  if (n == 0) throw ValidationError("matrix algebra needs n >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i) + std::to_string(j));
  }
  AlgebraPresentation a = with_mul(f, n * n, std::move(labels));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) a.coefficient(0, i * n + l, {i * n + j, j * n + l}) = f.one();
    }
  }
  return a;
}

AlgebraPresentation dual_numbers(const Field& f) {
  AlgebraPresentation a = with_mul(f, 2, {"1", "x"});
  a.coefficient(0, 0, {0, 0}) = f.one();
  a.coefficient(0, 1, {0, 1}) = f.one();
  a.coefficient(0, 1, {1, 0}) = f.one();
  return a;
}

AlgebraPresentation sl2(const Field& f) {
  if (f.characteristic() == 2) throw ValidationError("sl2 requires characteristic != 2");
  AlgebraPresentation a = with_mul(f, 3, {"h", "e", "f"});
  const std::size_t h = 0, e = 1, fi = 2;
  auto bracket = [&](std::size_t x, std::size_t y, std::size_t k, long long c) {
    a.coefficient(0, k, {x, y}) = f.from_int(c);
    a.coefficient(0, k, {y, x}) = f.from_int(-c);
  };
  bracket(h, e, e, 2);
  bracket(h, fi, fi, -2);
  bracket(e, fi, h, 1);
  return a;
}

AlgebraPresentation abelian_lie(const Field& f, std::size_t n) {
  if (n == 0) throw ValidationError("abelian_lie needs n >= 1");
  return with_mul(f, n, indexed_labels("x", n));
}

AlgebraPresentation group_algebra(const Field& f, const FiniteGroup& g) {
  AlgebraPresentation a = with_mul(f, g.order(), indexed_labels("g", g.order()));
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y = 0; y < g.order(); ++y) a.coefficient(0, g.mul(x, y), {x, y}) = f.one();
  }
  return a;
}

AlgebraPresentation nilpotent_chain(const Field& f, std::size_t n) {
  if (n == 0) throw ValidationError("nilpotent_chain needs n >= 1");
  AlgebraPresentation a = with_mul(f, n, indexed_labels("e", n, 1));
  // Index k holds e_{k+1}.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j + 1 < n; ++j) a.coefficient(0, i + j + 1, {i, j}) = f.one();
  }
  return a;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw ValidationError("cyclic group needs n >= 1");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(t), "C" + std::to_string(n));
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 4) throw ValidationError("symmetric group supported for 1 <= n <= 4");
  const auto perms = all_permutations(n);
  const std::size_t m = perms.size();
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroup(std::move(t), "S" + std::to_string(n));
}

FiniteGroup klein_four_group() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
  }
  return FiniteGroup(std::move(t), "V4");
}

FiniteGroup standard_group(const std::string& name) {
  static const std::regex pattern("([CS])([0-9]+)");
  std::smatch m;
  if (name == "V4") return klein_four_group();
  if (std::regex_match(name, m, pattern)) {
    const std::size_t n = parse_size(m[2]);
    return m[1] == "C" ? cyclic_group(n) : symmetric_group(n);
  }
  throw ValidationError("unknown group \"" + name + "\"");
}

std::size_t permutation_image(std::size_t n, std::size_t element, std::size_t x) {
  static const std::vector<std::vector<std::vector<std::size_t>>> cache = [] {
    std::vector<std::vector<std::vector<std::size_t>>> c(5);
    for (std::size_t k = 1; k <= 4; ++k) c[k] = all_permutations(k);
    return c;
  }();
  return cache.at(n).at(element).at(x);
}

bool permutation_is_odd(std::size_t n, std::size_t element) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (permutation_image(n, element, i) > permutation_image(n, element, j)) ++inversions;
    }
  }
  return inversions % 2 == 1;
}

Field field_from_name(const std::string& name) {
  if (name == "Q") return Field::rationals();
  static const std::regex pattern("F([0-9]{1,10})");
  std::smatch m;
  if (std::regex_match(name, m, pattern)) return Field::prime(std::stoull(m[1]));
  throw ValidationError("unknown field \"" + name + "\"");
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names = {
      "pointwise1",      "pointwise2",       "pointwise3",       "matrix2",          "matrix3",
      "dual_numbers",    "sl2",              "abelian_lie1",     "abelian_lie2",     "abelian_lie3",
      "nilpotent_chain2", "nilpotent_chain3", "group_algebra_C2", "group_algebra_C3", "group_algebra_V4",
      "group_algebra_S3", "pointwise3_C3",    "pointwise3_S3",    "abelian_lie1_C2",  "abelian_lie2_C3",
      "abelian_lie2_C4", "abelian_lie2_S3"};
  for (const auto& [name, recipe] : fun_h_recipes()) names.push_back(name);
  return names;
}

Preset build_preset(const std::string& full_name, const Field& field) {
  std::string name = full_name;
  Field f = field;
  if (auto at = name.find('@'); at != std::string::npos) {
    f = field_from_name(name.substr(at + 1));
    name = name.substr(0, at);
  }
  Preset out;
  out.name = name;
  static const std::regex sized("(pointwise|matrix|abelian_lie|nilpotent_chain)([0-9]{1,3})");
  static const std::regex grouped("group_algebra_([A-Z][0-9]+)");
  std::smatch m;

  if (auto it = fun_h_recipes().find(name); it != fun_h_recipes().end()) {
    const FunHRecipe& r = it->second;
    FiniteGroup g = standard_group(r.group);
    FunHSpec spec{r.group, r.subgroup(g), r.base, {}};
    for (std::size_t h : spec.H) spec.phi.push_back(r.phi(f, g, h));
    AlgebraPresentation b = fun_h_base(r.base, f);
    FunH fun = build_fun_H(g, spec.H, b, spec.phi);
    out.algebra = std::move(fun.algebra);
    out.action = std::move(fun.action);
    out.fun_h = std::move(spec);
  } else if (name == "pointwise3_C3") {
    out.algebra = pointwise(f, 3);
    out.action = permutation_action(f, cyclic_group(3), 3, false);
  } else if (name == "pointwise3_S3") {
    out.algebra = pointwise(f, 3);
    out.action = permutation_action(f, symmetric_group(3), 3, true);
  } else if (name == "abelian_lie1_C2") {
    out.algebra = abelian_lie(f, 1);
    Matrix sign(f, 1, 1);
    sign(0, 0) = f.from_int(-1);
    out.action = cyclic_power_action(cyclic_group(2), sign);
  } else if (name == "abelian_lie2_C3") {
    out.algebra = abelian_lie(f, 2);
    out.action = cyclic_power_action(cyclic_group(3), standard_rep(f, {1, 2, 0}));
  } else if (name == "abelian_lie2_C4") {
    out.algebra = abelian_lie(f, 2);
    out.action = cyclic_power_action(cyclic_group(4), mat2(f, 0, -1, 1, 0));
  } else if (name == "abelian_lie2_S3") {
    out.algebra = abelian_lie(f, 2);
    FiniteGroup g = symmetric_group(3);
    GroupAction act{g, {}};
    for (std::size_t x = 0; x < g.order(); ++x) {
      act.matrices.push_back(standard_rep(f, {permutation_image(3, x, 0), permutation_image(3, x, 1),
                                              permutation_image(3, x, 2)}));
    }
    out.action = std::move(act);
  } else if (name == "dual_numbers") {
    out.algebra = dual_numbers(f);
  } else if (name == "sl2") {
    out.algebra = sl2(f);
  } else if (std::regex_match(name, m, grouped)) {
    out.algebra = group_algebra(f, standard_group(m[1]));
  } else if (std::regex_match(name, m, sized)) {
    const std::size_t n = parse_size(m[2]);
    const std::string kind = m[1];
    if (kind == "pointwise") out.algebra = pointwise(f, n);
    if (kind == "matrix") out.algebra = matrix_algebra(f, n);
    if (kind == "abelian_lie") out.algebra = abelian_lie(f, n);
    if (kind == "nilpotent_chain") out.algebra = nilpotent_chain(f, n);
  } else {
    throw ValidationError("unknown preset \"" + full_name + "\"");
  }
  if (out.action) validate_action(out.algebra, *out.action);
  return out;
}

}  // namespace opalg

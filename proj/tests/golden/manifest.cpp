#include "manifest.hpp"

#include <algorithm>

#include "opalg/errors.hpp"
#include "opalg/lattice.hpp"
#include "opalg/presets.hpp"
#include "oracle.hpp"

namespace manifest {

namespace {

struct Slice {
  std::uint32_t p;
  std::size_t max_dim;
};

const Slice kSlices[] = {{2, 6}, {5, 4}};

template <typename Fn>
nlohmann::json for_each_preset(Fn&& describe) {
  nlohmann::json out = nlohmann::json::array();
  for (const Slice& s : kSlices) {
    const opalg::Field f = opalg::Field::prime(s.p);
    for (const auto& name : opalg::preset_names()) {
      opalg::Preset p;
      try {
        p = opalg::build_preset(name, f);
      } catch (const opalg::ValidationError&) {
        continue;
      }
      if (p.algebra.dim() > s.max_dim) continue;
      nlohmann::json entry = describe(p);
      entry["name"] = name;
      entry["field"] = f.name();
      entry["dim"] = p.algebra.dim();
      out.push_back(std::move(entry));
    }
  }
  return out;
}

bool invariant_points(const oracle::ModAlgebra& a, const opalg::Matrix& g, const oracle::PointSet& s) {
  for (oracle::Point x : s) {
    const oracle::ModVec v = a.decode(x);
    oracle::ModVec w(a.n, 0);
    for (std::size_t i = 0; i < a.n; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < a.n; ++j) acc += static_cast<std::uint64_t>(g(i, j).residue()) * v[j];
      w[i] = static_cast<std::uint32_t>(acc % a.p);
    }
    if (!std::binary_search(s.begin(), s.end(), a.encode(w))) return false;
  }
  return true;
}

bool has_products(const opalg::AlgebraPresentation& a) {
  for (const auto& op : a.ops()) {
    if (op.arity < 2) continue;
    for (const auto& c : op.tensor) {
      if (!c.is_zero()) return true;
    }
  }
  return false;
}

}  // namespace

nlohmann::json from_oracle() {
  return for_each_preset([](const opalg::Preset& p) {
    const auto m = oracle::from_presentation(p.algebra);
    const auto ideals = oracle::all_ideals(m);
    const auto rad = oracle::radical(m, ideals);
    const bool e_nonzero = has_products(p.algebra);
    nlohmann::json e;
    e["R_dim"] = oracle::operator_algebra_dim(m);
    e["J_dim"] = oracle::rank_mod(m.p, oracle::jacobson_radical(m));
    e["E_nonzero"] = e_nonzero;
    e["radical_dim"] = oracle::dimension(m, rad);
    e["semisimple"] = rad.size() == 1;
    e["simple"] = e_nonzero && ideals.size() == 2;
    e["ideal_count"] = ideals.size();
    if (rad.size() == 1) {
      std::vector<std::size_t> dims;
      for (const auto& i : oracle::minimal_ideals(ideals)) dims.push_back(oracle::dimension(m, i));
      std::sort(dims.begin(), dims.end());
      e["minimal_ideal_dims"] = dims;
    }
    if (p.action) {
      std::size_t invariant = 0;
      for (const auto& i : ideals) {
        bool fixed = true;
        for (const auto& g : p.action->matrices) fixed = fixed && invariant_points(m, g, i);
        if (fixed) ++invariant;
      }
      e["simple_equivariant"] = e_nonzero && invariant == 2;
    }
    return e;
  });
}

nlohmann::json from_library() {
  return for_each_preset([](const opalg::Preset& p) {
    const opalg::AlgebraPresentation& a = p.algebra;
    const opalg::OperatorAlgebras ops = opalg::build_operator_algebras(a);
    const opalg::RadicalReport rad = opalg::radical(a, ops);
    nlohmann::json e;
    e["R_dim"] = ops.R.dim();
    e["J_dim"] = rad.jacobson_radical_of_R.dim();
    e["E_nonzero"] = !ops.E.is_zero();
    e["radical_dim"] = rad.radical.dim();
    e["semisimple"] = rad.radical.is_zero();
    e["simple"] = opalg::is_simple(a);
    e["ideal_count"] = opalg::ideal_lattice(a).size();
    if (rad.radical.is_zero()) {
      std::vector<std::size_t> dims;
      for (const auto& s : opalg::minimal_ideal_decomposition(a).summands) dims.push_back(s.dim());
      std::sort(dims.begin(), dims.end());
      e["minimal_ideal_dims"] = dims;
    }
    if (p.action) e["simple_equivariant"] = opalg::is_simple_equivariant(a, *p.action);
    return e;
  });
}

}  // namespace manifest

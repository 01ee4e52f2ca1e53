#include "opalg/report.hpp"

#include <sstream>

#include "opalg/errors.hpp"
#include "opalg/lattice.hpp"

namespace opalg {

namespace {

Json algebra_summary(const AlgebraPresentation& a) {
  Json ops = Json::array();
  for (const auto& op : a.ops()) ops.push_back({{"name", op.name}, {"arity", op.arity}});
  return {{"dim", a.dim()}, {"field", field_to_json(a.field())}, {"ops", ops}};
}

Json subgroup_json(const Subgroup& h) { return Json(h); }

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

std::string inline_value(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_value(j[i]);
    return s + "]";
  }
  return j.dump();
}

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !is_scalar_array(value)) {
        out << indent << key << ":\n";
        render(value, indent + "  ", out);
      } else {
        out << indent << key << ": " << inline_value(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    if (j.empty()) out << indent << "[]\n";
    for (const auto& e : j) {
      if (e.is_structured() && !is_scalar_array(e)) {
        out << indent << "-\n";
        render(e, indent + "  ", out);
      } else {
        out << indent << "- " << inline_value(e) << "\n";
      }
    }
  } else {
    out << indent << inline_value(j) << "\n";
  }
}

}  // namespace

Json analyze_report(const PresentationFile& p, const ReportOptions& opt) {
  const AlgebraPresentation& a = p.algebra;
  OperatorAlgebras ops = build_operator_algebras(a);
  verify_operator_algebras(ops);
  RadicalReport rad = radical(a, ops);
  const bool semisimple = rad.radical.is_zero();
  Json r;
  r["command"] = "analyze";
  r["algebra"] = algebra_summary(a);
  r["operator_algebras"] = {{"L_dim", ops.L.dim()}, {"E_dim", ops.E.dim()}, {"R_dim", ops.R.dim()},
                            {"E_nonzero", !ops.E.is_zero()}};
  r["jacobson_radical_dim"] = rad.jacobson_radical_of_R.dim();
  r["radical_dim"] = rad.radical.dim();
  r["semisimple"] = semisimple;
  r["simple"] = is_simple(a);
  if (semisimple && a.dim() > 0) {
    Json dims = Json::array();
    for (const auto& s : minimal_ideal_decomposition(a).summands) dims.push_back(s.dim());
    r["minimal_ideal_dims"] = dims;
  }
  if (p.action) r["simple_equivariant"] = is_simple_equivariant(a, *p.action);
  const std::uint32_t ch = a.field().characteristic();
  if (ch != 0 && a.dim() < 32 && subspace_count(ch, a.dim()) <= opt.enumeration_limit) {
    Json dims = Json::array();
    const auto ideals = ideal_lattice(a, opt.threads, opt.seed);
    for (const auto& s : ideals) dims.push_back(s.dim());
    r["ideal_lattice"] = {{"count", ideals.size()}, {"dims", dims}};
  }
  return r;
}

Json radical_report(const PresentationFile& p) {
  RadicalReport rad = radical(p.algebra);
  Json r;
  r["command"] = "radical";
  r["jacobson_radical_dim"] = rad.jacobson_radical_of_R.dim();
  r["module_radical"] = subspace_to_json(rad.module_radical);
  r["radical"] = subspace_to_json(rad.radical);
  r["radical_dim"] = rad.radical.dim();
  r["semisimple_part"] = presentation_to_json(rad.semisimple_part);
  r["projection"] = matrix_to_json(rad.projection);
  return r;
}

Json decompose_report(const PresentationFile& p) {
  Decomposition d = minimal_ideal_decomposition(p.algebra);
  Json summands = Json::array();
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    summands.push_back({{"basis", subspace_to_json(d.summands[i])},
                        {"dim", d.summands[i].dim()},
                        {"idempotent", matrix_to_json(d.idempotents[i])}});
  }
  return {{"command", "decompose"}, {"summands", summands}, {"summand_count", d.summands.size()}};
}

Json classify_report(const PresentationFile& p) {
  if (!p.action) throw ValidationError("classify needs a group action");
  ClassificationResult c = classify(p.algebra, *p.action);
  Json phi = Json::array();
  for (const auto& m : c.phi) phi.push_back(matrix_to_json(m));
  Json r;
  r["command"] = "classify";
  r["H"] = subgroup_json(c.H);
  r["H_order"] = c.H.size();
  r["phi"] = phi;
  r["B"] = presentation_to_json(c.B);
  r["B_summand"] = subspace_to_json(c.B_summand);
  r["psi"] = matrix_to_json(c.psi);
  r["coset_reps"] = c.coset_reps;
  r["verification"] = {{"psi_invertible", c.psi_invertible},
                       {"psi_equivariant", c.psi_equivariant},
                       {"psi_preserves_ops", c.psi_preserves_ops},
                       {"stabilizers_conjugate", c.stabilizers_conjugate},
                       {"transitive_on_minimal_ideals", c.transitive}};
  return r;
}

Json check_ideal_report(const PresentationFile& p, const Subspace& ideal) {
  const bool by_module = is_ideal(p.algebra, ideal);
  const bool by_definition = is_ideal_by_definition(p.algebra, ideal);
  if (by_module != by_definition) {
    throw TheoremViolation(std::string("ideal tests disagree: submodule test = ") + (by_module ? "true" : "false") +
                           ", definition test = " + (by_definition ? "true" : "false"));
  }
  Json r;
  r["command"] = "check-ideal";
  r["ideal"] = subspace_to_json(ideal);
  r["ideal_dim"] = ideal.dim();
  r["submodule_test"] = by_module;
  r["definition_test"] = by_definition;
  r["agree"] = true;
  r["generated_ideal"] = subspace_to_json(ideal_generated_by(p.algebra, ideal));
  if (p.action && by_module) r["invariant"] = is_invariant_ideal(p.algebra, *p.action, ideal);
  return r;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

}  // namespace opalg

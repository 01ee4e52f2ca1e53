#include "opalg/io.hpp"

#include <algorithm>

#include "opalg/errors.hpp"

namespace opalg {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ValidationError((path.empty() ? std::string("/") : path) + ": " + msg);
}

const Json& member(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing key \"" + key + "\"");
  return *it;
}

std::size_t read_size(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

const Json& read_array(const Json& j, std::size_t expected, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != expected) {
    fail(path, "expected " + std::to_string(expected) + " entries, found " + std::to_string(j.size()));
  }
  return j;
}

Field read_field(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) {
      const auto s = j.get<std::string>();
      if (s == "Q") return Field::rationals();
      if (s.size() > 1 && s[0] == 'F') return Field::prime(std::stoull(s.substr(1)));
    } else if (j.is_object()) {
      return Field::prime(read_size(member(j, "Fp", path), path + "/Fp"));
    }
  } catch (const ValidationError& e) {
    fail(path, e.what());
  } catch (const std::logic_error&) {
  }
  fail(path, "field must be \"Q\" or {\"Fp\": p}");
}

Scalar read_scalar(const Json& j, const Field& f, const std::string& path) {
  try {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
  fail(path, "scalar must be a string such as \"3\", \"-1/2\" or \"4 mod 5\"");
}

Matrix read_matrix(const Json& j, const Field& f, std::size_t rows, std::size_t cols, const std::string& path) {
  read_array(j, rows, path);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "/" + std::to_string(r);
    read_array(j[r], cols, rp);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = read_scalar(j[r][c], f, rp + "/" + std::to_string(c));
  }
  return m;
}

void read_tensor(const Json& j, const Field& f, std::size_t dim, std::size_t depth, const std::string& path,
                 std::vector<Scalar>& out) {
  if (depth == 0) {
    out.push_back(read_scalar(j, f, path));
    return;
  }
  read_array(j, dim, path);
  for (std::size_t i = 0; i < dim; ++i) read_tensor(j[i], f, dim, depth - 1, path + "/" + std::to_string(i), out);
}

Json write_tensor(const std::vector<Scalar>& t, std::size_t dim, std::size_t depth, std::size_t& pos) {
  if (depth == 0) return scalar_to_json(t[pos++]);
  Json arr = Json::array();
  for (std::size_t i = 0; i < dim; ++i) arr.push_back(write_tensor(t, dim, depth - 1, pos));
  return arr;
}

}  // namespace

PresentationFile presentation_from_json(const Json& doc) {
  if (!doc.is_object()) fail("", "presentation must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    static const std::vector<std::string> known = {"field", "dim", "ops", "unary", "group", "labels"};
    if (std::find(known.begin(), known.end(), key) == known.end()) fail("/" + key, "unknown key");
  }
  const Field f = read_field(member(doc, "field", ""), "/field");
  const std::size_t dim = read_size(member(doc, "dim", ""), "/dim");
  PresentationFile out{AlgebraPresentation(f, dim), std::nullopt};

  const Json& ops = member(doc, "ops", "");
  if (!ops.is_array()) fail("/ops", "expected an array");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const std::string p = "/ops/" + std::to_string(i);
    const Json& name = member(ops[i], "name", p);
    if (!name.is_string() || name.get<std::string>().empty()) fail(p + "/name", "expected a non-empty string");
    const std::size_t arity = read_size(member(ops[i], "arity", p), p + "/arity");
    if (arity == 0) fail(p + "/arity", "nullary operations are not supported");
    if (arity > 8) fail(p + "/arity", "arity above 8 is not supported");
    std::vector<Scalar> tensor;
    read_tensor(member(ops[i], "tensor", p), f, dim, arity + 1, p + "/tensor", tensor);
    try {
      out.algebra.add_op(name.get<std::string>(), arity, std::move(tensor));
    } catch (const ValidationError& e) {
      fail(p, e.what());
    }
  }

  if (auto it = doc.find("unary"); it != doc.end()) {
    if (!it->is_array()) fail("/unary", "expected an array of operation names");
    std::vector<std::string> listed, actual;
    for (const auto& n : *it) {
      if (!n.is_string()) fail("/unary", "expected operation names");
      listed.push_back(n.get<std::string>());
    }
    for (std::size_t i : out.algebra.unary_ops()) actual.push_back(out.algebra.op(i).name);
    std::sort(listed.begin(), listed.end());
    std::sort(actual.begin(), actual.end());
    if (listed != actual) fail("/unary", "must list exactly the operations of arity 1");
  }

  if (auto it = doc.find("labels"); it != doc.end()) {
    read_array(*it, dim, "/labels");
    std::vector<std::string> labels;
    for (const auto& l : *it) {
      if (!l.is_string()) fail("/labels", "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    out.algebra.set_labels(std::move(labels));
  }

  if (auto it = doc.find("group"); it != doc.end()) {
    const Json& g = *it;
    const std::size_t order = read_size(member(g, "order", "/group"), "/group/order");
    if (order == 0) fail("/group/order", "group order must be positive");
    const Json& mult = read_array(member(g, "mult", "/group"), order, "/group/mult");
    std::vector<std::vector<std::size_t>> table(order);
    for (std::size_t r = 0; r < order; ++r) {
      const std::string rp = "/group/mult/" + std::to_string(r);
      read_array(mult[r], order, rp);
      for (std::size_t c = 0; c < order; ++c) table[r].push_back(read_size(mult[r][c], rp + "/" + std::to_string(c)));
    }
    GroupAction action;
    try {
      action.group = FiniteGroup(std::move(table));
    } catch (const ValidationError& e) {
      fail("/group/mult", e.what());
    }
    const Json& mats = read_array(member(g, "action", "/group"), order, "/group/action");
    for (std::size_t x = 0; x < order; ++x) {
      action.matrices.push_back(read_matrix(mats[x], f, dim, dim, "/group/action/" + std::to_string(x)));
    }
    try {
      validate_action(out.algebra, action);
    } catch (const ValidationError& e) {
      fail("/group/action", e.what());
    }
    out.action = std::move(action);
  }
  return out;
}

PresentationFile parse_presentation(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return presentation_from_json(doc);
}

Json presentation_to_json(const AlgebraPresentation& a) { return presentation_to_json(PresentationFile{a, std::nullopt}); }

Json presentation_to_json(const PresentationFile& p) {
  const AlgebraPresentation& a = p.algebra;
  Json doc;
  doc["field"] = field_to_json(a.field());
  doc["dim"] = a.dim();
  doc["ops"] = Json::array();
  doc["unary"] = Json::array();
  for (const auto& op : a.ops()) {
    std::size_t pos = 0;
    doc["ops"].push_back({{"name", op.name}, {"arity", op.arity}, {"tensor", write_tensor(op.tensor, a.dim(), op.arity + 1, pos)}});
    if (op.arity == 1) doc["unary"].push_back(op.name);
  }
  if (!a.labels().empty()) doc["labels"] = a.labels();
  if (p.action) {
    Json mats = Json::array();
    for (const auto& m : p.action->matrices) mats.push_back(matrix_to_json(m));
    doc["group"] = {{"order", p.action->group.order()}, {"mult", p.action->group.table()}, {"action", mats}};
  }
  return doc;
}

Subspace parse_subspace(const std::string& text, const Field& f, std::size_t ambient) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  std::string path;
  const Json* basis = &doc;
  if (doc.is_object()) {
    basis = &member(doc, "basis", "");
    path = "/basis";
  }
  if (!basis->is_array()) fail(path, "expected a list of basis vectors");
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const std::string vp = path + "/" + std::to_string(i);
    read_array((*basis)[i], ambient, vp);
    Vector v;
    for (std::size_t k = 0; k < ambient; ++k) v.push_back(read_scalar((*basis)[i][k], f, vp + "/" + std::to_string(k)));
    gens.push_back(std::move(v));
  }
  return Subspace::span(f, ambient, gens);
}

Json field_to_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return Json{{"Fp", f.characteristic()}};
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Json vector_to_json(std::span<const Scalar> v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(scalar_to_json(s));
  return arr;
}

Json matrix_to_json(const Matrix& m) {
  Json arr = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) arr.push_back(vector_to_json(m.row(r)));
  return arr;
}

Json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace opalg

#include "higauge/io.hpp"

#include <bit>
#include <fstream>

#include <nlohmann/json.hpp>

namespace higauge {

namespace {

json ratmat_to_json(const RatMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

RatMat ratmat_from_json(const json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j[0].size()) : 0;
  RatMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m(i, c) = parse_rat(j[i][c].get<std::string>());
  return m;
}

json polymat_to_json(const PolyMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

PolyMat polymat_from_json(const json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j[0].size()) : 0;
  PolyMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m(i, c) = Poly::parse(j[i][c].get<std::string>());
  return m;
}

json tensor_to_json(const Tensor3& t) {
  json out = json::array();
  for (int a = 0; a < t.dim0(); ++a) {
    json ja = json::array();
    for (int b = 0; b < t.dim1(); ++b) {
      json jb = json::array();
      for (int c = 0; c < t.dim2(); ++c) jb.push_back(to_string(t(a, b, c)));
      ja.push_back(jb);
    }
    out.push_back(ja);
  }
  return out;
}

Tensor3 tensor_from_json(const json& j) {
  int d0 = static_cast<int>(j.size());
  int d1 = d0 ? static_cast<int>(j[0].size()) : 0;
  int d2 = d1 ? static_cast<int>(j[0][0].size()) : 0;
  Tensor3 t(d0, d1, d2);
  for (int a = 0; a < d0; ++a)
    for (int b = 0; b < d1; ++b)
      for (int c = 0; c < d2; ++c) t(a, b, c) = parse_rat(j[a][b][c].get<std::string>());
  return t;
}

}  // namespace

json algebra_to_json(const LieAlgebra& alg) {
  json j;
  j["name"] = alg.name();
  j["ambient"] = alg.ambient();
  json basis = json::array();
  json names = json::array();
  for (int i = 0; i < alg.dim(); ++i) {
    basis.push_back(ratmat_to_json(alg.basis_matrix(i)));
    names.push_back(alg.basis_name(i));
  }
  j["basis"] = basis;
  j["basis_names"] = names;
  if (!alg.structure().empty()) j["structure_constants"] = tensor_to_json(alg.structure());
  return j;
}

LieAlgebra algebra_from_json(const json& j) {
  std::vector<RatMat> basis;
  for (const auto& b : j.at("basis")) basis.push_back(ratmat_from_json(b));
  std::vector<std::string> names;
  if (j.contains("basis_names"))
    for (const auto& n : j["basis_names"]) names.push_back(n.get<std::string>());
  LieAlgebra alg(j.at("name").get<std::string>(), j.at("ambient").get<int>(), std::move(basis),
                 std::move(names));
  if (j.contains("structure_constants"))
    alg.set_structure(tensor_from_json(j["structure_constants"]));
  else
    alg.finalize();
  return alg;
}

json module_to_json(const CrossedModule& xm) {
  json j;
  j["name"] = xm.name;
  j["g"] = algebra_to_json(xm.g);
  j["h"] = algebra_to_json(xm.h);
  j["alpha"] = ratmat_to_json(xm.alpha);
  j["action"] = tensor_to_json(xm.action);
  switch (xm.group_kind) {
    case GroupActionKind::Conjugation: j["group_action"] = "conjugation"; break;
    case GroupActionKind::DefiningRep: j["group_action"] = "defining-rep"; break;
    case GroupActionKind::None: j["group_action"] = "none"; break;
  }
  return j;
}

CrossedModulePtr module_from_json(const json& j) {
  auto xm = std::make_shared<CrossedModule>();
  xm->name = j.value("name", "unnamed");
  xm->g = algebra_from_json(j.at("g"));
  xm->h = algebra_from_json(j.at("h"));
  xm->alpha = ratmat_from_json(j.at("alpha"));
  xm->action = tensor_from_json(j.at("action"));
  std::string kind = j.value("group_action", "none");
  if (kind == "conjugation") xm->group_kind = GroupActionKind::Conjugation;
  else if (kind == "defining-rep") xm->group_kind = GroupActionKind::DefiningRep;
  else xm->group_kind = GroupActionKind::None;
  return xm;
}

CrossedModulePtr resolve_module(const std::string& name_or_path) {
  for (const auto& name : builtin_module_names())
    if (name == name_or_path) return builtin_module(name_or_path);
  std::ifstream in(name_or_path);
  if (!in) throw Error(ErrorKind::Structural, "unknown fixture and unreadable path: " + name_or_path);
  json j;
  in >> j;
  return module_from_json(j);
}

json form_to_json(const PolyForm& f) {
  json j;
  j["patch_dim"] = f.patch_dim();
  j["degree"] = f.degree();
  switch (f.kind()) {
    case VKind::Scalar: j["value_space"] = "scalar"; break;
    case VKind::AlgG: j["value_space"] = "g"; break;
    case VKind::AlgH: j["value_space"] = "h"; break;
    case VKind::Matrix: j["value_space"] = "matrix"; break;
  }
  json terms = json::array();
  for (const auto& [mask, vals] : f.terms()) {
    json idx = json::array();
    for (int b = 0; b < 32; ++b)
      if (mask & (1u << b)) idx.push_back(b + 1);
    for (int i = 0; i < f.value_dim(); ++i) {
      if (vals[i].is_zero()) continue;
      json term;
      term["index"] = idx;
      term["basis"] = i;
      term["coeff"] = vals[i].str();
      terms.push_back(term);
    }
  }
  j["terms"] = terms;
  return j;
}

PolyForm form_from_json(const json& j, const CrossedModulePtr& xm) {
  int d = j.at("patch_dim").get<int>();
  int k = j.at("degree").get<int>();
  std::string vs = j.at("value_space").get<std::string>();
  PolyForm f;
  if (vs == "scalar") f = PolyForm::scalar_zero(d, k);
  else if (vs == "g") f = PolyForm::zero(d, k, VKind::AlgG, xm);
  else if (vs == "h") f = PolyForm::zero(d, k, VKind::AlgH, xm);
  else throw Error(ErrorKind::Structural, "unsupported value space in fixture: " + vs);
  for (const auto& term : j.at("terms")) {
    uint32_t mask = 0;
    for (const auto& ix : term.at("index")) {
      int one_based = ix.get<int>();
      if (one_based < 1 || one_based > d)
        throw Error(ErrorKind::Structural, "multi-index entry out of range");
      mask |= 1u << (one_based - 1);
    }
    if (std::popcount(mask) != k)
      throw Error(ErrorKind::Structural, "multi-index must be strictly increasing of length k");
    f.accumulate(mask, term.at("basis").get<int>(), Poly::parse(term.at("coeff").get<std::string>()));
  }
  return f;
}

json connection_to_json(const TwoConnection& c) {
  json j;
  j["A"] = form_to_json(c.A);
  j["B"] = form_to_json(c.B);
  return j;
}

TwoConnection connection_from_json(const json& j, const CrossedModulePtr& xm) {
  TwoConnection c{form_from_json(j.at("A"), xm), form_from_json(j.at("B"), xm)};
  c.check();
  return c;
}

json group_to_json(const GroupMap& g) {
  json j;
  switch (g.kind()) {
    case GroupMap::Kind::Identity: j["kind"] = "identity"; break;
    case GroupMap::Kind::Constant: j["kind"] = "constant"; break;
    case GroupMap::Kind::Unipotent: j["kind"] = "unipotent"; break;
    case GroupMap::Kind::Product: j["kind"] = "product"; break;
  }
  if (g.kind() == GroupMap::Kind::Unipotent) j["nilpotent"] = polymat_to_json(g.nilpotent());
  else {
    j["matrix"] = polymat_to_json(g.matrix());
    j["inverse"] = polymat_to_json(g.inverse());
  }
  return j;
}

GroupMap group_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "unipotent") return GroupMap::unipotent(polymat_from_json(j.at("nilpotent")));
  PolyMat g = polymat_from_json(j.at("matrix"));
  if (kind == "identity") return GroupMap::identity(g.rows());
  if (kind == "constant") {
    RatMat m(g.rows(), g.cols());
    for (int r = 0; r < g.rows(); ++r)
      for (int c = 0; c < g.cols(); ++c) m(r, c) = g(r, c).constant_value();
    return GroupMap::constant(m);
  }
  return GroupMap::from_matrices(std::move(g), polymat_from_json(j.at("inverse")));
}

json gauge_to_json(const GaugeData& gd) {
  json j;
  j["g"] = group_to_json(gd.g);
  j["phi"] = form_to_json(gd.phi);
  return j;
}

GaugeData gauge_from_json(const json& j, const CrossedModulePtr& xm) {
  return {group_from_json(j.at("g")), form_from_json(j.at("phi"), xm)};
}

json report_to_json(const ValidationReport& rep) {
  json j;
  j["ok"] = rep.ok();
  json items = json::array();
  for (const auto& it : rep.items) {
    json o;
    o["check"] = it.check;
    o["indices"] = it.indices;
    o["detail"] = it.detail;
    items.push_back(o);
  }
  j["violations"] = items;
  return j;
}

}  // namespace higauge

#include "lie/json_io.hpp"

namespace lie {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error("JSON schema violation at '" + path + "': " + what);
}

const Json& need(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) bad(path + "." + key, "missing");
  return j.at(key);
}

int need_int(const Json& j, const char* key, const std::string& path) {
  const Json& v = need(j, key, path);
  if (!v.is_number_integer()) bad(path + "." + key, "expected an integer");
  return v.get<int>();
}

std::string need_str(const Json& j, const char* key, const std::string& path) {
  const Json& v = need(j, key, path);
  if (!v.is_string()) bad(path + "." + key, "expected a string");
  return v.get<std::string>();
}

Json exact_matrix_json(const ExactMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMat exact_matrix_parse(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) bad(path, "expected a non-empty matrix");
  int rows = int(j.size());
  if (!j[0].is_array() || j[0].empty()) bad(path + "[0]", "expected a row array");
  int cols = int(j[0].size());
  ExactMat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[size_t(r)].is_array() || int(j[size_t(r)].size()) != cols)
      bad(path + "[" + std::to_string(r) + "]", "ragged matrix row");
    for (int c = 0; c < cols; ++c) {
      const Json& e = j[size_t(r)][size_t(c)];
      if (!e.is_string())
        bad(path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]",
            "expected a complex string");
      m(r, c) = ExactScalar::parse(e.get<std::string>());
    }
  }
  return m;
}

}  // namespace

Json algebra_to_json(const LieAlgebra& g) {
  Json j;
  j["name"] = g.name;
  j["field"] = field_name(g.field);
  j["dim"] = g.dim;
  j["basis_labels"] = g.basis_labels;
  Json sc = Json::array();
  for (int i = 0; i < g.dim; ++i)
    for (int jj = 0; jj < g.dim; ++jj)
      for (int k = 0; k < g.dim; ++k) {
        const ExactScalar& v = g.c.at(i, jj, k);
        if (v.is_zero()) continue;
        sc.push_back(Json::array({i, jj, k, rat_str(v.re), rat_str(v.im)}));
      }
  j["structure_constants"] = std::move(sc);
  if (g.realization) {
    Json rs = Json::array();
    for (const auto& m : *g.realization) rs.push_back(exact_matrix_json(m));
    j["realization"] = std::move(rs);
  }
  return j;
}

LieAlgebra algebra_from_json(const Json& j) {
  const std::string path = "algebra";
  LieAlgebra g;
  g.name = need_str(j, "name", path);
  std::string f = need_str(j, "field", path);
  if (f == "R")
    g.field = FieldTag::Real;
  else if (f == "C")
    g.field = FieldTag::Complex;
  else
    bad(path + ".field", "expected \"R\" or \"C\"");
  g.dim = need_int(j, "dim", path);
  if (g.dim <= 0) bad(path + ".dim", "expected a positive integer");
  const Json& labels = need(j, "basis_labels", path);
  if (!labels.is_array() || int(labels.size()) != g.dim)
    bad(path + ".basis_labels", "expected " + std::to_string(g.dim) + " strings");
  for (const auto& l : labels) {
    if (!l.is_string()) bad(path + ".basis_labels", "expected strings");
    g.basis_labels.push_back(l.get<std::string>());
  }
  g.c = StructureConstants(g.dim);
  const Json& sc = need(j, "structure_constants", path);
  if (!sc.is_array()) bad(path + ".structure_constants", "expected an array");
  for (size_t e = 0; e < sc.size(); ++e) {
    const std::string epath = path + ".structure_constants[" + std::to_string(e) + "]";
    const Json& ent = sc[e];
    if (!ent.is_array() || ent.size() != 5) bad(epath, "expected [i, j, k, re, im]");
    int i = ent[0].get<int>(), jj = ent[1].get<int>(), k = ent[2].get<int>();
    if (i < 0 || i >= g.dim || jj < 0 || jj >= g.dim || k < 0 || k >= g.dim)
      bad(epath, "index out of range");
    if (!ent[3].is_string() || !ent[4].is_string()) bad(epath, "re/im must be rational strings");
    g.c.at(i, jj, k) = {rat_parse(ent[3].get<std::string>()),
                        rat_parse(ent[4].get<std::string>())};
  }
  if (j.contains("realization")) {
    const Json& rs = j.at("realization");
    if (!rs.is_array() || int(rs.size()) != g.dim)
      bad(path + ".realization", "expected " + std::to_string(g.dim) + " matrices");
    std::vector<ExactMat> ms;
    for (size_t m = 0; m < rs.size(); ++m)
      ms.push_back(exact_matrix_parse(rs[m], path + ".realization[" + std::to_string(m) + "]"));
    g.realization = std::move(ms);
  }
  return g;
}

Json morphism_to_json(const AlgebraMorphism& m) {
  Json j;
  j["source"] = algebra_to_json(m.source);
  j["target"] = algebra_to_json(m.target);
  j["linearity"] = m.linearity == Linearity::Linear ? "linear" : "antilinear";
  j["matrix"] = exact_matrix_json(m.T);
  return j;
}

AlgebraMorphism morphism_from_json(const Json& j) {
  const std::string path = "morphism";
  AlgebraMorphism m;
  m.source = algebra_from_json(need(j, "source", path));
  m.target = algebra_from_json(need(j, "target", path));
  std::string lin = need_str(j, "linearity", path);
  if (lin == "linear")
    m.linearity = Linearity::Linear;
  else if (lin == "antilinear")
    m.linearity = Linearity::CoordinateAntilinear;
  else
    bad(path + ".linearity", "expected \"linear\" or \"antilinear\"");
  m.T = exact_matrix_parse(need(j, "matrix", path), path + ".matrix");
  if (m.T.rows() != m.target.dim || m.T.cols() != m.source.dim)
    bad(path + ".matrix", "shape does not match target dim x source dim");
  return m;
}

namespace {

template <class S>
Json rep_json_impl(const BasicRep<S>& r, const char* backend) {
  Json j;
  j["algebra"] = r.algebra.name;
  if (r.label)
    j["label"] = Json::array({r.label->j1.twice, r.label->j2.twice});
  else
    j["label"] = nullptr;
  j["dim"] = r.dim;
  j["backend"] = backend;
  Json gens = Json::array();
  for (const auto& m : r.rho) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (int k = 0; k < m.cols(); ++k) {
        if constexpr (ScalarOps<S>::exact)
          row.push_back(m(i, k).str());
        else
          row.push_back(cplx_str(m(i, k)));
      }
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
  }
  j["generators"] = std::move(gens);
  j["basis_labels"] = r.basis_labels;
  return j;
}

}  // namespace

Json rep_to_json(const ExactRep& r) { return rep_json_impl(r, "exact"); }
Json rep_to_json(const NumericRep& r) { return rep_json_impl(r, "float"); }

Json field_to_json(const SampledField& f) {
  Json j;
  if (f.rep.kind == FieldRep::Kind::Dirac)
    j["rep_label"] = "dirac";
  else
    j["rep_label"] = Json::array({f.rep.label.j1.twice, f.rep.label.j2.twice});
  Json grid;
  grid["origin"] = f.grid.origin;
  grid["spacing"] = f.grid.spacing;
  grid["extents"] = f.grid.extents;
  j["grid"] = std::move(grid);
  Json vals = Json::array();
  for (const auto& v : f.values) vals.push_back(cplx_str(v));
  j["values"] = std::move(vals);
  if (!f.mask.empty()) {
    Json mask = Json::array();
    for (auto m : f.mask) mask.push_back(int(m));
    j["mask"] = std::move(mask);
  }
  return j;
}

SampledField field_from_json(const Json& j) {
  const std::string path = "field";
  SampledField f;
  const Json& label = need(j, "rep_label", path);
  if (label.is_string() && label.get<std::string>() == "dirac") {
    f.rep.kind = FieldRep::Kind::Dirac;
  } else if (label.is_array() && label.size() == 2 && label[0].is_number_integer() &&
             label[1].is_number_integer()) {
    f.rep.kind = FieldRep::Kind::Irrep;
    f.rep.label = IrrepLabel{HalfInt(label[0].get<int>()), HalfInt(label[1].get<int>())};
  } else {
    bad(path + ".rep_label", "expected [2*j1, 2*j2] or \"dirac\"");
  }
  const Json& grid = need(j, "grid", path);
  auto quad = [&](const char* key, auto& out, bool positive) {
    const Json& v = need(grid, key, path + ".grid");
    if (!v.is_array() || v.size() != 4) bad(path + ".grid." + key, "expected 4 numbers");
    for (int a = 0; a < 4; ++a) {
      if (!v[size_t(a)].is_number()) bad(path + ".grid." + key, "expected numbers");
      out[size_t(a)] = v[size_t(a)].get<std::remove_reference_t<decltype(out[0])>>();
      if (positive && !(out[size_t(a)] > 0)) bad(path + ".grid." + key, "entries must be > 0");
    }
  };
  quad("origin", f.grid.origin, false);
  quad("spacing", f.grid.spacing, true);
  quad("extents", f.grid.extents, true);
  const Json& vals = need(j, "values", path);
  long long expect = f.grid.points() * f.rep.dimension();
  if (!vals.is_array() || (long long)(vals.size()) != expect)
    bad(path + ".values", "expected " + std::to_string(expect) + " complex strings");
  for (const auto& v : vals) {
    if (!v.is_string()) bad(path + ".values", "expected complex strings");
    f.values.push_back(cplx_parse(v.get<std::string>()));
  }
  if (j.contains("mask")) {
    const Json& mask = j.at("mask");
    if (!mask.is_array() || (long long)(mask.size()) != f.grid.points())
      bad(path + ".mask", "expected one flag per lattice point");
    for (const auto& m : mask) f.mask.push_back(m.get<int>() != 0 ? 1 : 0);
  }
  return f;
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["subject"] = r.subject;
  j["context"] = r.context;
  j["backend"] = r.exact ? "exact" : "float";
  j["status"] = r.pass ? "pass" : "fail";
  j["residual"] = r.residual;
  j["details"] = r.details;
  return j;
}

Json cmat_to_json(const CMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(cplx_str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lie

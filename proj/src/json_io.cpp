#include "minkit/json_io.hpp"

namespace mink {

json to_json(const Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Vec vec_from_json(const json& j) {
  require(j.is_array(), "json vector: expected an array");
  Vec v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = j[i].get<double>();
  return v;
}

Mat mat_from_json(const json& j) {
  require(j.is_array() && !j.empty() && j[0].is_array(), "json matrix: expected array of arrays");
  Mat m(j.size(), j[0].size());
  for (size_t i = 0; i < j.size(); ++i) {
    require(j[i].size() == j[0].size(), "json matrix: ragged rows");
    for (size_t k = 0; k < j[i].size(); ++k)
      m(static_cast<int>(i), static_cast<int>(k)) = j[i][k].get<double>();
  }
  return m;
}

json to_json(const NormModel& model) {
  json j;
  j["dim"] = model.dim();
  switch (model.kind()) {
    case NormModel::Kind::Lp:
      j["kind"] = "lp";
      j["p"] = model.p();
      break;
    case NormModel::Kind::Quadratic:
      j["kind"] = "quadratic";
      j["G"] = to_json(model.G());
      break;
    case NormModel::Kind::Polytopal: {
      j["kind"] = "polytopal";
      json verts = json::array();
      for (const Vec& v : model.vertices()) verts.push_back(to_json(v));
      j["V"] = verts;
      break;
    }
  }
  return j;
}

NormModel model_from_json(const json& j) {
  require(j.contains("kind"), "model json: missing kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "lp") {
    return NormModel::lp(j.at("p").get<double>(), j.at("dim").get<int>());
  }
  if (kind == "quadratic") {
    return NormModel::quadratic(mat_from_json(j.at("G")));
  }
  if (kind == "polytopal") {
    std::vector<Vec> verts;
    for (const auto& row : j.at("V")) verts.push_back(vec_from_json(row));
    return NormModel::polytopal(verts);
  }
  throw InputError("model json: unknown kind '" + kind + "'");
}

json to_json(const PredicateReport& rep) {
  json j;
  j["verdict"] = rep.verdict;
  j["max_residual"] = rep.max_residual;
  j["samples"] = rep.samples;
  if (rep.witness) {
    j["witness"] = {{"x", to_json(rep.witness->x)}, {"y", to_json(rep.witness->y)}};
  }
  return j;
}

json to_json(const NormalForm& nf) {
  json j;
  j["P"] = to_json(nf.P);
  j["residual"] = nf.residual;
  json blocks = json::array();
  for (const Block& b : nf.blocks) {
    json bj;
    if (b.kind == Block::Kind::Real1D) {
      bj["kind"] = "real1d";
      bj["lambda"] = b.lambda;
      bj["col"] = b.col;
    } else {
      bj["kind"] = "plane2d";
      bj["modulus"] = b.modulus;
      bj["angle"] = b.angle;
      bj["basis_cols"] = {b.basis_cols.first, b.basis_cols.second};
    }
    blocks.push_back(bj);
  }
  j["blocks"] = blocks;
  json ortho = json::array();
  for (const auto& e : nf.orthogonality)
    ortho.push_back({{"block_a", e.block_a}, {"block_b", e.block_b}, {"residual", e.residual}});
  j["orthogonality"] = ortho;
  j["auerbach_residuals"] = nf.auerbach_residuals;
  j["block_isometry_residuals"] = nf.block_isometry_residuals;
  return j;
}

json to_json(const Ellipsoid& e) {
  return json{{"center", to_json(e.center)}, {"S", to_json(e.S)}};
}

json to_json(const PointGroup& g) {
  json j;
  j["order"] = g.order;
  j["classification"] = g.classification.label();
  j["closure_verified"] = g.closure_verified;
  json els = json::array();
  for (const Mat& m : g.elements) els.push_back(to_json(m));
  j["elements"] = els;
  return j;
}

json to_json(const GroupReport& rep) {
  json j;
  j["finite"] = rep.finite;
  j["classification"] = rep.classification.label();
  j["semidirect"] = {{"translations", rep.translations},
                     {"point_stabilizer", rep.finite ? to_json(rep.point_group) : json(nullptr)}};
  j["determinants"] = rep.determinants;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

json to_json(const AffineMap& map) {
  return json{{"L", to_json(map.L)}, {"t", to_json(map.t)}};
}

json to_json(const BatteryReport& rep) {
  json j;
  j["all_pass"] = rep.all_pass;
  json cs = json::array();
  for (const auto& c : rep.criteria) {
    json cj{{"name", c.name}, {"pass", c.pass}, {"defect", c.defect}};
    if (c.witness) cj["witness"] = *c.witness;
    cs.push_back(cj);
  }
  j["criteria"] = cs;
  return j;
}

json to_json(const ProbeReport& rep) {
  json j{{"rate", rep.rate}, {"trials", rep.trials}};
  if (rep.counterexample) j["counterexample"] = *rep.counterexample;
  return j;
}

json to_json(const LpScanTable& t) {
  json j;
  j["all_positive"] = t.all_positive;
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"p", r.p}, {"tan_phi", r.tan_phi}, {"branch", r.branch}, {"f", r.value}});
  j["rows"] = rows;
  return j;
}

}  // namespace mink

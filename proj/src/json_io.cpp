#include "copocone/json_io.hpp"

namespace copocone {

using nlohmann::json;

json to_json(const SymMat3& a) {
  return json{{"a11", a.a11}, {"a22", a.a22}, {"a33", a.a33},
              {"a12", a.a12}, {"a13", a.a13}, {"a23", a.a23}};
}

SymMat3 matrix_from_json(const json& j) {
  SymMat3 a;
  a.a11 = j.at("a11").get<double>();
  a.a22 = j.at("a22").get<double>();
  a.a33 = j.at("a33").get<double>();
  a.a12 = j.at("a12").get<double>();
  a.a13 = j.at("a13").get<double>();
  a.a23 = j.at("a23").get<double>();
  return a;
}

json to_json(const Certificate& cert) {
  json j{{"verdict", cert.copositive() ? "copositive" : "not_copositive"},
         {"margin", cert.margin}};
  if (cert.witness.has_value()) {
    j["witness"] = *cert.witness;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json to_json(const InversionResult& result) {
  json j{{"s", result.params.s},
         {"lambda", result.params.lambda},
         {"t", result.params.t.as_array()},
         {"branch", branch_name(result.branch)},
         {"residual", result.residual}};
  if (result.branch == Branch::ZeroScale) {
    j["axis"] = result.zero_axis;
  }
  return j;
}

}  // namespace copocone

#include "lindex/io.hpp"

#include <fstream>
#include <sstream>

#include "lindex/errors.hpp"

namespace lindex {

using nlohmann::json;

json op_to_json(const Operator2& op) {
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) row.push_back({op(r, c).real(), op(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Operator2 op_from_json(const json& j) {
  auto bad = [] { return Error(ErrorCode::Parse, "operator must be [[[re,im],[re,im]],[[re,im],[re,im]]]"); };
  if (!j.is_array() || j.size() != 2) throw bad();
  Eigen::Matrix2cd m;
  for (int r = 0; r < 2; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 2) throw bad();
    for (int c = 0; c < 2; ++c) {
      const json& z = row[static_cast<std::size_t>(c)];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) throw bad();
      m(r, c) = cplx(z[0].get<double>(), z[1].get<double>());
    }
  }
  return Operator2(m);
}

json system_to_json(const GklsSystem& sys) {
  json terms = json::array();
  for (const JumpTerm& t : sys.terms()) terms.push_back({{"rate", t.rate}, {"op", op_to_json(t.op)}});
  return {{"hamiltonian", op_to_json(sys.hamiltonian())}, {"terms", std::move(terms)}};
}

GklsSystem system_from_json(const json& j, const Tolerances& tol) {
  if (!j.is_object() || !j.contains("hamiltonian") || !j.contains("terms") || !j["terms"].is_array()) {
    throw Error(ErrorCode::Parse, "system needs \"hamiltonian\" and a \"terms\" array");
  }
  std::vector<JumpTerm> terms;
  for (const json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("rate") || !t["rate"].is_number() || !t.contains("op")) {
      throw Error(ErrorCode::Parse, "each term needs a numeric \"rate\" and an \"op\"");
    }
    terms.push_back({t["rate"].get<double>(), op_from_json(t["op"])});
  }
  return GklsSystem(op_from_json(j["hamiltonian"]), std::move(terms), tol);
}

GklsSystem load_system(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
  return system_from_json(j, tol);
}

json physical_form_to_json(const PhysicalForm& pf, double roundtrip_residual) {
  return {{"h_eff", op_to_json(pf.h_eff)},
          {"n", op_to_json(pf.n.op())},
          {"d", pf.dphase ? op_to_json(pf.dphase->op()) : json(nullptr)},
          {"gamma_p", pf.gamma_p},
          {"gamma_m", pf.gamma_m},
          {"big_gamma", pf.big_gamma},
          {"roundtrip_residual", roundtrip_residual}};
}

}  // namespace lindex

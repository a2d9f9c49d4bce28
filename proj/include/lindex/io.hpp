#pragma once

// JSON formats shared by the CLI.
//   op2:    [[[re,im],[re,im]],[[re,im],[re,im]]], row-major
//   system: {"hamiltonian": op2, "terms": [{"rate": f, "op": op2}, ...]}

#include <string>

#include <json.hpp>

#include "lindex/decompose.hpp"
#include "lindex/gkls.hpp"

namespace lindex {

nlohmann::json op_to_json(const Operator2& op);
Operator2 op_from_json(const nlohmann::json& j);

nlohmann::json system_to_json(const GklsSystem& sys);
GklsSystem system_from_json(const nlohmann::json& j, const Tolerances& tol = {});

// Throws Error(Parse) for unreadable files or malformed content.
GklsSystem load_system(const std::string& path, const Tolerances& tol = {});

nlohmann::json physical_form_to_json(const PhysicalForm& pf, double roundtrip_residual);

}  // namespace lindex

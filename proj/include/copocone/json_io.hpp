#pragma once

#include <string>

#include <json.hpp>

#include "copocone/invert.hpp"
#include "copocone/types.hpp"

namespace copocone {

/// Matrix JSON schema shared by all CLI subcommands:
///   {"a11":f,"a22":f,"a33":f,"a12":f,"a13":f,"a23":f}
nlohmann::json to_json(const SymMat3& a);
SymMat3 matrix_from_json(const nlohmann::json& j);

/// Certificate schema:
///   {"verdict":"copositive"|"not_copositive","margin":f,"witness":[f,f,f]|null}
nlohmann::json to_json(const Certificate& cert);

/// Inversion schema:
///   {"s":[f,f,f],"lambda":f,"t":[f,f,f],"branch":str,"residual":f}
nlohmann::json to_json(const InversionResult& result);

}  // namespace copocone

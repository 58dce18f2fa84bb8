#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sutwist/classification.hpp"
#include "sutwist/cohomology.hpp"
#include "sutwist/laurent.hpp"

namespace sutwist::json_io {

using json = nlohmann::ordered_json;

json to_json(const classify::ParamTuple& p);
/// Accepts {"n", "q", "tau", "omega"}; omega may be omitted for the zero
/// bicharacter. `where` prefixes diagnostics (e.g. "params[2]").
classify::ParamTuple param_from_json(const json& j, const std::string& where = "param");
/// A single tuple object or an array of them.
std::vector<classify::ParamTuple> params_from_text(std::string_view text);

json to_json(const cohomology::Cochain& c);
cohomology::Cochain cochain_from_json(const json& j);

json to_json(const HalfLaurent& p);
HalfLaurent half_laurent_from_json(const json& j);

}  // namespace sutwist::json_io

#pragma once

#include "json.hpp"

#include "eqsub/bichar.hpp"

namespace eqsub::io {

using nlohmann::json;

json subgroup_json(const grp::Subgroup& s);
/// Sparse {"(k,h)": "p/q"}, zero entries omitted.
json bicharacter_json(const triv::Bicharacter& eta);
triv::Bicharacter bicharacter_from_json(const json& j, const grp::Subgroup& L, const grp::Subgroup& H);

}  // namespace eqsub::io

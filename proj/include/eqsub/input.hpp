#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqsub/serialize.hpp"

namespace eqsub::io {

/// "kp:n:p/q", "double:<group>", "twisted-double:n:p", "trivial:<G>:<K>", "mu-character:n",
/// "beta-alternating", "swap-pair", "sym-on-cyclic3". Throws Parse.
act::PointedActionData parse_preset(std::string_view text);

/// (pattern, description) for every preset family.
std::vector<std::pair<std::string, std::string>> preset_catalog();

/// A group as a preset string, a bare table, or {"table": [[...]], "labels": [...]}.
grp::FiniteGroup group_from_json(const json& j);
json group_json(const grp::FiniteGroup& g);

/// Keys "G", "K" (or "A" with action "swap"), "action", sparse "omega", "beta", "mu" tables keyed
/// "(i,j,k)", or "preset" with optional table entries overriding it. Absent entries are 0. Throws Parse.
act::PointedActionData action_data_from_json(const json& doc);
json action_data_json(const act::PointedActionData& d);

/// Reads and parses a document from a file. Throws Parse.
act::PointedActionData load_input(const std::string& path);

}  // namespace eqsub::io

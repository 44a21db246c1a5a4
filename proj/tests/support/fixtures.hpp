#pragma once

#include <string>
#include <vector>

#include "eqsub/action.hpp"

namespace testfix {

struct Named {
  std::string name;
  eqsub::act::PointedActionData data;
};

/// Every named fixture small enough for exhaustive checks.
inline std::vector<Named> all() {
  using namespace eqsub;
  using act::fixtures::triv;
  using exact::RatAngle;
  std::vector<Named> out;
  out.push_back({"triv(C2,Z2)", triv(grp::cyclic_group(2), grp::cyclic_group(2))});
  out.push_back({"triv(C1,C1)", triv(grp::cyclic_group(1), grp::cyclic_group(1))});
  out.push_back({"triv(C3,Z2xZ2)", triv(grp::cyclic_group(3), grp::direct_product(grp::cyclic_group(2), grp::cyclic_group(2)))});
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j < n; ++j)
      out.push_back({"kp(" + std::to_string(n) + "," + RatAngle(j, n).str() + ")", act::kp_action(n, RatAngle(j, n))});
  for (int p = 0; p < 2; ++p)
    out.push_back({"dbl(Z2," + std::to_string(p) + ")", act::double_action(grp::cyclic_group(2), act::cyclic_cocycle(2, p))});
  for (int p = 0; p < 3; ++p)
    out.push_back({"dbl(Z3," + std::to_string(p) + ")", act::double_action(grp::cyclic_group(3), act::cyclic_cocycle(3, p))});
  out.push_back({"dbl(S3)", act::double_action(grp::symmetric_group(3), act::Cocycle3(grp::symmetric_group(3)))});
  out.push_back({"mu_character(4)", act::fixtures::mu_character(4)});
  out.push_back({"beta_alternating", act::fixtures::beta_alternating()});
  out.push_back({"swap_pair", act::fixtures::swap_pair()});
  out.push_back({"sym_on_cyclic3", act::fixtures::sym_on_cyclic3()});
  return out;
}

/// Fixtures with trivial omega, normalized, as inputs of the bismash construction.
inline std::vector<Named> bismash() {
  std::vector<Named> out;
  for (auto& f : all())
    if (f.data.omega().is_trivial()) out.push_back({f.name, eqsub::act::normalize(f.data)});
  return out;
}

}  // namespace testfix

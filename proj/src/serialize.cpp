#include "eqsub/serialize.hpp"

#include "eqsub/error.hpp"

namespace eqsub::io {

json subgroup_json(const grp::Subgroup& s) { return json(s.elements()); }

json bicharacter_json(const triv::Bicharacter& eta) {
  json j = json::object();
  for (grp::Elem k : eta.L.elements())
    for (grp::Elem h : eta.H.elements()) {
      auto v = eta.value(k, h);
      if (!v.is_zero()) j["(" + std::to_string(k) + "," + std::to_string(h) + ")"] = v.str();
    }
  return j;
}

triv::Bicharacter bicharacter_from_json(const json& j, const grp::Subgroup& L, const grp::Subgroup& H) {
  triv::Bicharacter eta(L, H);
  for (const auto& [key, val] : j.items()) {
    int k = 0, h = 0;
    if (std::sscanf(key.c_str(), "(%d,%d)", &k, &h) != 2) throw Error(Errc::Parse, "bad bicharacter key " + key);
    eta.set(k, h, exact::RatAngle::parse(val.get<std::string>()));
  }
  return eta;
}

}  // namespace eqsub::io

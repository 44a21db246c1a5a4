#include "eqsub/report.hpp"

#include "eqsub/input.hpp"

namespace eqsub::io {

namespace {

json violations(const std::vector<act::Violation>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back({{"identity", v.identity}, {"witness", v.witness}, {"discrepancy", v.discrepancy.str()}});
  return a;
}

json bool_matrix(const std::vector<std::vector<bool>>& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    out.push_back(r);
  }
  return out;
}

}  // namespace

json validation_json(const act::ValidationReport& r, const act::PointedActionData& d) {
  return {{"valid", r.valid()},
          {"normalized", r.normalized()},
          {"violations", violations(r.violations)},
          {"unnormalized", violations(r.unnormalized)},
          {"data", action_data_json(d)}};
}

json hopf_report_json(const hopf::HopfStructure& h, const hopf::AxiomReport& r) {
  json j = hopf::hopf_json(h);
  json ax = json::object();
  for (const auto& [name, count] : r.checked) ax[name] = !r.failed(name);
  j["axioms"] = ax;
  return j;
}

json oracle_json(const oracle::FusionRing& ring, const oracle::OracleLattice& sub) {
  json subs = json::array();
  for (std::size_t i = 0; i < sub.subsets.size(); ++i) subs.push_back({{"simples", sub.subsets[i]}, {"fpdim", sub.fpdims[i]}});
  return {{"fusion_ring", ring.json()}, {"subrings", subs}, {"leq", bool_matrix(sub.leq)}};
}

json comparison_json(const oracle::Comparison& c) {
  return {{"equal", c.equal()},
          {"oracle", {{"count", c.oracle_count}, {"fpdims", c.oracle_fpdims}}},
          {"triples", {{"count", c.lattice_count}, {"fpdims", c.lattice_fpdims}}},
          {"isomorphic", c.isomorphic},
          {"mismatches", c.mismatches}};
}

}  // namespace eqsub::io

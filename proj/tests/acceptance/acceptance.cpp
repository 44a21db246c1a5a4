// One PASS/FAIL line per acceptance criterion; failure details follow on indented lines.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "eqsub/hopf.hpp"
#include "eqsub/kp.hpp"
#include "eqsub/lattice.hpp"
#include "eqsub/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/pairs.hpp"

using namespace eqsub;
using exact::RatAngle;
using grp::Elem;
using grp::Subgroup;
using triv::Bicharacter;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void fail(const std::string& s) { failures.push_back(s); }
  void expect(bool ok, const std::string& s) {
    if (!ok) fail(s);
  }
};

std::string where(const std::string& name, const Subgroup& L, const Subgroup& H) {
  return name + " L=" + grp::to_string(L) + " H=" + grp::to_string(H);
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream s;
  s << "{";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << "}";
  return s.str();
}

oracle::OracleLattice oracle_lattice(const act::PointedActionData& d) {
  return oracle::enumerate_based_subrings(oracle::fusion_ring(hopf::build_bismash(act::normalize(d))));
}

Outcome constructor_validity() {
  Outcome o;
  int fixtures = 0;
  for (const auto& f : testfix::all()) {
    auto r = act::validate_action_data(f.data);
    o.expect(r.valid(), f.name + " rejected: " + (r.violations.empty() ? "" : r.violations.front().str()));
    ++fixtures;
  }
  auto d = act::kp_action(2, RatAngle(1, 2));
  const int ng = d.G().order(), nk = d.K().order();
  int mutations = 0;
  auto check = [&](const act::PointedActionData& m, const std::string& what) {
    ++mutations;
    auto r = act::validate_action_data(m);
    if (r.valid())
      o.fail("mutation " + what + " accepted");
    else if (r.violations.front().witness.empty())
      o.fail("mutation " + what + " rejected without a witness");
  };
  for (const RatAngle& delta : {RatAngle(1, 2), RatAngle(1, 4), RatAngle(1, 3), RatAngle(5, 8)}) {
    for (Elem g = 0; g < ng; ++g)
      for (Elem k = 0; k < nk; ++k)
        for (Elem l = 0; l < nk; ++l) {
          auto m = d;
          m.set_beta(g, k, l, d.beta(g, k, l) + delta);
          check(m, "beta(" + std::to_string(g) + "," + std::to_string(k) + "," + std::to_string(l) + ")+" + delta.str());
        }
    for (Elem g = 0; g < ng; ++g)
      for (Elem h = 0; h < ng; ++h)
        for (Elem k = 0; k < nk; ++k) {
          auto m = d;
          m.set_mu(g, h, k, d.mu(g, h, k) + delta);
          check(m, "mu(" + std::to_string(g) + "," + std::to_string(h) + "," + std::to_string(k) + ")+" + delta.str());
        }
  }
  o.summary = std::to_string(fixtures) + " fixtures valid, " + std::to_string(mutations) + " mutations rejected";
  return o;
}

Outcome bicharacter_completeness() {
  Outcome o;
  int pairs = 0, solutions = 0;
  for (const auto& f : testfix::all())
    for (const auto& [L, H] : testfix::admissible_pairs(f.data)) {
      if (L.size() * H.size() > 16) continue;
      ++pairs;
      auto got = triv::enumerate_bicharacters(f.data, L, H, false);
      solutions += static_cast<int>(got.size());
      o.expect(got == testfix::brute_bicharacters(f.data, L, H, false), where(f.name, L, H) + ": differs from exhaustive search");
      for (const auto& a : got)
        for (const auto& b : got)
          o.expect(triv::torsor_check(a, b, f.data), where(f.name, L, H) + ": torsor check failed");
      auto ord = triv::ordinary_bicharacters(L, H, f.data);
      for (const auto& e : got)
        for (const auto& b : ord) {
          Bicharacter s = e;
          for (std::size_t i = 0; i < s.table.size(); ++i) s.table[i] += b.table[i];
          o.expect(std::binary_search(got.begin(), got.end(), s), where(f.name, L, H) + ": shift leaves the solution set");
        }
      if (!triv::is_invariant(f.data, L)) continue;
      o.expect(triv::enumerate_bicharacters(f.data, L, H, true) == testfix::brute_bicharacters(f.data, L, H, true),
               where(f.name, L, H) + ": equivariant set differs from exhaustive search");
    }
  o.summary = std::to_string(pairs) + " pairs, " + std::to_string(solutions) + " bicharacters";
  return o;
}

Outcome obstruction_equivalence() {
  Outcome o;
  int pairs = 0, omegas = 0;
  for (const auto& f : testfix::all())
    for (const auto& [L, H] : testfix::admissible_pairs(f.data)) {
      if (L.size() * H.size() > 64) continue;
      ++pairs;
      auto r = triv::obstruction_report(f.data, L, H);
      bool nonempty = !triv::enumerate_bicharacters(f.data, L, H, false).empty();
      bool unobstructed = r.first.all_solvable() && r.second && r.second->vanishes;
      o.expect(nonempty == unobstructed, where(f.name, L, H) + ": obstruction disagrees with enumeration");
      o.expect(r.unobstructed == unobstructed, where(f.name, L, H) + ": report summary inconsistent");
      if (!triv::is_invariant(f.data, L)) continue;
      bool any_equivariant = !triv::enumerate_bicharacters(f.data, L, H, true).empty();
      for (const auto& eta : triv::enumerate_bicharacters(f.data, L, H, false)) {
        ++omegas;
        auto inv = triv::invariance_obstruction(f.data, eta);
        o.expect(inv.cocycle, where(f.name, L, H) + ": Omega is not a 1-cocycle");
        o.expect(inv.is_zero == static_cast<bool>(triv::is_g_equivariant(eta, f.data)),
                 where(f.name, L, H) + ": Omega = 0 differs from equivariance");
        o.expect(inv.vanishes == any_equivariant, where(f.name, L, H) + ": Omega class differs from existence");
      }
    }
  o.summary = std::to_string(pairs) + " pairs, " + std::to_string(omegas) + " Omega checks";
  return o;
}

Outcome lattice_vs_oracle() {
  Outcome o;
  std::vector<std::pair<std::string, act::PointedActionData>> cases = {
      {"triv(C2,Z2)", act::fixtures::triv(grp::cyclic_group(2), grp::cyclic_group(2))},
      {"kp(2,0)", act::kp_action(2, RatAngle())},
      {"kp(2,1/2)", act::kp_action(2, RatAngle(1, 2))},
      {"dbl(S3)", act::double_action(grp::symmetric_group(3), act::Cocycle3(grp::symmetric_group(3)))},
  };
  for (int j = 0; j < 3; ++j) cases.push_back({"kp(3," + RatAngle(j, 3).str() + ")", act::kp_action(3, RatAngle(j, 3))});
  std::string nodes;
  for (const auto& [name, d] : cases) {
    try {
      auto cmp = oracle::compare(oracle_lattice(d), lat::build_lattice(d));
      o.expect(cmp.equal(), name + ": " + cmp.str());
      nodes += (nodes.empty() ? "" : " ") + name + "=" + std::to_string(cmp.oracle_count);
    } catch (const std::exception& e) {
      o.fail(name + ": " + e.what());
    }
  }
  o.summary = "nodes " + nodes;
  return o;
}

Outcome hopf_axioms() {
  Outcome o;
  int count = 0;
  for (const auto& f : testfix::bismash()) {
    ++count;
    try {
      auto h = hopf::build_bismash(f.data);
      o.expect(h.dim == f.data.G().order() * f.data.K().order(), f.name + ": wrong dimension");
      o.expect(h.antipode_unique, f.name + ": antipode not unique");
      auto r = hopf::verify_hopf_axioms(h);
      o.expect(r.ok(), f.name + ": " + r.str(h));
    } catch (const std::exception& e) {
      o.fail(f.name + ": " + e.what());
    }
  }
  o.summary = std::to_string(count) + " bismash algebras";
  return o;
}

Outcome fpdim_corollary() {
  Outcome o;
  int triples = 0;
  for (const auto& f : testfix::all()) {
    auto lattice = lat::build_lattice(f.data);
    const std::int64_t top = f.data.G().order() * f.data.K().order();
    const std::size_t n = lattice.triples.size();
    std::map<std::pair<std::int64_t, std::int64_t>, int> lattice_pairs, oracle_pairs;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& t = lattice.triples[i];
      ++triples;
      o.expect(t.fpdim == f.data.G().order() / t.H.size() * t.L.size(), f.name + ": fpdim formula");
      o.expect(top % t.fpdim == 0, f.name + ": fpdim does not divide the total");
      for (std::size_t j = 0; j < n; ++j)
        if (lattice.leq[i][j]) {
          o.expect(lattice.triples[j].fpdim % t.fpdim == 0, f.name + ": containment without divisibility");
          ++lattice_pairs[{t.fpdim, lattice.triples[j].fpdim}];
        }
    }
    if (!f.data.omega().is_trivial()) continue;
    auto ol = oracle_lattice(f.data);
    for (std::size_t i = 0; i < ol.subsets.size(); ++i)
      for (std::size_t j = 0; j < ol.subsets.size(); ++j)
        if (ol.leq[i][j]) ++oracle_pairs[{ol.fpdims[i], ol.fpdims[j]}];
    o.expect(lattice_pairs == oracle_pairs, f.name + ": containment pairs differ from the oracle");
  }
  o.summary = std::to_string(triples) + " triples";
  return o;
}

Outcome oracle_integrity() {
  Outcome o;
  double worst = 0;
  int count = 0;
  for (const auto& f : testfix::bismash()) {
    ++count;
    try {
      auto h = hopf::build_bismash(f.data);
      auto blocks = oracle::block_decompose(oracle::dual_algebra(h));
      auto ring = oracle::fusion_ring(h, blocks);
      std::int64_t total = 0;
      for (auto d : ring.dims) total += d * d;
      o.expect(total == h.dim, f.name + ": sum of squares " + std::to_string(total) + " != " + std::to_string(h.dim));
      worst = std::max({worst, blocks.max_rounding_error, ring.max_rounding_error});
      o.expect(blocks.max_rounding_error < oracle::kRoundTolerance, f.name + ": block rounding error");
      o.expect(ring.max_rounding_error < oracle::kRoundTolerance, f.name + ": multiplicity rounding error");
      for (const auto& msg : ring.check()) o.fail(f.name + ": " + msg);
    } catch (const std::exception& e) {
      o.fail(f.name + ": " + e.what());
    }
  }
  std::ostringstream s;
  s << count << " rings, worst rounding " << worst;
  o.summary = s.str();
  return o;
}

Outcome discrepancy_regression() {
  Outcome o;
  const RatAngle q(1, 2);
  for (const RatAngle& zeta : {RatAngle(), RatAngle(1, 2)}) {
    auto e = triv::kp_eta_zeta(2, q, 2, zeta);
    o.expect(!e.well_defined, "m=2 zeta=" + zeta.str() + " reported well defined");
  }
  auto d = act::kp_action(2, q);
  auto etas = triv::enumerate_bicharacters(d, Subgroup({0, 3}), Subgroup({0, 1}), false);
  o.expect(etas.size() == 2, std::to_string(etas.size()) + " bicharacters on the diagonal, expected 2");
  // zeta outside G_2 does give a table; those are exactly the solutions above.
  std::vector<Bicharacter> from_formula;
  for (const RatAngle& zeta : {RatAngle(1, 4), RatAngle(3, 4)}) {
    auto e = triv::kp_eta_zeta(2, q, 2, zeta);
    if (e.well_defined && e.eta) from_formula.push_back(*e.eta);
  }
  std::sort(from_formula.begin(), from_formula.end());
  o.expect(from_formula == etas, "zeta in {1/4, 3/4} does not reproduce the diagonal solutions");
  auto c = kp::compare_kp_vs_general(2, q);
  o.expect(c.oracle.has_value(), "oracle failed: " + c.oracle_error);
  o.expect(c.as_stated_flagged(), "as-stated mode not flagged");
  o.expect(c.main_matches_oracle, "main-theorem mode disagrees with the oracle");
  o.summary = "as-stated " + join(c.as_stated.fpdims()) + ", main-theorem " + join(c.main.fpdims()) + ", oracle " +
              (c.oracle ? join(c.oracle->oracle_fpdims) : "-");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"constructor validity", constructor_validity},
      {"bicharacter completeness", bicharacter_completeness},
      {"obstruction equivalence", obstruction_equivalence},
      {"lattice vs oracle", lattice_vs_oracle},
      {"hopf axioms", hopf_axioms},
      {"fpdim corollary", fpdim_corollary},
      {"oracle integrity", oracle_integrity},
      {"discrepancy regression", discrepancy_regression},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    bool ok = o.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.summary << " (" << ms
              << " ms)\n";
    for (std::size_t k = 0; k < o.failures.size() && k < 20; ++k) std::cout << "    " << o.failures[k] << "\n";
    if (o.failures.size() > 20) std::cout << "    ... " << o.failures.size() - 20 << " more\n";
  }
  return failed ? 1 : 0;
}

#include "doctest.h"
#include "eqsub/error.hpp"
#include "eqsub/hopf.hpp"
#include "support/fixtures.hpp"

using namespace eqsub;
using namespace eqsub::hopf;
using exact::RatAngle;

TEST_CASE("trivial G gives the group algebra of K") {
  auto d = act::fixtures::triv(grp::cyclic_group(1), grp::cyclic_group(3));
  auto h = build_bismash(d);
  CHECK(h.dim == 3);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      auto p = h.mul(x, y);
      REQUIRE(p);
      CHECK(p->c.is_zero());
      CHECK(p->basis == (x + y) % 3);
    }
    REQUIRE(h.coproduct[static_cast<std::size_t>(x)].size() == 1);
    CHECK(h.coproduct[static_cast<std::size_t>(x)][0] == TensorTerm{RatAngle{}, x, x});
  }
  CHECK(verify_hopf_axioms(h).ok());
}

TEST_CASE("trivial K gives the function algebra on G") {
  auto d = act::fixtures::triv(grp::symmetric_group(3), grp::cyclic_group(1));
  auto h = build_bismash(d);
  CHECK(h.dim == 6);
  for (int g = 0; g < 6; ++g)
    for (int k = 0; k < 6; ++k) {
      auto p = h.mul(g, k);
      CHECK(p.has_value() == (g == k));
      if (p) CHECK(p->basis == g);
    }
  CHECK(h.unit.size() == 6);
  CHECK(verify_hopf_axioms(h).ok());
}

TEST_CASE("Kac-Paljutkin product constant") {
  auto h = build_bismash(act::kp_action(2, RatAngle(1, 2)));
  CHECK(h.dim == 8);
  // (1,0) has index 2, (0,1) index 1, (1,1) index 3
  auto p = h.mul(h.index(1, 2), h.index(1, 1));
  REQUIRE(p);
  CHECK(p->c == RatAngle(1, 2));
  CHECK(p->basis == h.index(1, 3));
  CHECK_FALSE(h.mul(h.index(0, 2), h.index(1, 1)));
}

TEST_CASE("axioms hold on every bismash fixture") {
  for (const auto& f : testfix::bismash()) {
    INFO(f.name);
    auto h = build_bismash(f.data);
    CHECK(h.dim == f.data.G().order() * f.data.K().order());
    CHECK(h.antipode_unique);
    auto r = verify_hopf_axioms(h);
    CHECK_MESSAGE(r.ok(), r.str(h));
    for (const auto& [name, count] : r.checked) CHECK(count > 0);
  }
}

TEST_CASE("solved antipode matches the hand-derived monomial form") {
  // S(g,y) = -(mu(g,g^-1; g_*y) + beta(g^-1; (g_*y)^-1, g_*y)) (g^-1, (g_*y)^-1)
  for (const auto& f : testfix::bismash()) {
    INFO(f.name);
    const auto& d = f.data;
    auto h = build_bismash(d);
    for (int i = 0; i < h.dim; ++i) {
      auto [g, y] = h.labels[static_cast<std::size_t>(i)];
      auto gi = d.G().inv(g);
      auto x = d.push(g, y);
      auto xi = d.K().inv(x);
      Scaled expect{-(d.mu(g, gi, x) + d.beta(gi, xi, x)), h.index(gi, xi)};
      CHECK(h.antipode[static_cast<std::size_t>(i)] == expect);
    }
  }
}

TEST_CASE("antipode squares to the identity") {
  for (const auto& f : testfix::bismash()) {
    INFO(f.name);
    auto h = build_bismash(f.data);
    for (int i = 0; i < h.dim; ++i) {
      const auto& s = h.antipode[static_cast<std::size_t>(i)];
      const auto& t = h.antipode[static_cast<std::size_t>(s.basis)];
      CHECK(t.basis == i);
      CHECK((s.c + t.c).is_zero());
    }
  }
}

TEST_CASE("closed formula is compared, mismatches listed") {
  auto triv = build_bismash(act::fixtures::triv(grp::cyclic_group(2), grp::cyclic_group(2)));
  CHECK(triv.antipode_mismatches.empty());
  for (const auto& f : testfix::bismash()) {
    auto h = build_bismash(f.data);
    for (int i = 0; i < h.dim; ++i) {
      bool differs = !(h.closed_antipode[static_cast<std::size_t>(i)] == h.antipode[static_cast<std::size_t>(i)]);
      bool listed = std::find(h.antipode_mismatches.begin(), h.antipode_mismatches.end(), i) != h.antipode_mismatches.end();
      CHECK(differs == listed);
    }
  }
}

TEST_CASE("construction errors") {
  auto twisted = act::double_action(grp::cyclic_group(2), act::cyclic_cocycle(2, 1));
  CHECK_THROWS_WITH_AS(build_bismash(twisted), doctest::Contains("OmegaNontrivial"), Error);
  auto d = act::kp_action(2, RatAngle(1, 2));
  d.set_mu(1, 1, 3, d.mu(1, 1, 3) + RatAngle(1, 2));
  CHECK_THROWS_WITH_AS(build_bismash(d), doctest::Contains("DataInvalid"), Error);
  auto un = act::kp_action(2, RatAngle(0, 1));
  un.set_mu(0, 0, 1, RatAngle(1, 2));
  un.set_mu(0, 1, 1, RatAngle(1, 2));
  un.set_mu(1, 0, 1, RatAngle(1, 2));
  un.set_mu(1, 1, 1, RatAngle(1, 2));
  CHECK_THROWS_WITH_AS(build_bismash(un), doctest::Contains("DataInvalid"), Error);
}

TEST_CASE("perturbed mu breaks delta multiplicativity") {
  auto base = act::kp_action(2, RatAngle(1, 2));
  for (int k = 1; k < 4; ++k) {
    auto d = base;
    d.set_mu(1, 1, k, d.mu(1, 1, k) + RatAngle(1, 2));
    auto h = build_bismash(d, false);
    auto r = verify_hopf_axioms(h);
    CHECK(r.failed("delta-multiplicative"));
    bool witnessed = false;
    for (const auto& v : r.violations)
      if (v.axiom == "delta-multiplicative" && v.witness.size() == 2) witnessed = true;
    CHECK(witnessed);
  }
}

TEST_CASE("perturbed beta breaks associativity") {
  auto d = act::kp_action(2, RatAngle(1, 2));
  d.set_beta(1, 1, 2, d.beta(1, 1, 2) + RatAngle(1, 2));
  auto r = verify_hopf_axioms(build_bismash(d, false));
  CHECK(r.failed("associativity"));
  CHECK_FALSE(r.ok());
}

TEST_CASE("structure constants as JSON") {
  auto h = build_bismash(act::kp_action(2, RatAngle(1, 2)));
  auto j = hopf_json(h);
  CHECK(j["dim"] == 8);
  CHECK(j["product"]["(1,2)|(1,1)"] == io::json::array({"1/2", "(1,3)"}));
  CHECK(j["product"].size() == 32);
  CHECK(j["coproduct"]["(1,0)"].size() == 2);
  CHECK(j["unit"] == io::json::array({"(0,0)", "(1,0)"}));
  CHECK(j["antipode_unique"] == true);
  CHECK(hopf_json(h).dump() == j.dump());
}

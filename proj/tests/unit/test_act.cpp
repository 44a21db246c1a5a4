#include <random>

#include "doctest.h"
#include "eqsub/action.hpp"
#include "eqsub/error.hpp"

using namespace eqsub;
using namespace eqsub::act;
using exact::RatAngle;

namespace {

std::vector<RatAngle> all_q(int n) {
  std::vector<RatAngle> out;
  for (int j = 0; j < n; ++j) out.emplace_back(j, n);
  return out;
}

bool has_identity(const ValidationReport& r, const std::string& id) {
  for (const auto& v : r.violations)
    if (v.identity == id) return true;
  return false;
}

}  // namespace

TEST_CASE("all-zero data is valid") {
  auto d = fixtures::triv(grp::cyclic_group(2), grp::cyclic_group(3));
  auto r = validate_action_data(d);
  CHECK(r.valid());
  CHECK(r.normalized());
}

TEST_CASE("constructors produce valid data") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& q : all_q(n)) {
      auto r = validate_action_data(kp_action(n, q));
      CHECK_MESSAGE(r.valid(), "kp ", n, " ", q.str(), "\n", r.str());
      CHECK(r.normalized());
    }
  for (int p = 0; p < 2; ++p) CHECK(validate_action_data(double_action(grp::cyclic_group(2), cyclic_cocycle(2, p))).valid());
  for (int n : {3, 4})
    for (int p = 0; p < n; ++p) CHECK(validate_action_data(double_action(grp::cyclic_group(n), cyclic_cocycle(n, p))).valid());
  auto s3 = grp::symmetric_group(3);
  auto dbl = double_action(s3, Cocycle3(s3));
  CHECK(validate_action_data(dbl).valid());
  for (const auto& v : dbl.beta_table()) CHECK(v.is_zero());
  for (const auto& v : dbl.mu_table()) CHECK(v.is_zero());
  CHECK(dbl.action() == grp::conjugation_action(s3));
  auto triv_dbl = double_action(grp::cyclic_group(2), Cocycle3(grp::cyclic_group(2)));
  CHECK(triv_dbl.action().is_trivial());

  for (auto d : {fixtures::mu_character(4), fixtures::beta_alternating(), fixtures::swap_pair(), fixtures::sym_on_cyclic3()})
    CHECK(validate_action_data(d).valid());
}

TEST_CASE("cyclic cocycles") {
  auto w = cyclic_cocycle(2, 1);
  CHECK(w(1, 1, 1) == RatAngle(1, 2));
  CHECK(w(1, 0, 1).is_zero());
  std::vector<Violation> bad, un;
  check_cocycle(cyclic_cocycle(5, 2), bad, un);
  CHECK(bad.empty());
  CHECK(un.empty());
  Cocycle3 broken(grp::cyclic_group(2));
  broken.set(1, 1, 0, RatAngle(1, 2));
  CHECK_THROWS_AS(double_action(grp::cyclic_group(2), broken), Error);
  Cocycle3 noncocycle(grp::cyclic_group(3));
  noncocycle.set(1, 1, 1, RatAngle(1, 3));
  bad.clear();
  check_cocycle(noncocycle, bad, un);
  CHECK_FALSE(bad.empty());
  try {
    double_action(grp::cyclic_group(3), noncocycle);
    FAIL("expected InvalidCocycle");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidCocycle);
  }
}

TEST_CASE("double of Z/2 with the nontrivial cocycle") {
  auto d = double_action(grp::cyclic_group(2), cyclic_cocycle(2, 1));
  CHECK(d.mu(1, 1, 1) == RatAngle(1, 2));
  CHECK(d.beta(1, 1, 1) == RatAngle(1, 2));
  CHECK(d.mu(1, 1, 0).is_zero());
  CHECK(validate_action_data(d).valid());
}

TEST_CASE("orientation of the equations is pinned by order-3 data") {
  auto d = double_action(grp::cyclic_group(3), cyclic_cocycle(3, 1));
  CHECK(validate_action_data(d).valid());
  // The opposite sign, mu = -q a1 a2, fails compatibility for q of order 3.
  auto kp = kp_action(3, RatAngle(1, 3));
  for (Elem a = 0; a < 9; ++a) kp.set_mu(1, 1, a, -kp.mu(1, 1, a));
  auto r = validate_action_data(kp);
  CHECK(has_identity(r, "compatibility"));
}

TEST_CASE("kp_action values and errors") {
  auto d = kp_action(2, RatAngle(1, 2));
  // (1,0) has index 2, (0,1) index 1, (1,1) index 3
  CHECK(d.beta(1, 2, 1) == RatAngle(1, 2));
  CHECK(d.beta(1, 1, 2).is_zero());
  CHECK(d.mu(1, 1, 3) == RatAngle(1, 2));
  auto z = kp_action(3, RatAngle());
  for (const auto& v : z.beta_table()) CHECK(v.is_zero());
  for (const auto& v : z.mu_table()) CHECK(v.is_zero());
  try {
    kp_action(2, RatAngle(1, 3));
    FAIL("expected BadOrder");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadOrder);
  }
}

TEST_CASE("every single-entry mutation of the dimension-8 data is caught") {
  auto d = kp_action(2, RatAngle(1, 2));
  const int nk = 4, ng = 2;
  int checked = 0;
  for (const RatAngle& delta : {RatAngle(1, 2), RatAngle(1, 4), RatAngle(1, 3)}) {
    for (Elem g = 0; g < ng; ++g)
      for (Elem k = 0; k < nk; ++k)
        for (Elem l = 0; l < nk; ++l) {
          auto m = d;
          m.set_beta(g, k, l, d.beta(g, k, l) + delta);
          auto r = validate_action_data(m);
          CHECK_FALSE(r.valid());
          REQUIRE_FALSE(r.violations.empty());
          CHECK_FALSE(r.violations.front().witness.empty());
          ++checked;
        }
    for (Elem g = 0; g < ng; ++g)
      for (Elem h = 0; h < ng; ++h)
        for (Elem k = 0; k < nk; ++k) {
          auto m = d;
          m.set_mu(g, h, k, d.mu(g, h, k) + delta);
          auto r = validate_action_data(m);
          CHECK_FALSE(r.valid());
          ++checked;
        }
  }
  CHECK(checked == 3 * (32 + 16));
}

TEST_CASE("beta mutation witnesses mention the mutated entry") {
  auto d = kp_action(2, RatAngle(1, 2));
  auto m = d;
  m.set_beta(1, 2, 1, RatAngle());
  auto r = validate_action_data(m);
  REQUIRE_FALSE(r.valid());
  for (const auto& v : r.violations) {
    CHECK((v.identity == "compatibility" || v.identity == "beta-equation"));
  }
  // Each reported compatibility witness (g,h,k,l) touches beta(s; (1,0), (0,1)) directly or through the swap.
  for (const auto& v : r.violations)
    if (v.identity == "compatibility") {
      Elem g = v.witness[0], h = v.witness[1], k = v.witness[2], l = v.witness[3];
      bool touches = (d.G().mul(g, h) == 1 && k == 2 && l == 1) || (h == 1 && k == 2 && l == 1) ||
                     (g == 1 && d.push(h, k) == 2 && d.push(h, l) == 1);
      CHECK(touches);
    }
}

TEST_CASE("normalization") {
  auto d = kp_action(3, RatAngle(1, 3));
  CHECK(normalize(d) == d);
  auto t = fixtures::triv(grp::FiniteGroup(), grp::cyclic_group(3));
  CHECK(normalize(t) == t);

  std::mt19937_64 rng(3);
  for (auto base : {kp_action(2, RatAngle(1, 2)), kp_action(4, RatAngle(1, 4)),
                    double_action(grp::symmetric_group(3), Cocycle3(grp::symmetric_group(3))),
                    double_action(grp::cyclic_group(3), cyclic_cocycle(3, 2))}) {
    const int n = base.G().order() * base.K().order();
    std::uniform_int_distribution<int> e(0, 11);
    std::vector<RatAngle> gamma;
    for (int i = 0; i < n; ++i) gamma.emplace_back(e(rng), 12);
    auto shifted = apply_gauge(base, gamma);
    auto r = validate_action_data(shifted);
    CHECK(r.valid());
    CHECK_FALSE(r.normalized());
    auto back = normalize(shifted);
    auto rb = validate_action_data(back);
    CHECK(rb.valid());
    CHECK(rb.normalized());
  }

  // A constant shift on mu(g,e;k) and mu(e,h;k) coming from gamma(e;k) = c.
  auto kp2 = kp_action(2, RatAngle(1, 2));
  std::vector<RatAngle> g2(8);
  for (int k = 0; k < 4; ++k) g2[static_cast<std::size_t>(k)] = RatAngle(1, 6);
  auto sh = apply_gauge(kp2, g2);
  CHECK(sh.mu(1, 0, 3) == RatAngle(1, 6));
  auto nm = normalize(sh);
  CHECK(nm.mu(1, 0, 3).is_zero());
  CHECK(nm == kp2);

  auto bad = kp2;
  bad.set_mu(1, 1, 3, RatAngle());
  try {
    normalize(bad);
    FAIL("expected NotValid");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotValid);
  }
}

TEST_CASE("fingerprints distinguish data") {
  CHECK(kp_action(2, RatAngle()).fingerprint() != kp_action(2, RatAngle(1, 2)).fingerprint());
  CHECK(kp_action(2, RatAngle(1, 2)).fingerprint() == kp_action(2, RatAngle(1, 2)).fingerprint());
}

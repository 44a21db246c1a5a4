#include <set>

#include "doctest.h"
#include "eqsub/error.hpp"
#include "eqsub/kp.hpp"

using namespace eqsub;
using namespace eqsub::kp;
using exact::RatAngle;

TEST_CASE("Goursat data for small n") {
  auto one = kp_goursat(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].H.is_trivial());

  auto two = kp_goursat(2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].H.elements() == std::vector<int>{0});
  CHECK(two[1].H.elements() == std::vector<int>{0, 3});
  CHECK(two[2].H.elements() == std::vector<int>{0, 1, 2, 3});

  auto three = kp_goursat(3);
  std::set<std::vector<int>> subs;
  for (const auto& g : three) subs.insert(g.H.elements());
  CHECK(subs.count({0, 4, 8}));
  CHECK(subs.count({0, 5, 7}));
}

TEST_CASE("Goursat subgroups are the swap-invariant subgroups") {
  for (int n = 1; n <= 6; ++n) {
    INFO(n);
    std::set<std::vector<int>> got;
    for (const auto& g : kp_goursat(n)) {
      CHECK(got.insert(g.H.elements()).second);
      CHECK((g.u * g.u - 1) % g.r == 0);
    }
    std::set<std::vector<int>> expect;
    for (const auto& s : grp::invariant_subgroups(grp::swap_action(grp::cyclic_group(n)))) expect.insert(s.elements());
    CHECK(got == expect);
  }
}

TEST_CASE("n = 1 has one subcategory of each type") {
  for (auto mode : {Mode::AsStated, Mode::MainTheorem}) {
    auto r = kp_classify(1, RatAngle(0, 1), mode);
    CHECK(r.type1.size() == 1);
    CHECK(r.type2.size() == 1);
    CHECK(r.fpdims() == std::vector<std::int64_t>{1, 2});
  }
  CHECK(compare_kp_vs_general(1, RatAngle(0, 1)).as_stated_matches_main);
}

TEST_CASE("main-theorem mode restates the triple enumeration") {
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j < n; ++j) {
      RatAngle q(j, n);
      INFO(n, " ", q.str());
      auto r = kp_classify(n, q, Mode::MainTheorem);
      auto ts = lat::enumerate_triples(act::kp_action(n, q));
      CHECK(r.total() == ts.size());
      std::vector<std::int64_t> fp;
      for (const auto& t : ts) fp.push_back(t.fpdim);
      std::sort(fp.begin(), fp.end());
      CHECK(r.fpdims() == fp);
      for (const auto& t : r.type1) {
        const int x = n / t.m;
        CHECK(t.zeta.times(2) == q.times(x * x));
        CHECK(t.fpdim == t.m);
      }
      for (const auto& t : r.type2) {
        CHECK_FALSE(t.eta);
        CHECK(t.fpdim == 2 * t.datum.H.size());
      }
    }
}

TEST_CASE("n = 2 examples") {
  auto main0 = kp_classify(2, RatAngle(0, 1), Mode::MainTheorem);
  CHECK(main0.total() == 6);
  CHECK(main0.fpdims() == std::vector<std::int64_t>{1, 2, 2, 2, 4, 8});

  auto stated0 = kp_classify(2, RatAngle(0, 1), Mode::AsStated);
  CHECK(stated0.type1.size() == 2);
  CHECK(stated0.type2.size() == 5);
  auto roots0 = kp_classify(2, RatAngle(0, 1), Mode::AsStated, ZetaReading::MthRoot);
  CHECK(roots0.type1.size() == 3);

  auto main1 = kp_classify(2, RatAngle(1, 2), Mode::MainTheorem);
  CHECK(main1.fpdims() == std::vector<std::int64_t>{1, 2, 2, 2, 4, 8});
  std::set<RatAngle> zetas;
  for (const auto& t : main1.type1)
    if (t.m == 2) zetas.insert(t.zeta);
  CHECK(zetas == std::set<RatAngle>{RatAngle(1, 4), RatAngle(3, 4)});

  auto stated1 = kp_classify(2, RatAngle(1, 2), Mode::AsStated);
  CHECK(stated1.fpdims() == std::vector<std::int64_t>{1, 2, 4, 4, 8, 8});
  CHECK(stated1.keys() != main1.keys());
}

TEST_CASE("symmetric characters in the as-stated second type") {
  auto r = kp_classify(3, RatAngle(0, 1), Mode::AsStated);
  for (const auto& t : r.type2) {
    REQUIRE(t.eta);
    const auto& el = t.datum.H.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
      int s = el[i];
      int sw = (s % 3) * 3 + s / 3;
      CHECK((*t.eta)[i] == (*t.eta)[static_cast<std::size_t>(t.datum.H.index_of(sw))]);
    }
  }
}

TEST_CASE("order of q is checked") {
  CHECK_THROWS_WITH_AS(kp_classify(2, RatAngle(1, 3), Mode::AsStated), doctest::Contains("BadOrder"), Error);
}

TEST_CASE("three-way concordance") {
  auto c = compare_kp_vs_general(2, RatAngle(1, 2));
  REQUIRE(c.oracle);
  CHECK(c.main_matches_oracle);
  CHECK(c.as_stated_flagged());
  CHECK_FALSE(c.only_as_stated.empty());
  CHECK_FALSE(c.only_main.empty());
  CHECK(c.str().find("flagged") != std::string::npos);

  auto c0 = compare_kp_vs_general(2, RatAngle(0, 1));
  CHECK(c0.main_matches_oracle);
  // The literal statement lists 7 entries here against 6 from the enumeration.
  CHECK(c0.as_stated.total() == 7);
  CHECK(c0.as_stated_flagged());

  for (int j = 0; j < 3; ++j) {
    auto c3 = compare_kp_vs_general(3, RatAngle(j, 3));
    CHECK(c3.main_matches_oracle);
    CHECK(c3.json()["main_matches_oracle"] == true);
  }
}

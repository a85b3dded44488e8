// Copyright 2026 The cpe-solver Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "cpe/game.hpp"
#include "fixtures.hpp"

namespace cpe {
namespace {

using testing::Dist;
using testing::Idx;
using testing::Q;
using testing::Support;

TEST_CASE("rational parsing and printing") {
  CHECK(ParseRational("3/4") == Q(3, 4));
  CHECK(ParseRational("-6/8") == Q(-3, 4));
  CHECK(ParseRational("7") == Q(7));
  CHECK(ToString(Q(4, 2)) == "2");
  CHECK(ToString(Q(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(ParseRational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(ParseRational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(ParseRational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(ParseRational(""), std::invalid_argument);
}

TEST_CASE("game construction validates shape and labels") {
  CHECK_THROWS_AS(Game({"1"}, {{}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Game({"1"}, {{"a", "a"}}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Game({"1"}, {{"a", "b"}}, {0}), std::invalid_argument);
  const Game g = testing::PureCpeGame();
  CHECK(g.profile_count() == 18);
  CHECK(g.payoff(Idx(g, "x1,x2,x3"), 2) == 2);
  CHECK(g.payoff(Idx(g, "z1,y2,y3"), 0) == 3);
  CHECK(g.ProfileLabel(Idx(g, "z1,x2,y3")) == "z1,x2,y3");
}

TEST_CASE("profile indexing is lexicographic with player 0 most significant") {
  const Game g = testing::PureCpeGame();
  CHECK(g.ProfileIndex(Profile{0, 0, 1}) == 1);
  CHECK(g.ProfileIndex(Profile{0, 1, 0}) == 2);
  CHECK(g.ProfileIndex(Profile{1, 0, 0}) == 6);
  for (std::size_t s = 0; s < g.profile_count(); ++s) {
    CHECK(g.ProfileIndex(g.ProfileAt(s)) == s);
  }
  CHECK(g.WithStrategy(Idx(g, "y1,y2,x3"), 0, 2) == Idx(g, "z1,y2,x3"));
  CHECK_THROWS_AS(g.ProfileIndex(Profile{3, 0, 0}), std::invalid_argument);
}

TEST_CASE("correlated strategy validation") {
  const Game g = testing::MatchingPennies();
  CHECK_THROWS_AS(CorrelatedStrategy(g, {Q(1, 2), Q(1, 2), 0}), std::invalid_argument);
  CHECK_THROWS_AS(CorrelatedStrategy(g, {Q(1, 2), Q(1, 4), 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CorrelatedStrategy(g, {Q(3, 2), Q(-1, 2), 0, 0}),
                  std::invalid_argument);
  CHECK(CorrelatedStrategy::Uniform(g)[3] == Q(1, 4));
}

TEST_CASE("conditional deviation values") {
  const Game mp = testing::MatchingPennies();
  const auto uniform = CorrelatedStrategy::Uniform(mp);
  CHECK(ConditionalDeviationValue(mp, uniform, 0, 0, 0) == 0);

  const Game g = testing::PureCpeGame();
  const auto delta = CorrelatedStrategy::PointMass(g, Idx(g, "y1,y2,y3"));
  for (std::size_t d = 0; d < 3; ++d) {
    CHECK(ConditionalDeviationValue(g, delta, 0, 0, d) == 0);
  }
  CHECK_THROWS_AS(ConditionalDeviationValue(g, delta, 3, 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(ConditionalDeviationValue(g, delta, 0, 0, 5),
                  std::invalid_argument);

  // Linear family at eps = 1/100: conditional values at y1 are 3 + 15e, 3 + 15e,
  // 3 + 9e over total mass 1 + 25e.
  const auto rho = testing::SupportingFamily(g).At(g, Q(1, 100));
  const Rational scale = 1 / (1 + Q(25, 100));
  CHECK(ConditionalDeviationValue(g, rho, 0, 1, 0) == (3 + Q(15, 100)) * scale);
  CHECK(ConditionalDeviationValue(g, rho, 0, 1, 1) == (3 + Q(15, 100)) * scale);
  CHECK(ConditionalDeviationValue(g, rho, 0, 1, 2) == Q(309, 125));
}

TEST_CASE("correlated equilibrium check") {
  const Game mp = testing::MatchingPennies();
  CHECK(IsCorrelatedEquilibrium(mp, CorrelatedStrategy::Uniform(mp)).is_equilibrium);

  const Game g1 = testing::PureCpeGame();
  CHECK(IsCorrelatedEquilibrium(g1, Dist(g1, {{"y1,y2,y3", 1}})).is_equilibrium);
  CHECK(IsCorrelatedEquilibrium(g1, Dist(g1, {{"z1,z2,y3", 1}})).is_equilibrium);
  CHECK(IsCorrelatedEquilibrium(g1, Dist(g1, {{"y1,y2,y3", Q(1, 2)},
                                              {"z1,z2,y3", Q(1, 2)}}))
            .is_equilibrium);

  const auto bad = IsCorrelatedEquilibrium(g1, Dist(g1, {{"y1,x2,x3", 1}}));
  REQUIRE_FALSE(bad.is_equilibrium);
  const IncentiveViolation& v = *bad.violation;
  CHECK(v.player == 0);
  CHECK(v.recommended == 1);
  CHECK(v.deviation == 0);
  CHECK(v.follow_value == 0);
  CHECK(v.deviation_value == 1);

  const Game g2 = testing::PdceGame();
  CHECK(IsCorrelatedEquilibrium(g2, testing::PdceDistribution(g2)).is_equilibrium);

  CHECK_THROWS_AS(IsCorrelatedEquilibrium(g2, CorrelatedStrategy::Uniform(mp)),
                  std::invalid_argument);
}

TEST_CASE("violation witnesses recheck on random distributions") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> weight(0, 4);
  const Game g = testing::PureCpeGame();
  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> w(g.profile_count());
    Rational total = 0;
    for (auto& x : w) total += (x = weight(rng));
    if (total == 0) continue;
    for (auto& x : w) x /= total;
    const CorrelatedStrategy rho(g, w);
    const auto check = IsCorrelatedEquilibrium(g, rho);
    if (check.is_equilibrium) continue;
    ++violations;
    const auto& v = *check.violation;
    CHECK(ConditionalDeviationValue(g, rho, v.player, v.recommended, v.recommended) <
          ConditionalDeviationValue(g, rho, v.player, v.recommended, v.deviation));
  }
  CHECK(violations > 0);
}

TEST_CASE("marginals and product supports") {
  const Game g1 = testing::PureCpeGame();
  const auto delta = Dist(g1, {{"y1,y2,y3", 1}});
  CHECK(Marginal(g1, delta, 2) == std::vector<Rational>{0, 1});
  CHECK(ProductSupportOf(g1, delta) == Support(g1, {{"y1"}, {"y2"}, {"y3"}}));
  const auto mix = Dist(g1, {{"y1,y2,y3", Q(1, 2)}, {"z1,z2,y3", Q(1, 2)}});
  CHECK(ProductSupportOf(g1, mix) ==
        Support(g1, {{"y1", "z1"}, {"y2", "z2"}, {"y3"}}));
  CHECK(ProductSupportOf(g1, mix).ToString(g1) == "{y1,z1}x{y2,z2}x{y3}");

  const Game g2 = testing::PdceGame();
  const auto rho = testing::PdceDistribution(g2);
  CHECK(Marginal(g2, rho, 0) == std::vector<Rational>(4, Q(1, 4)));
  CHECK(ProductSupportOf(g2, rho) == ProductSupport::Full(g2));

  const Game mp = testing::MatchingPennies();
  CHECK(Marginal(mp, CorrelatedStrategy::Uniform(mp), 1) ==
        std::vector<Rational>{Q(1, 2), Q(1, 2)});
}

TEST_CASE("marginals sum to one and cover the support") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> weight(0, 3);
  const Game g = testing::PdceGame();
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> w(g.profile_count());
    Rational total = 0;
    for (auto& x : w) total += (x = weight(rng));
    for (auto& x : w) x /= total;
    const CorrelatedStrategy rho(g, w);
    const ProductSupport support = ProductSupportOf(g, rho);
    for (std::size_t i = 0; i < g.player_count(); ++i) {
      CHECK(Sum(Marginal(g, rho, i)) == 1);
    }
    for (std::size_t s = 0; s < g.profile_count(); ++s) {
      if (sgn(rho[s]) > 0) CHECK(support.ContainsProfile(g, s));
    }
  }
}

TEST_CASE("complete mixedness") {
  const Game g = testing::PureCpeGame();
  CHECK(IsCompletelyMixed(CorrelatedStrategy::Uniform(g)));
  CHECK_FALSE(IsCompletelyMixed(Dist(g, {{"y1,y2,y3", 1}})));
  CHECK(IsCompletelyMixed(testing::SupportingFamily(g).At(g, Q(1, 1000))));
}

TEST_CASE("weakly dominated strategies") {
  const Game g = testing::TwoPlayer({{"a", "b"}, {"c", "d"}},
                                    {{{1, 0}, {1, 0}}, {{1, 0}, {0, 0}}});
  CHECK(WeaklyDominatedStrategies(g, 0) == std::vector<std::size_t>{1});
  CHECK(WeaklyDominatedStrategies(g, 1).empty());

  const Game mp = testing::MatchingPennies();
  CHECK(WeaklyDominatedStrategies(mp, 0).empty());
  CHECK(WeaklyDominatedStrategies(mp, 1).empty());

  const Game g2 = testing::PdceGame();
  CHECK(WeaklyDominatedStrategies(g2, 2).empty());

  // Dominated by a mixture only: c is beaten by 1/2 a + 1/2 b.
  const Game mixed = testing::TwoPlayer(
      {{"a", "b", "c"}, {"l", "r"}}, {{{4, 0}, {0, 0}}, {{0, 0}, {4, 0}}, {{1, 0}, {1, 0}}});
  CHECK(WeaklyDominatedStrategies(mixed, 0) == std::vector<std::size_t>{2});
}

TEST_CASE("weak dominance LP agrees with a grid search") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> payoff(-2, 2);
  const int grid = 12;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> table(3 * 3 * 2);
    for (auto& x : table) x = payoff(rng);
    const Game g({"1", "2"}, {{"a", "b", "c"}, {"l", "m", "r"}}, table);
    const auto dominated = WeaklyDominatedStrategies(g, 0);
    for (std::size_t s = 0; s < 3; ++s) {
      bool grid_dominated = false;
      for (int p = 0; p <= grid && !grid_dominated; ++p) {
        for (int q = 0; p + q <= grid && !grid_dominated; ++q) {
          const Rational w[3] = {Q(p, grid), Q(q, grid), Q(grid - p - q, grid)};
          bool weak = true;
          bool strict = false;
          for (std::size_t o = 0; o < 3; ++o) {
            Rational mix = 0;
            for (std::size_t t = 0; t < 3; ++t) mix += w[t] * g.payoff(t * 3 + o, 0);
            const Rational own = g.payoff(s * 3 + o, 0);
            weak = weak && mix >= own;
            strict = strict || mix > own;
          }
          grid_dominated = weak && strict;
        }
      }
      const bool lp = std::find(dominated.begin(), dominated.end(), s) != dominated.end();
      if (grid_dominated) CHECK(lp);
    }
  }
}

TEST_CASE("product distributions") {
  const Game g = testing::TwoPlayer({{"a", "b"}, {"c", "d"}},
                                    {{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}});
  const MixedProfile sigma(g, {{Q(1, 3), Q(2, 3)}, {Q(1, 4), Q(3, 4)}});
  CHECK(ProductDistribution(g, sigma).probabilities() ==
        std::vector<Rational>{Q(1, 12), Q(1, 4), Q(1, 6), Q(1, 2)});
  const MixedProfile uniform(g, {{Q(1, 2), Q(1, 2)}, {Q(1, 2), Q(1, 2)}});
  CHECK(ProductDistribution(g, uniform) == CorrelatedStrategy::Uniform(g));
  const MixedProfile pure(g, {{0, 1}, {1, 0}});
  CHECK(ProductDistribution(g, pure) == CorrelatedStrategy::PointMass(g, 2));
  CHECK(IsCompletelyMixed(ProductDistribution(g, sigma)) == sigma.IsCompletelyMixed());
  CHECK(IsCompletelyMixed(ProductDistribution(g, pure)) == pure.IsCompletelyMixed());
  CHECK_THROWS_AS(MixedProfile(g, {{Q(1, 2)}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("single-strategy players are permitted") {
  const Game g({"1", "2"}, {{"only"}, {"a", "b"}}, {0, 1, 0, 2});
  const auto rho = CorrelatedStrategy::PointMass(g, 1);
  CHECK(IsCorrelatedEquilibrium(g, rho).is_equilibrium);
  CHECK_FALSE(IsCorrelatedEquilibrium(g, CorrelatedStrategy::PointMass(g, 0))
                  .is_equilibrium);
}

TEST_CASE("strategy duplication") {
  const Game g = testing::PureCpeGame();
  const Game dup = WithDuplicatedStrategy(g, 0, 1, "y1'");
  CHECK(dup.strategy_count(0) == 4);
  CHECK(dup.strategy_name(0, 3) == "y1'");
  for (std::size_t s = 0; s < dup.profile_count(); ++s) {
    Profile p = dup.ProfileAt(s);
    if (p[0] == 3) p[0] = 1;
    const std::size_t original = g.ProfileIndex(p);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(dup.payoff(s, i) == g.payoff(original, i));
    }
  }
  const auto lifted = LiftToDuplicate(g, dup, Dist(g, {{"y1,y2,y3", 1}}));
  CHECK(lifted[Idx(dup, "y1,y2,y3")] == 1);
  CHECK_THROWS_AS(WithDuplicatedStrategy(g, 0, 1, "x1"), std::invalid_argument);
}

}  // namespace
}  // namespace cpe

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

#include "cpe/certification.hpp"
#include "cpe/classifier.hpp"
#include "cpe/random_game.hpp"
#include "fixtures.hpp"

namespace cpe {
namespace {

using testing::Dist;
using testing::Q;
using testing::Support;

const SupportClassification& Find(const std::vector<SupportClassification>& all,
                                  const ProductSupport& support) {
  auto it = std::find_if(all.begin(), all.end(),
                         [&](const auto& c) { return c.support == support; });
  REQUIRE(it != all.end());
  return *it;
}

TEST_CASE("CE with an exact support") {
  const Game g1 = testing::PureCpeGame();
  const auto delta = CeWithExactSupport(g1, Support(g1, {{"y1"}, {"y2"}, {"y3"}}));
  REQUIRE(delta);
  CHECK(*delta == Dist(g1, {{"y1,y2,y3", 1}}));

  const Game mp = testing::MatchingPennies();
  const auto uniform = CeWithExactSupport(mp, ProductSupport::Full(mp));
  REQUIRE(uniform);
  CHECK(*uniform == CorrelatedStrategy::Uniform(mp));

  // (a, c) is strictly dominant.
  const Game g = testing::TwoPlayer({{"a", "b"}, {"c", "d"}},
                                    {{{2, 2}, {2, 1}}, {{1, 2}, {1, 1}}});
  CHECK_FALSE(CeWithExactSupport(g, Support(g, {{"b"}, {"d"}})));
  CHECK(CeWithExactSupport(g, Support(g, {{"a"}, {"c"}})));
}

TEST_CASE("support enumeration") {
  const Game g1 = testing::PureCpeGame();
  CHECK(CountProductSupports(g1) == 7 * 7 * 3);
  const auto supports = EnumerateProductSupports(g1, kDefaultSupportCap);
  CHECK(supports.size() == 147);
  CHECK(supports.front() == ProductSupport::Full(g1));
  for (std::size_t k = 1; k < supports.size(); ++k) {
    CHECK(supports[k - 1].total_size() >= supports[k].total_size());
  }
  try {
    EnumerateProductSupports(g1, 1);
    FAIL("expected the cap to trip");
  } catch (const CapExceeded& e) {
    CHECK(e.cap() == 1);
    CHECK(e.required() == 147);
  }
  CHECK_THROWS_AS(ClassifyAllSupports(g1, {100}), CapExceeded);
}

TEST_CASE("classification of the pure CPE game") {
  const Game g1 = testing::PureCpeGame();
  const auto all = ClassifyAllSupports(g1);
  CHECK(all.size() == 147);
  CHECK(Find(all, Support(g1, {{"y1"}, {"y2"}, {"y3"}})).equality_holds);
  CHECK(Find(all, Support(g1, {{"z1"}, {"z2"}, {"y3"}})).equality_holds);
  const auto& mixed = Find(all, Support(g1, {{"y1", "z1"}, {"y2", "z2"}, {"y3"}}));
  CHECK_FALSE(mixed.equality_holds);
  REQUIRE(mixed.refutation);
  CHECK(VerifyRefutation(g1, mixed.support, *mixed.refutation));

  const auto maximal = MaximalCpeSupports(all);
  auto covered = [&](const ProductSupport& s) {
    return std::any_of(maximal.begin(), maximal.end(),
                       [&](const auto& m) { return s.IsSubsetOf(m); });
  };
  CHECK(covered(Support(g1, {{"y1"}, {"y2"}, {"y3"}})));
  CHECK(covered(Support(g1, {{"z1"}, {"z2"}, {"y3"}})));
  for (const auto& a : maximal) {
    for (const auto& b : maximal) {
      if (!(a == b)) CHECK_FALSE(a.IsSubsetOf(b));
    }
  }
}

TEST_CASE("classification of the PDCE game and matching pennies") {
  const Game g2 = testing::PdceGame();
  const ProductSupport full2 = ProductSupport::Full(g2);
  CHECK_FALSE(CertifySupport(g2, full2).is_perfect());

  const Game mp = testing::MatchingPennies();
  const auto all = ClassifyAllSupports(mp);
  const auto& full = Find(all, ProductSupport::Full(mp));
  CHECK(full.equality_holds);
  REQUIRE(full.sample_ce);
  CHECK(*full.sample_ce == CorrelatedStrategy::Uniform(mp));
  CHECK(MaximalCpeSupports(all) == std::vector<ProductSupport>{ProductSupport::Full(mp)});
}

TEST_CASE("single-profile game") {
  const Game g({"1", "2"}, {{"a"}, {"b"}}, {1, 1});
  CHECK(MaximalCpeSupports(g) == std::vector<ProductSupport>{ProductSupport::Full(g)});
}

TEST_CASE("classification invariants on random games") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> coin(0, 4);
  int inherited = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const Game g = RandomGame(rng);
    const auto all = ClassifyAllSupports(g);
    for (const auto& c : all) {
      if (c.equality_holds && c.ce_exists) {
        REQUIRE(c.sample_ce);
        CHECK(IsCorrelatedEquilibrium(g, *c.sample_ce).is_equilibrium);
        CHECK(ProductSupportOf(g, *c.sample_ce) == c.support);
        CHECK(IsCorrelatedPerfect(g, *c.sample_ce).is_perfect());
      }
      if (!c.equality_holds) {
        REQUIRE(c.refutation);
        CHECK(VerifyRefutation(g, c.support, *c.refutation));
      }
      // Pruned verdicts agree with a direct solve on a sample.
      if (c.inherited) {
        ++inherited;
        if (coin(rng) == 0) {
          CHECK(CertifySupport(g, c.support).is_perfect() == c.equality_holds);
        }
      }
    }
    for (std::size_t i = 0; i < g.player_count(); ++i) {
      for (std::size_t s : WeaklyDominatedStrategies(g, i)) {
        for (const auto& c : all) {
          if (c.equality_holds) CHECK_FALSE(c.support.contains(i, s));
        }
      }
    }
  }
  CHECK(inherited > 0);
}

}  // namespace
}  // namespace cpe

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

#ifndef CPE_TESTS_FIXTURES_HPP_
#define CPE_TESTS_FIXTURES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "cpe/game.hpp"
#include "cpe/pdce.hpp"
#include "cpe/polynomial.hpp"
#include "cpe/rational.hpp"
#include "cpe/sequence.hpp"

namespace cpe::testing {

inline Rational Q(long num, long den = 1) { return MakeRational(num, den); }

// Profile index from a label such as "y1,y2,x3".
inline std::size_t Idx(const Game& game, const std::string& label) {
  Profile profile;
  std::size_t start = 0;
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    const std::size_t comma = label.find(',', start);
    const std::string name = label.substr(start, comma - start);
    profile.push_back(*game.FindStrategy(i, name));
    start = comma + 1;
  }
  return game.ProfileIndex(profile);
}

inline ProductSupport Support(const Game& game,
                              const std::vector<std::vector<std::string>>& names) {
  std::vector<std::vector<std::size_t>> indices(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (const auto& name : names[i]) {
      indices[i].push_back(*game.FindStrategy(i, name));
    }
  }
  return ProductSupport::FromIndices(game, indices);
}

inline CorrelatedStrategy Dist(
    const Game& game, const std::vector<std::pair<std::string, Rational>>& mass) {
  std::vector<Rational> values(game.profile_count());
  for (const auto& [label, p] : mass) values[Idx(game, label)] = p;
  return CorrelatedStrategy(game, std::move(values));
}

// Table entries {p1, p2, p3} addressed by [layer][row][column].
inline Game ThreePlayer(std::vector<std::vector<std::string>> strategies,
                        const std::vector<std::vector<std::vector<std::vector<int>>>>& t) {
  std::vector<Rational> payoffs;
  Game shape({"1", "2", "3"}, strategies,
             std::vector<Rational>(strategies[0].size() * strategies[1].size() *
                                   strategies[2].size() * 3));
  payoffs.resize(shape.payoff_table().size());
  for (std::size_t s = 0; s < shape.profile_count(); ++s) {
    const Profile p = shape.ProfileAt(s);
    for (std::size_t i = 0; i < 3; ++i) payoffs[s * 3 + i] = t[p[2]][p[0]][p[1]][i];
  }
  return Game({"1", "2", "3"}, std::move(strategies), std::move(payoffs));
}

// Three players; (y1,y2,y3) and (z1,z2,y3) are pure correlated perfect
// equilibria, any strict mixture of the two is not.
inline Game PureCpeGame() {
  using V = std::vector<int>;
  const V c{3, 3, 1};
  return ThreePlayer({{"x1", "y1", "z1"}, {"x2", "y2", "z2"}, {"x3", "y3"}},
                     {{{V{1, 1, 2}, V{2, 0, 0}, V{2, 0, 0}},
                       {V{0, 2, 0}, V{3, 0, 0}, V{0, 3, 0}},
                       {V{0, 2, 0}, V{0, 3, 0}, V{3, 0, 0}}},
                      {{c, c, c}, {c, c, c}, {c, c, c}}});
}

// Three players; player 3 is a dummy. Has a correlated equilibrium that
// survives independent trembles but is not correlated perfect.
inline Game PdceGame() {
  using V = std::vector<int>;
  const V o{0, 0, 0};
  return ThreePlayer(
      {{"w1", "x1", "y1", "z1"}, {"w2", "x2", "y2", "z2"}, {"x3", "y3"}},
      {{{o, o, o, o},
        {o, o, o, o},
        {V{0, 1, 0}, V{0, 1, 0}, V{1, -2, 0}, V{-2, 1, 0}},
        {V{0, 1, 0}, V{0, 1, 0}, V{-2, 1, 0}, V{1, -2, 0}}},
       {{o, o, V{1, 0, 0}, V{1, 0, 0}},
        {o, o, V{1, 0, 0}, V{1, 0, 0}},
        {o, o, V{1, -2, 0}, V{-2, 1, 0}},
        {o, o, V{-2, 1, 0}, V{1, -2, 0}}}});
}

inline Game TwoPlayer(std::vector<std::vector<std::string>> strategies,
                      const std::vector<std::vector<std::pair<int, int>>>& t) {
  std::vector<Rational> payoffs;
  for (const auto& row : t) {
    for (const auto& [a, b] : row) {
      payoffs.emplace_back(a);
      payoffs.emplace_back(b);
    }
  }
  return Game({"1", "2"}, std::move(strategies), std::move(payoffs));
}

inline Game MatchingPennies() {
  return TwoPlayer({{"H1", "T1"}, {"H2", "T2"}},
                   {{{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}});
}

inline CorrelatedStrategy PdceDistribution(const Game& g) {
  return Dist(g, {{"y1,w2,x3", Q(3, 16)}, {"y1,x2,x3", Q(1, 16)},
                  {"z1,w2,x3", Q(1, 16)}, {"z1,x2,x3", Q(3, 16)},
                  {"w1,y2,y3", Q(1, 16)}, {"w1,z2,y3", Q(3, 16)},
                  {"x1,y2,y3", Q(3, 16)}, {"x1,z2,y3", Q(1, 16)}});
}

inline EpsPolynomial Poly(std::vector<Rational> coeffs) {
  return EpsPolynomial(std::move(coeffs));
}

inline TrembleFamily AsymmetricTrembles(const Game& g) {
  const EpsPolynomial e = EpsPolynomial::Monomial(1, 1);
  const EpsPolynomial e2 = EpsPolynomial::Monomial(1, 2);
  const EpsPolynomial wx = Poly({1, -2, -1});
  const EpsPolynomial yz = Poly({1, -3});
  TrembleFamily::Rows rows(3);
  for (std::size_t i = 0; i < 2; ++i) {
    // Order w, x, y, z.
    rows[i] = {{wx, e, e, e2}, {e, wx, e2, e}, {e, e, yz, e}, {e, e, e, yz}};
  }
  rows[2] = {{Poly({1, -1}), e}, {e, Poly({1, -1})}};
  return TrembleFamily(g, std::move(rows));
}

inline ParametricDistribution SupportingFamily(const Game& g) {
  std::vector<EpsPolynomial> masses(g.profile_count(),
                                    EpsPolynomial::Monomial(1, 1));
  masses[Idx(g, "y1,y2,x3")] = EpsPolynomial::Monomial(3, 1);
  masses[Idx(g, "z1,y2,x3")] = EpsPolynomial::Monomial(7, 1);
  masses[Idx(g, "y1,y2,y3")] = EpsPolynomial(Rational(1));
  return ParametricDistribution(g, std::move(masses));
}

// Refuting plans for the PDCE game: y, z, w -> w and x -> x for players 1 and 2.
inline DeviationProfile DeviateToW() {
  const DeviationPlan p = DeviationPlan::Pure({0, 1, 0, 0});
  return {p, p, DeviationPlan::Identity(2)};
}

// Plans for the pure CPE game: y, z -> x for players 1 and 2.
inline DeviationProfile DeviateToX() {
  const DeviationPlan p = DeviationPlan::Pure({0, 0, 0});
  return {p, p, DeviationPlan::Identity(2)};
}

}  // namespace cpe::testing

#endif  // CPE_TESTS_FIXTURES_HPP_

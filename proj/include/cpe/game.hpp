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

#ifndef CPE_GAME_HPP_
#define CPE_GAME_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cpe/rational.hpp"

namespace cpe {

// A pure strategy profile: one strategy index per player.
using Profile = std::vector<std::size_t>;

// Finite n-player normal-form game with an exact payoff tensor.
//
// Profiles are indexed lexicographically with player 0 most significant, so
// the flat index of (s_0, ..., s_{n-1}) is
//   ((s_0 * |S_1| + s_1) * |S_2| + s_2) ...
// and payoffs are stored as payoffs[index * n + player].
class Game {
 public:
  // Throws std::invalid_argument if any strategy set is empty, labels repeat
  // within a player, or the payoff table has the wrong length.
  Game(std::vector<std::string> player_names,
       std::vector<std::vector<std::string>> strategy_names,
       std::vector<Rational> payoffs);

  std::size_t player_count() const { return player_names_.size(); }
  std::size_t strategy_count(std::size_t player) const;
  std::size_t profile_count() const { return profile_count_; }
  std::vector<std::size_t> shape() const;

  const std::string& player_name(std::size_t player) const;
  const std::string& strategy_name(std::size_t player,
                                   std::size_t strategy) const;
  const std::vector<std::string>& strategy_names(std::size_t player) const;
  std::optional<std::size_t> FindStrategy(std::size_t player,
                                          std::string_view label) const;

  const Rational& payoff(std::size_t profile_index, std::size_t player) const {
    return payoffs_[profile_index * player_count() + player];
  }
  const std::vector<Rational>& payoff_table() const { return payoffs_; }

  std::size_t ProfileIndex(std::span<const std::size_t> profile) const;
  Profile ProfileAt(std::size_t index) const;
  std::size_t StrategyOf(std::size_t profile_index, std::size_t player) const {
    return (profile_index / strides_[player]) % shape_[player];
  }
  // Index of the profile equal to `profile_index` except that `player` plays
  // `strategy`.
  std::size_t WithStrategy(std::size_t profile_index, std::size_t player,
                           std::size_t strategy) const;
  // "x1,y2,x3"
  std::string ProfileLabel(std::size_t profile_index) const;

  void CheckPlayer(std::size_t player) const;
  void CheckStrategy(std::size_t player, std::size_t strategy) const;

 private:
  std::vector<std::string> player_names_;
  std::vector<std::vector<std::string>> strategy_names_;
  std::vector<std::size_t> shape_;
  std::vector<std::size_t> strides_;
  std::size_t profile_count_ = 1;
  std::vector<Rational> payoffs_;
};

// Probability distribution over the profiles of a game, stored densely in
// the game's profile order.
class CorrelatedStrategy {
 public:
  // Throws std::invalid_argument unless the values are nonnegative, sum to
  // exactly one, and match the game's profile count.
  CorrelatedStrategy(const Game& game, std::vector<Rational> probabilities);

  static CorrelatedStrategy PointMass(const Game& game,
                                      std::size_t profile_index);
  static CorrelatedStrategy Uniform(const Game& game);

  const Rational& operator[](std::size_t profile_index) const {
    return probabilities_[profile_index];
  }
  const std::vector<Rational>& probabilities() const { return probabilities_; }
  std::size_t size() const { return probabilities_.size(); }
  const std::vector<std::size_t>& shape() const { return shape_; }

  bool operator==(const CorrelatedStrategy&) const = default;

 private:
  std::vector<std::size_t> shape_;
  std::vector<Rational> probabilities_;
};

// One subset of S_i per player; the product of the subsets is the set of
// profiles it stands for.
class ProductSupport {
 public:
  ProductSupport() = default;
  explicit ProductSupport(std::vector<std::vector<bool>> members);

  static ProductSupport Full(const Game& game);
  static ProductSupport Singleton(const Game& game, const Profile& profile);
  // Builds from per-player strategy index lists.
  static ProductSupport FromIndices(
      const Game& game, const std::vector<std::vector<std::size_t>>& indices);

  std::size_t player_count() const { return members_.size(); }
  bool contains(std::size_t player, std::size_t strategy) const {
    return members_[player][strategy];
  }
  bool ContainsProfile(const Game& game, std::size_t profile_index) const;
  std::vector<std::size_t> members(std::size_t player) const;
  std::size_t size(std::size_t player) const;
  std::size_t total_size() const;
  bool IsNonEmpty() const;
  // Componentwise inclusion.
  bool IsSubsetOf(const ProductSupport& other) const;
  const std::vector<std::vector<bool>>& mask() const { return members_; }

  // "{y1,z1}x{y2,z2}x{y3}"
  std::string ToString(const Game& game) const;

  bool operator==(const ProductSupport&) const = default;
  auto operator<=>(const ProductSupport&) const = default;

 private:
  std::vector<std::vector<bool>> members_;
};

// One probability vector over S_i per player.
class MixedProfile {
 public:
  // Throws std::invalid_argument unless every vector is a distribution of the
  // right length.
  MixedProfile(const Game& game, std::vector<std::vector<Rational>> strategies);

  const std::vector<Rational>& strategy(std::size_t player) const {
    return strategies_[player];
  }
  std::size_t player_count() const { return strategies_.size(); }
  bool IsCompletelyMixed() const;

 private:
  std::vector<std::vector<Rational>> strategies_;
};

// A violated incentive constraint: following `recommended` is strictly worse
// than switching to `deviation`.
struct IncentiveViolation {
  std::size_t player = 0;
  std::size_t recommended = 0;
  std::size_t deviation = 0;
  Rational follow_value;
  Rational deviation_value;
};

struct CorrelatedEquilibriumCheck {
  bool is_equilibrium = true;
  std::optional<IncentiveViolation> violation;
};

// Sum over s_{-i} of rho(s_i, s_{-i}) * u_i(s_i', s_{-i}).
Rational ConditionalDeviationValue(const Game& game,
                                   const CorrelatedStrategy& rho,
                                   std::size_t player, std::size_t recommended,
                                   std::size_t deviation);

// Checks every obedience constraint exactly; reports the first violation in
// (player, recommended, deviation) order.
CorrelatedEquilibriumCheck IsCorrelatedEquilibrium(
    const Game& game, const CorrelatedStrategy& rho);

// Probability that `player` is recommended each of its strategies.
std::vector<Rational> Marginal(const Game& game, const CorrelatedStrategy& rho,
                               std::size_t player);

// Strategies with strictly positive marginal, per player.
ProductSupport ProductSupportOf(const Game& game,
                                const CorrelatedStrategy& rho);

bool IsCompletelyMixed(const CorrelatedStrategy& rho);

// Strategies of `player` weakly dominated by some mixture over S_i.
// One exact LP per strategy: maximize the summed slack of the dominance
// inequalities; dominated iff the optimum is positive.
std::vector<std::size_t> WeaklyDominatedStrategies(const Game& game,
                                                   std::size_t player);

CorrelatedStrategy ProductDistribution(const Game& game,
                                       const MixedProfile& sigma);

// Copy of `game` with a payoff-identical copy of `strategy` appended to the
// strategy list of `player` under `label`.
Game WithDuplicatedStrategy(const Game& game, std::size_t player,
                            std::size_t strategy, const std::string& label);

// Re-embeds a distribution of `game` into the game produced by
// WithDuplicatedStrategy, keeping all mass on the original strategies.
CorrelatedStrategy LiftToDuplicate(const Game& game, const Game& duplicated,
                                   const CorrelatedStrategy& rho);

}  // namespace cpe

#endif  // CPE_GAME_HPP_

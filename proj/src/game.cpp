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

#include "cpe/game.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cpe/lp.hpp"

namespace cpe {
namespace {

void CheckDistribution(const std::vector<Rational>& values,
                       const std::string& what) {
  Rational total = 0;
  for (const auto& v : values) {
    if (sgn(v) < 0) throw std::invalid_argument(what + " has a negative entry");
    total += v;
  }
  if (total != 1) {
    throw std::invalid_argument(what + " sums to " + ToString(total) +
                                ", not 1");
  }
}

}  // namespace

Game::Game(std::vector<std::string> player_names,
           std::vector<std::vector<std::string>> strategy_names,
           std::vector<Rational> payoffs)
    : player_names_(std::move(player_names)),
      strategy_names_(std::move(strategy_names)),
      payoffs_(std::move(payoffs)) {
  if (player_names_.empty()) {
    throw std::invalid_argument("a game needs at least one player");
  }
  if (strategy_names_.size() != player_names_.size()) {
    throw std::invalid_argument("strategy list count does not match players");
  }
  shape_.resize(player_count());
  strides_.resize(player_count());
  for (std::size_t i = 0; i < player_count(); ++i) {
    const auto& names = strategy_names_[i];
    if (names.empty()) {
      throw std::invalid_argument("player " + player_names_[i] +
                                  " has no strategies");
    }
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size()) {
      throw std::invalid_argument("duplicate strategy label for player " +
                                  player_names_[i]);
    }
    shape_[i] = names.size();
  }
  for (std::size_t i = player_count(); i-- > 0;) {
    strides_[i] = profile_count_;
    profile_count_ *= shape_[i];
  }
  if (payoffs_.size() != profile_count_ * player_count()) {
    throw std::invalid_argument(
        "payoff table has " + std::to_string(payoffs_.size()) +
        " entries, expected " + std::to_string(profile_count_ * player_count()));
  }
}

std::size_t Game::strategy_count(std::size_t player) const {
  CheckPlayer(player);
  return shape_[player];
}

std::vector<std::size_t> Game::shape() const { return shape_; }

const std::string& Game::player_name(std::size_t player) const {
  CheckPlayer(player);
  return player_names_[player];
}

const std::string& Game::strategy_name(std::size_t player,
                                       std::size_t strategy) const {
  CheckStrategy(player, strategy);
  return strategy_names_[player][strategy];
}

const std::vector<std::string>& Game::strategy_names(std::size_t player) const {
  CheckPlayer(player);
  return strategy_names_[player];
}

std::optional<std::size_t> Game::FindStrategy(std::size_t player,
                                              std::string_view label) const {
  CheckPlayer(player);
  const auto& names = strategy_names_[player];
  auto it = std::find(names.begin(), names.end(), label);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

std::size_t Game::ProfileIndex(std::span<const std::size_t> profile) const {
  if (profile.size() != player_count()) {
    throw std::invalid_argument("profile length does not match player count");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < player_count(); ++i) {
    CheckStrategy(i, profile[i]);
    index += profile[i] * strides_[i];
  }
  return index;
}

Profile Game::ProfileAt(std::size_t index) const {
  if (index >= profile_count_) {
    throw std::invalid_argument("profile index out of range");
  }
  Profile profile(player_count());
  for (std::size_t i = 0; i < player_count(); ++i) {
    profile[i] = StrategyOf(index, i);
  }
  return profile;
}

std::size_t Game::WithStrategy(std::size_t profile_index, std::size_t player,
                               std::size_t strategy) const {
  const std::size_t current = StrategyOf(profile_index, player);
  return profile_index + strategy * strides_[player] -
         current * strides_[player];
}

std::string Game::ProfileLabel(std::size_t profile_index) const {
  std::string label;
  for (std::size_t i = 0; i < player_count(); ++i) {
    if (i > 0) label += ',';
    label += strategy_names_[i][StrategyOf(profile_index, i)];
  }
  return label;
}

void Game::CheckPlayer(std::size_t player) const {
  if (player >= player_count()) {
    throw std::invalid_argument("player index " + std::to_string(player) +
                                " out of range");
  }
}

void Game::CheckStrategy(std::size_t player, std::size_t strategy) const {
  CheckPlayer(player);
  if (strategy >= shape_[player]) {
    throw std::invalid_argument("strategy index " + std::to_string(strategy) +
                                " out of range for player " +
                                player_names_[player]);
  }
}

CorrelatedStrategy::CorrelatedStrategy(const Game& game,
                                       std::vector<Rational> probabilities)
    : shape_(game.shape()), probabilities_(std::move(probabilities)) {
  if (probabilities_.size() != game.profile_count()) {
    throw std::invalid_argument("distribution has " +
                                std::to_string(probabilities_.size()) +
                                " entries, game has " +
                                std::to_string(game.profile_count()) +
                                " profiles");
  }
  CheckDistribution(probabilities_, "correlated strategy");
}

CorrelatedStrategy CorrelatedStrategy::PointMass(const Game& game,
                                                 std::size_t profile_index) {
  std::vector<Rational> p(game.profile_count());
  if (profile_index >= p.size()) {
    throw std::invalid_argument("profile index out of range");
  }
  p[profile_index] = 1;
  return CorrelatedStrategy(game, std::move(p));
}

CorrelatedStrategy CorrelatedStrategy::Uniform(const Game& game) {
  const Rational each(1, game.profile_count());
  return CorrelatedStrategy(
      game, std::vector<Rational>(game.profile_count(), each));
}

ProductSupport::ProductSupport(std::vector<std::vector<bool>> members)
    : members_(std::move(members)) {}

ProductSupport ProductSupport::Full(const Game& game) {
  std::vector<std::vector<bool>> members;
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    members.emplace_back(game.strategy_count(i), true);
  }
  return ProductSupport(std::move(members));
}

ProductSupport ProductSupport::Singleton(const Game& game,
                                         const Profile& profile) {
  return FromIndices(game, [&] {
    std::vector<std::vector<std::size_t>> indices;
    for (std::size_t s : profile) indices.push_back({s});
    return indices;
  }());
}

ProductSupport ProductSupport::FromIndices(
    const Game& game, const std::vector<std::vector<std::size_t>>& indices) {
  if (indices.size() != game.player_count()) {
    throw std::invalid_argument("support needs one strategy set per player");
  }
  std::vector<std::vector<bool>> members;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    members.emplace_back(game.strategy_count(i), false);
    for (std::size_t s : indices[i]) {
      game.CheckStrategy(i, s);
      members.back()[s] = true;
    }
  }
  return ProductSupport(std::move(members));
}

bool ProductSupport::ContainsProfile(const Game& game,
                                     std::size_t profile_index) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!members_[i][game.StrategyOf(profile_index, i)]) return false;
  }
  return true;
}

std::vector<std::size_t> ProductSupport::members(std::size_t player) const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < members_[player].size(); ++s) {
    if (members_[player][s]) out.push_back(s);
  }
  return out;
}

std::size_t ProductSupport::size(std::size_t player) const {
  return static_cast<std::size_t>(
      std::count(members_[player].begin(), members_[player].end(), true));
}

std::size_t ProductSupport::total_size() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < members_.size(); ++i) total += size(i);
  return total;
}

bool ProductSupport::IsNonEmpty() const {
  if (members_.empty()) return false;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (size(i) == 0) return false;
  }
  return true;
}

bool ProductSupport::IsSubsetOf(const ProductSupport& other) const {
  if (members_.size() != other.members_.size()) return false;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].size() != other.members_[i].size()) return false;
    for (std::size_t s = 0; s < members_[i].size(); ++s) {
      if (members_[i][s] && !other.members_[i][s]) return false;
    }
  }
  return true;
}

std::string ProductSupport::ToString(const Game& game) const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += 'x';
    out += '{';
    bool first = true;
    for (std::size_t s : members(i)) {
      if (!first) out += ',';
      out += game.strategy_name(i, s);
      first = false;
    }
    out += '}';
  }
  return out;
}

MixedProfile::MixedProfile(const Game& game,
                           std::vector<std::vector<Rational>> strategies)
    : strategies_(std::move(strategies)) {
  if (strategies_.size() != game.player_count()) {
    throw std::invalid_argument("mixed profile needs one vector per player");
  }
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    if (strategies_[i].size() != game.strategy_count(i)) {
      throw std::invalid_argument("mixed strategy of player " +
                                  game.player_name(i) + " has wrong length");
    }
    CheckDistribution(strategies_[i], "mixed strategy of player " +
                                          game.player_name(i));
  }
}

bool MixedProfile::IsCompletelyMixed() const {
  for (const auto& sigma : strategies_) {
    for (const auto& p : sigma) {
      if (sgn(p) <= 0) return false;
    }
  }
  return true;
}

namespace {

void CheckCompatible(const Game& game, const CorrelatedStrategy& rho) {
  if (rho.shape() != game.shape()) {
    throw std::invalid_argument("distribution does not match the game shape");
  }
}

}  // namespace

Rational ConditionalDeviationValue(const Game& game,
                                   const CorrelatedStrategy& rho,
                                   std::size_t player, std::size_t recommended,
                                   std::size_t deviation) {
  CheckCompatible(game, rho);
  game.CheckStrategy(player, recommended);
  game.CheckStrategy(player, deviation);
  Rational total = 0;
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    if (game.StrategyOf(s, player) != recommended || sgn(rho[s]) == 0) continue;
    total += rho[s] * game.payoff(game.WithStrategy(s, player, deviation),
                                  player);
  }
  return total;
}

CorrelatedEquilibriumCheck IsCorrelatedEquilibrium(
    const Game& game, const CorrelatedStrategy& rho) {
  CheckCompatible(game, rho);
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    for (std::size_t r = 0; r < game.strategy_count(i); ++r) {
      const Rational follow = ConditionalDeviationValue(game, rho, i, r, r);
      for (std::size_t d = 0; d < game.strategy_count(i); ++d) {
        if (d == r) continue;
        Rational deviate = ConditionalDeviationValue(game, rho, i, r, d);
        if (deviate > follow) {
          return {false, IncentiveViolation{i, r, d, follow, deviate}};
        }
      }
    }
  }
  return {};
}

std::vector<Rational> Marginal(const Game& game, const CorrelatedStrategy& rho,
                               std::size_t player) {
  CheckCompatible(game, rho);
  game.CheckPlayer(player);
  std::vector<Rational> marginal(game.strategy_count(player));
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    if (sgn(rho[s]) != 0) marginal[game.StrategyOf(s, player)] += rho[s];
  }
  return marginal;
}

ProductSupport ProductSupportOf(const Game& game,
                                const CorrelatedStrategy& rho) {
  CheckCompatible(game, rho);
  std::vector<std::vector<bool>> members;
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    members.emplace_back(game.strategy_count(i), false);
  }
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    if (sgn(rho[s]) == 0) continue;
    for (std::size_t i = 0; i < game.player_count(); ++i) {
      members[i][game.StrategyOf(s, i)] = true;
    }
  }
  return ProductSupport(std::move(members));
}

bool IsCompletelyMixed(const CorrelatedStrategy& rho) {
  return std::all_of(rho.probabilities().begin(), rho.probabilities().end(),
                     [](const Rational& p) { return sgn(p) > 0; });
}

std::vector<std::size_t> WeaklyDominatedStrategies(const Game& game,
                                                   std::size_t player) {
  game.CheckPlayer(player);
  const std::size_t k = game.strategy_count(player);
  // Opponent profiles are represented by the profiles where `player` plays 0.
  std::vector<std::size_t> opponents;
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    if (game.StrategyOf(s, player) == 0) opponents.push_back(s);
  }
  std::vector<std::size_t> dominated;
  for (std::size_t target = 0; target < k; ++target) {
    // Variables: sigma(0..k-1) >= 0.
    lp::LinearProgram program(k);
    std::vector<Rational> objective(k);
    Rational objective_offset = 0;
    for (std::size_t base : opponents) {
      std::vector<Rational> row(k);
      for (std::size_t t = 0; t < k; ++t) {
        row[t] = game.payoff(game.WithStrategy(base, player, t), player);
        objective[t] += row[t];
      }
      const Rational& own = game.payoff(game.WithStrategy(base, player, target),
                                        player);
      objective_offset += own;
      program.AddConstraint(std::move(row), lp::Relation::kGreaterEqual, own);
    }
    program.AddConstraint(std::vector<Rational>(k, Rational(1)),
                          lp::Relation::kEqual, Rational(1));
    program.SetObjective(std::move(objective));
    const lp::LpOutcome outcome = lp::Solve(program);
    const auto& optimal = std::get<lp::Optimal>(outcome);
    if (optimal.value > objective_offset) dominated.push_back(target);
  }
  return dominated;
}

CorrelatedStrategy ProductDistribution(const Game& game,
                                       const MixedProfile& sigma) {
  if (sigma.player_count() != game.player_count()) {
    throw std::invalid_argument("mixed profile does not match the game");
  }
  std::vector<Rational> p(game.profile_count());
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    Rational value = 1;
    for (std::size_t i = 0; i < game.player_count() && sgn(value) != 0; ++i) {
      value *= sigma.strategy(i)[game.StrategyOf(s, i)];
    }
    p[s] = std::move(value);
  }
  return CorrelatedStrategy(game, std::move(p));
}

Game WithDuplicatedStrategy(const Game& game, std::size_t player,
                            std::size_t strategy, const std::string& label) {
  game.CheckStrategy(player, strategy);
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> names;
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    players.push_back(game.player_name(i));
    names.push_back(game.strategy_names(i));
  }
  names[player].push_back(label);
  // Build the payoff table of the enlarged game by mapping each new profile
  // back onto the original one.
  std::size_t count = 1;
  for (const auto& n : names) count *= n.size();
  const std::size_t n = game.player_count();
  std::vector<Rational> payoffs(count * n);
  const std::size_t copy = names[player].size() - 1;
  for (std::size_t index = 0; index < count; ++index) {
    Profile profile(n);
    std::size_t rest = index;
    for (std::size_t i = n; i-- > 0;) {
      profile[i] = rest % names[i].size();
      rest /= names[i].size();
    }
    if (profile[player] == copy) profile[player] = strategy;
    const std::size_t source = game.ProfileIndex(profile);
    for (std::size_t i = 0; i < n; ++i) {
      payoffs[index * n + i] = game.payoff(source, i);
    }
  }
  return Game(std::move(players), std::move(names), std::move(payoffs));
}

CorrelatedStrategy LiftToDuplicate(const Game& game, const Game& duplicated,
                                   const CorrelatedStrategy& rho) {
  CheckCompatible(game, rho);
  std::vector<Rational> p(duplicated.profile_count());
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    if (sgn(rho[s]) == 0) continue;
    p[duplicated.ProfileIndex(game.ProfileAt(s))] = rho[s];
  }
  return CorrelatedStrategy(duplicated, std::move(p));
}

}  // namespace cpe

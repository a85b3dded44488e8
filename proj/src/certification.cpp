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

#include "cpe/certification.hpp"

#include <string>

#include "cpe/lp.hpp"

namespace cpe {

DeviationPlan::DeviationPlan(std::vector<std::vector<Rational>> rows)
    : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != rows_.size()) {
      throw std::invalid_argument("deviation plan must be square");
    }
    Rational total = 0;
    for (const auto& p : rows_[r]) {
      if (sgn(p) < 0) {
        throw std::invalid_argument("deviation plan has a negative entry");
      }
      total += p;
    }
    if (total != 1) {
      throw std::invalid_argument("deviation plan row " + std::to_string(r) +
                                  " sums to " + ToString(total));
    }
  }
}

DeviationPlan DeviationPlan::Identity(std::size_t strategy_count) {
  std::vector<std::vector<Rational>> rows(
      strategy_count, std::vector<Rational>(strategy_count));
  for (std::size_t r = 0; r < strategy_count; ++r) rows[r][r] = 1;
  return DeviationPlan(std::move(rows));
}

DeviationPlan DeviationPlan::Pure(const std::vector<std::size_t>& target) {
  std::vector<std::vector<Rational>> rows(target.size(),
                                          std::vector<Rational>(target.size()));
  for (std::size_t r = 0; r < target.size(); ++r) {
    if (target[r] >= target.size()) {
      throw std::invalid_argument("deviation target out of range");
    }
    rows[r][target[r]] = 1;
  }
  return DeviationPlan(std::move(rows));
}

bool DeviationPlan::Follows(std::size_t recommended) const {
  const auto& row = rows_[recommended];
  for (std::size_t t = 0; t < row.size(); ++t) {
    if (t == recommended ? row[t] != 1 : sgn(row[t]) != 0) return false;
  }
  return true;
}

DeviationProfile IdentityProfile(const Game& game) {
  DeviationProfile alpha;
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    alpha.push_back(DeviationPlan::Identity(game.strategy_count(i)));
  }
  return alpha;
}

namespace {

void CheckProfileShape(const Game& game, const DeviationProfile& alpha) {
  if (alpha.size() != game.player_count()) {
    throw std::invalid_argument("need one deviation plan per player");
  }
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i].strategy_count() != game.strategy_count(i)) {
      throw std::invalid_argument("deviation plan of player " +
                                  game.player_name(i) + " has wrong size");
    }
  }
}

Rational GainUnchecked(const Game& game, std::size_t s, std::size_t player,
                       const DeviationPlan& plan) {
  const std::size_t own = game.StrategyOf(s, player);
  const Rational& base = game.payoff(s, player);
  Rational gain = 0;
  const auto& row = plan.row(own);
  for (std::size_t t = 0; t < row.size(); ++t) {
    if (t == own || sgn(row[t]) == 0) continue;
    gain += row[t] * (game.payoff(game.WithStrategy(s, player, t), player) -
                      base);
  }
  return gain;
}

}  // namespace

Rational DeviationGain(const Game& game, std::size_t profile_index,
                       std::size_t player, const DeviationPlan& plan) {
  game.CheckPlayer(player);
  if (profile_index >= game.profile_count()) {
    throw std::invalid_argument("profile index out of range");
  }
  if (plan.strategy_count() != game.strategy_count(player)) {
    throw std::invalid_argument("deviation plan has wrong size");
  }
  return GainUnchecked(game, profile_index, player, plan);
}

Rational AggregateGain(const Game& game, std::size_t profile_index,
                       const DeviationProfile& alpha) {
  CheckProfileShape(game, alpha);
  if (profile_index >= game.profile_count()) {
    throw std::invalid_argument("profile index out of range");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    total += GainUnchecked(game, profile_index, i, alpha[i]);
  }
  return total;
}

DualVectorCheck IsDualVector(const Game& game, const DeviationProfile& alpha) {
  CheckProfileShape(game, alpha);
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    Rational gain = AggregateGain(game, s, alpha);
    if (sgn(gain) < 0) return {false, s, std::move(gain)};
  }
  return {};
}

bool IsRestricted(const DeviationProfile& alpha,
                  const ProductSupport& support) {
  if (alpha.size() != support.player_count()) {
    throw std::invalid_argument("support and plans disagree on players");
  }
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i].strategy_count() != support.mask()[i].size()) {
      throw std::invalid_argument("support and plan sizes disagree");
    }
    for (std::size_t r = 0; r < alpha[i].strategy_count(); ++r) {
      if (!support.contains(i, r) && !alpha[i].Follows(r)) return false;
    }
  }
  return true;
}

CpeVerdict CertifySupport(const Game& game, const ProductSupport& support) {
  if (support.player_count() != game.player_count()) {
    throw std::invalid_argument("support does not match the game");
  }
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    if (support.mask()[i].size() != game.strategy_count(i)) {
      throw std::invalid_argument("support does not match the game");
    }
    if (support.size(i) == 0) {
      throw std::invalid_argument("support of player " + game.player_name(i) +
                                  " is empty");
    }
  }

  // One variable per off-diagonal entry alpha_i(t | r) with r in the
  // support; the diagonal is implied by  sum_{t != r} alpha_i(t | r) <= 1.
  struct Variable {
    std::size_t player;
    std::size_t recommended;
    std::size_t target;
  };
  std::vector<Variable> variables;
  std::vector<std::vector<std::size_t>> first_variable(game.player_count());
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    first_variable[i].assign(game.strategy_count(i), 0);
    for (std::size_t r : support.members(i)) {
      first_variable[i][r] = variables.size();
      for (std::size_t t = 0; t < game.strategy_count(i); ++t) {
        if (t != r) variables.push_back({i, r, t});
      }
    }
  }

  std::vector<std::vector<bool>> in_support = support.mask();
  auto variable_index = [&](std::size_t i, std::size_t r, std::size_t t) {
    return first_variable[i][r] + (t < r ? t : t - 1);
  };

  DeviationProfile alpha = IdentityProfile(game);
  if (!variables.empty()) {
    lp::LinearProgram program(variables.size());
    std::vector<Rational> objective(variables.size());
    for (std::size_t s = 0; s < game.profile_count(); ++s) {
      std::vector<Rational> row(variables.size());
      bool any = false;
      for (std::size_t i = 0; i < game.player_count(); ++i) {
        const std::size_t r = game.StrategyOf(s, i);
        if (!in_support[i][r]) continue;
        const Rational& base = game.payoff(s, i);
        for (std::size_t t = 0; t < game.strategy_count(i); ++t) {
          if (t == r) continue;
          Rational diff = game.payoff(game.WithStrategy(s, i, t), i) - base;
          if (sgn(diff) == 0) continue;
          const std::size_t v = variable_index(i, r, t);
          objective[v] += diff;
          row[v] = std::move(diff);
          any = true;
        }
      }
      if (any) {
        program.AddConstraint(std::move(row), lp::Relation::kGreaterEqual,
                              Rational(0));
      }
    }
    for (std::size_t i = 0; i < game.player_count(); ++i) {
      for (std::size_t r : support.members(i)) {
        if (game.strategy_count(i) < 2) continue;
        std::vector<Rational> row(variables.size());
        for (std::size_t t = 0; t < game.strategy_count(i); ++t) {
          if (t != r) row[variable_index(i, r, t)] = 1;
        }
        program.AddConstraint(std::move(row), lp::Relation::kLessEqual,
                              Rational(1));
      }
    }
    program.SetObjective(std::move(objective));
    const lp::LpOutcome outcome = lp::Solve(program);
    // The feasible set is a nonempty polytope (identity plans are feasible).
    const auto& optimal = std::get<lp::Optimal>(outcome);

    for (std::size_t i = 0; i < game.player_count(); ++i) {
      std::vector<std::vector<Rational>> rows;
      for (std::size_t r = 0; r < game.strategy_count(i); ++r) {
        std::vector<Rational> row(game.strategy_count(i));
        if (!in_support[i][r]) {
          row[r] = 1;
        } else {
          Rational stay = 1;
          for (std::size_t t = 0; t < row.size(); ++t) {
            if (t == r) continue;
            row[t] = optimal.point[variable_index(i, r, t)];
            stay -= row[t];
          }
          row[r] = std::move(stay);
        }
        rows.push_back(std::move(row));
      }
      alpha[i] = DeviationPlan(std::move(rows));
    }
    if (sgn(optimal.value) == 0) {
      return CpeVerdict(PerfectCertificate{optimal.value, std::move(alpha)});
    }
  } else {
    return CpeVerdict(PerfectCertificate{Rational(0), std::move(alpha)});
  }

  Refutation refutation;
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    Rational gain = AggregateGain(game, s, alpha);
    if (sgn(gain) > 0) refutation.witnesses.push_back({s, std::move(gain)});
  }
  refutation.alpha = std::move(alpha);
  return CpeVerdict(std::move(refutation));
}

CpeVerdict IsCorrelatedPerfect(const Game& game,
                               const CorrelatedStrategy& rho) {
  const CorrelatedEquilibriumCheck check = IsCorrelatedEquilibrium(game, rho);
  if (!check.is_equilibrium) {
    const auto& v = *check.violation;
    throw NotCorrelatedEquilibrium(
        "not a correlated equilibrium: player " + game.player_name(v.player) +
            " recommended " + game.strategy_name(v.player, v.recommended) +
            " gains by playing " + game.strategy_name(v.player, v.deviation),
        v);
  }
  return CertifySupport(game, ProductSupportOf(game, rho));
}

bool VerifyRefutation(const Game& game, const ProductSupport& support,
                      const Refutation& refutation) {
  if (refutation.witnesses.empty()) return false;
  if (!IsRestricted(refutation.alpha, support)) return false;
  if (!IsDualVector(game, refutation.alpha).is_dual_vector) return false;
  for (const auto& w : refutation.witnesses) {
    Rational recomputed = 0;
    for (std::size_t i = 0; i < game.player_count(); ++i) {
      recomputed += DeviationGain(game, w.profile, i, refutation.alpha[i]);
    }
    if (recomputed != w.gain || sgn(recomputed) <= 0) return false;
  }
  return true;
}

}  // namespace cpe

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

#include "cpe/sequence.hpp"

#include <algorithm>
#include <string>

namespace cpe {
namespace {

struct MuRow {
  std::size_t player;
  std::size_t recommended;
  std::size_t deviation;
};

lp::LinearProgram BuildMuSystem(const Game& game, const ProductSupport& support,
                                std::vector<MuRow>* rows) {
  lp::LinearProgram program(game.profile_count());
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    program.SetLowerBound(s, Rational(1));
  }
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    for (std::size_t r : support.members(i)) {
      for (std::size_t d = 0; d < game.strategy_count(i); ++d) {
        if (d == r) continue;
        std::vector<Rational> coefficients(game.profile_count());
        bool any = false;
        for (std::size_t s = 0; s < game.profile_count(); ++s) {
          if (game.StrategyOf(s, i) != r) continue;
          coefficients[s] = game.payoff(s, i) -
                            game.payoff(game.WithStrategy(s, i, d), i);
          any = any || sgn(coefficients[s]) != 0;
        }
        if (!any) continue;
        program.AddConstraint(std::move(coefficients),
                              lp::Relation::kGreaterEqual, Rational(0));
        if (rows) rows->push_back({i, r, d});
      }
    }
  }
  return program;
}

void CheckSupportShape(const Game& game, const ProductSupport& support) {
  if (support.player_count() != game.player_count()) {
    throw std::invalid_argument("support does not match the game");
  }
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    if (support.mask()[i].size() != game.strategy_count(i)) {
      throw std::invalid_argument("support does not match the game");
    }
  }
}

}  // namespace

lp::LinearProgram MuSystem(const Game& game, const ProductSupport& support) {
  CheckSupportShape(game, support);
  return BuildMuSystem(game, support, nullptr);
}

std::variant<MuVector, MuInfeasibility> FindMu(const Game& game,
                                               const ProductSupport& support) {
  CheckSupportShape(game, support);
  std::vector<MuRow> rows;
  const lp::LinearProgram program = BuildMuSystem(game, support, &rows);
  auto result = lp::FeasiblePoint(program);
  if (auto* mu = std::get_if<std::vector<Rational>>(&result)) {
    return std::move(*mu);
  }
  MuInfeasibility infeasibility;
  infeasibility.certificate = std::get<lp::FarkasCertificate>(std::move(result));

  // Row (i, r, d) carries weight y >= 0. Scaling each recommendation's
  // weights by the largest row total and filling the rest of the row with
  // the recommendation gives a plan whose aggregate gain at s equals the
  // certificate's bound multiplier at s divided by that scale.
  const auto& y = infeasibility.certificate.constraint_multipliers;
  std::vector<std::vector<std::vector<Rational>>> weights(game.player_count());
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    weights[i].assign(game.strategy_count(i),
                      std::vector<Rational>(game.strategy_count(i)));
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    weights[rows[k].player][rows[k].recommended][rows[k].deviation] = y[k];
  }
  Rational scale = 0;
  for (const auto& player : weights) {
    for (const auto& row : player) {
      Rational total = 0;
      for (const auto& w : row) total += w;
      if (total > scale) scale = total;
    }
  }
  if (sgn(scale) == 0) {
    // y^T A = 0 with all-zero row weights forces zero bound weights.
    throw std::logic_error("degenerate mu infeasibility certificate");
  }
  DeviationProfile alpha;
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    std::vector<std::vector<Rational>> plan;
    for (std::size_t r = 0; r < game.strategy_count(i); ++r) {
      std::vector<Rational> row(game.strategy_count(i));
      Rational stay = 1;
      for (std::size_t d = 0; d < row.size(); ++d) {
        if (d == r) continue;
        row[d] = weights[i][r][d] / scale;
        stay -= row[d];
      }
      row[r] = std::move(stay);
      plan.push_back(std::move(row));
    }
    alpha.emplace_back(std::move(plan));
  }
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    Rational gain = AggregateGain(game, s, alpha);
    if (sgn(gain) > 0) {
      infeasibility.refutation.witnesses.push_back({s, std::move(gain)});
    }
  }
  infeasibility.refutation.alpha = std::move(alpha);
  return infeasibility;
}

bool IsValidMu(const Game& game, const ProductSupport& support,
               const MuVector& mu) {
  if (mu.size() != game.profile_count()) return false;
  return MuSystem(game, support).IsFeasible(mu);
}

CorrelatedStrategy SupportingSequenceTerm(const Game& game,
                                          const CorrelatedStrategy& rho,
                                          const MuVector& mu,
                                          std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("sequence index k must be >= 1");
  if (mu.size() != game.profile_count() || rho.size() != game.profile_count()) {
    throw std::invalid_argument("mu does not match the game");
  }
  const Rational step(mpz_class(1), mpz_class(std::to_string(k)));
  std::vector<Rational> perturbed(game.profile_count());
  Rational total = 0;
  for (std::size_t s = 0; s < perturbed.size(); ++s) {
    perturbed[s] = rho[s] + mu[s] * step;
    total += perturbed[s];
  }
  for (auto& p : perturbed) p /= total;
  return CorrelatedStrategy(game, std::move(perturbed));
}

SequenceTermCheck VerifySequenceTerm(const Game& game,
                                     const CorrelatedStrategy& rho_k,
                                     const ProductSupport& support) {
  CheckSupportShape(game, support);
  if (!IsCompletelyMixed(rho_k)) {
    throw std::invalid_argument("sequence term is not completely mixed");
  }
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    for (std::size_t r : support.members(i)) {
      const Rational follow = ConditionalDeviationValue(game, rho_k, i, r, r);
      for (std::size_t d = 0; d < game.strategy_count(i); ++d) {
        if (d == r) continue;
        Rational deviate = ConditionalDeviationValue(game, rho_k, i, r, d);
        if (deviate > follow) {
          return {false, IncentiveViolation{i, r, d, follow, deviate}};
        }
      }
    }
  }
  return {};
}

ParametricDistribution::ParametricDistribution(
    const Game& game, std::vector<EpsPolynomial> masses)
    : masses_(std::move(masses)) {
  if (masses_.size() != game.profile_count()) {
    throw std::invalid_argument("parametric family has " +
                                std::to_string(masses_.size()) +
                                " entries, game has " +
                                std::to_string(game.profile_count()));
  }
  for (std::size_t s = 0; s < masses_.size(); ++s) {
    if (masses_[s].SignNearZero() <= 0) {
      throw std::invalid_argument("mass at " + game.ProfileLabel(s) +
                                  " is not positive for small eps");
    }
  }
}

EpsPolynomial ParametricDistribution::TotalMass() const {
  EpsPolynomial total;
  for (const auto& m : masses_) total += m;
  return total;
}

CorrelatedStrategy ParametricDistribution::At(const Game& game,
                                              const Rational& eps) const {
  if (sgn(eps) <= 0) throw std::invalid_argument("eps must be positive");
  std::vector<Rational> values(masses_.size());
  Rational total = 0;
  for (std::size_t s = 0; s < masses_.size(); ++s) {
    values[s] = masses_[s].Evaluate(eps);
    if (sgn(values[s]) <= 0) {
      throw std::invalid_argument("eps too large: mass at " +
                                  game.ProfileLabel(s) + " is not positive");
    }
    total += values[s];
  }
  for (auto& v : values) v /= total;
  return CorrelatedStrategy(game, std::move(values));
}

CorrelatedStrategy ParametricDistribution::Limit(const Game& game) const {
  // Lowest-order coefficients are all positive, so the total's lowest order
  // is the minimum over profiles and nothing cancels there.
  const EpsPolynomial total = TotalMass();
  const std::size_t order = *total.LowestOrder();
  const Rational scale = total.coefficient(order);
  std::vector<Rational> values(masses_.size());
  for (std::size_t s = 0; s < masses_.size(); ++s) {
    values[s] = masses_[s].coefficient(order) / scale;
  }
  return CorrelatedStrategy(game, std::move(values));
}

EpsPolynomial ConditionalValuePolynomial(const Game& game,
                                         const ParametricDistribution& family,
                                         std::size_t player,
                                         std::size_t recommended,
                                         std::size_t deviation) {
  game.CheckStrategy(player, recommended);
  game.CheckStrategy(player, deviation);
  EpsPolynomial value;
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    if (game.StrategyOf(s, player) != recommended) continue;
    const Rational& u =
        game.payoff(game.WithStrategy(s, player, deviation), player);
    if (sgn(u) != 0) value += family[s] * u;
  }
  return value;
}

ParametricCheck VerifyParametricSequence(const Game& game,
                                         const ParametricDistribution& family,
                                         const CorrelatedStrategy& target,
                                         const ProductSupport& support) {
  CheckSupportShape(game, support);
  if (family.masses().size() != game.profile_count() ||
      target.size() != game.profile_count()) {
    throw std::invalid_argument("family or target does not match the game");
  }
  ParametricCheck check;
  const CorrelatedStrategy limit = family.Limit(game);
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    if (limit[s] != target[s]) check.limit_mismatches.push_back(s);
  }
  check.limit_matches = check.limit_mismatches.empty();
  check.ok = check.limit_matches;

  for (std::size_t i = 0; i < game.player_count(); ++i) {
    for (std::size_t r : support.members(i)) {
      const EpsPolynomial follow =
          ConditionalValuePolynomial(game, family, i, r, r);
      for (std::size_t d = 0; d < game.strategy_count(i); ++d) {
        if (d == r) continue;
        MarginRecord record{i, r, d,
                            follow - ConditionalValuePolynomial(game, family,
                                                                i, r, d),
                            true};
        record.ok = record.margin.SignNearZero() >= 0;
        check.ok = check.ok && record.ok;
        check.constraints.push_back(std::move(record));
      }
    }
  }
  return check;
}

}  // namespace cpe

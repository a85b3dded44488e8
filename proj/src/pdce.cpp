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

#include "cpe/pdce.hpp"

#include <stdexcept>
#include <string>

namespace cpe {

TrembleFamily::TrembleFamily(const Game& game, Rows rows)
    : rows_(std::move(rows)) {
  if (rows_.size() != game.player_count()) {
    throw std::invalid_argument("tremble family needs one block per player");
  }
  const EpsPolynomial one(Rational(1));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t k = game.strategy_count(i);
    if (rows_[i].size() != k) {
      throw std::invalid_argument("tremble block of player " +
                                  game.player_name(i) + " has wrong size");
    }
    for (std::size_t r = 0; r < k; ++r) {
      const auto& row = rows_[i][r];
      const std::string where = "tremble row " + game.player_name(i) + "/" +
                                game.strategy_name(i, r);
      if (row.size() != k) throw std::invalid_argument(where + " has wrong size");
      EpsPolynomial total;
      for (std::size_t t = 0; t < k; ++t) {
        if (row[t].SignNearZero() < 0) {
          throw std::invalid_argument(where + " has an entry negative near 0");
        }
        total += row[t];
      }
      if (total != one) {
        throw std::invalid_argument(where + " sums to " + total.ToString() +
                                    ", not 1");
      }
      if (row[r].coefficient(0) != 1) {
        throw std::invalid_argument(where +
                                    " diagonal entry does not tend to 1");
      }
    }
  }
}

TrembleFamily TrembleFamily::Identity(const Game& game) {
  Rows rows(game.player_count());
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    const std::size_t k = game.strategy_count(i);
    rows[i].assign(k, std::vector<EpsPolynomial>(k));
    for (std::size_t r = 0; r < k; ++r) rows[i][r][r] = EpsPolynomial(1);
  }
  return TrembleFamily(game, std::move(rows));
}

bool TrembleFamily::IsCompletelyMixed() const {
  for (const auto& block : rows_) {
    for (const auto& row : block) {
      for (const auto& entry : row) {
        if (entry.SignNearZero() <= 0) return false;
      }
    }
  }
  return true;
}

PerceivedDistribution PerceivedDistributionFor(const Game& game,
                                               const CorrelatedStrategy& rho,
                                               const TrembleFamily& trembles,
                                               std::size_t player) {
  game.CheckPlayer(player);
  if (rho.shape() != game.shape() ||
      trembles.rows().size() != game.player_count()) {
    throw std::invalid_argument("distribution or trembles do not match game");
  }
  PerceivedDistribution perceived(game.profile_count());
  // Accumulate each drawn profile s' into every s that shares player's
  // component, weighted by the others' tremble probabilities.
  for (std::size_t drawn = 0; drawn < game.profile_count(); ++drawn) {
    if (sgn(rho[drawn]) == 0) continue;
    const std::size_t own = game.StrategyOf(drawn, player);
    for (std::size_t s = 0; s < game.profile_count(); ++s) {
      if (game.StrategyOf(s, player) != own) continue;
      EpsPolynomial weight(rho[drawn]);
      for (std::size_t j = 0; j < game.player_count() && !weight.IsZero();
           ++j) {
        if (j == player) continue;
        weight *= trembles(j, game.StrategyOf(drawn, j), game.StrategyOf(s, j));
      }
      if (!weight.IsZero()) perceived[s] += weight;
    }
  }
  return perceived;
}

PdceReport PdceCheck(const Game& game, const CorrelatedStrategy& rho,
                     const TrembleFamily& trembles) {
  PdceReport report;
  report.trembles_completely_mixed = trembles.IsCompletelyMixed();
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    const PerceivedDistribution perceived =
        PerceivedDistributionFor(game, rho, trembles, i);
    for (std::size_t r = 0; r < game.strategy_count(i); ++r) {
      for (std::size_t d = 0; d < game.strategy_count(i); ++d) {
        if (d == r) continue;
        GainRecord record{i, r, d, EpsPolynomial(), true};
        for (std::size_t s = 0; s < game.profile_count(); ++s) {
          if (game.StrategyOf(s, i) != r || perceived[s].IsZero()) continue;
          const Rational diff =
              game.payoff(game.WithStrategy(s, i, d), i) - game.payoff(s, i);
          if (sgn(diff) != 0) record.gain += perceived[s] * diff;
        }
        record.ok = record.gain.SignNearZero() <= 0;
        report.holds = report.holds && record.ok;
        report.gains.push_back(std::move(record));
      }
    }
  }
  return report;
}

}  // namespace cpe

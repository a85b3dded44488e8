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

#include "cpe/random_game.hpp"

#include <string>
#include <vector>

namespace cpe {

Game RandomGame(std::mt19937_64& rng, const RandomGameOptions& options) {
  std::uniform_int_distribution<std::size_t> players(options.min_players,
                                                     options.max_players);
  std::uniform_int_distribution<std::size_t> strategies(
      options.min_strategies, options.max_strategies);
  std::uniform_int_distribution<int> payoff(options.min_payoff,
                                            options.max_payoff);
  const std::size_t n = players(rng);
  std::vector<std::string> player_names;
  std::vector<std::vector<std::string>> strategy_names;
  std::size_t profiles = 1;
  for (std::size_t i = 0; i < n; ++i) {
    player_names.push_back(std::to_string(i + 1));
    const std::size_t m = strategies(rng);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < m; ++k) {
      names.push_back("s" + std::to_string(k + 1) + "_" + std::to_string(i + 1));
    }
    strategy_names.push_back(std::move(names));
    profiles *= m;
  }
  std::vector<Rational> table(profiles * n);
  for (auto& value : table) value = payoff(rng);
  return Game(std::move(player_names), std::move(strategy_names),
              std::move(table));
}

}  // namespace cpe

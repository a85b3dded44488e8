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

#ifndef CPE_RANDOM_GAME_HPP_
#define CPE_RANDOM_GAME_HPP_

#include <cstdint>
#include <random>

#include "cpe/game.hpp"

namespace cpe {

struct RandomGameOptions {
  std::size_t min_players = 2;
  std::size_t max_players = 3;
  std::size_t min_strategies = 2;
  std::size_t max_strategies = 3;
  int min_payoff = -3;
  int max_payoff = 3;
};

// Game with uniformly drawn dimensions and integer payoffs. Players are named
// "1", "2", ...; strategy k of player i is labelled "s<k>_<i>".
Game RandomGame(std::mt19937_64& rng, const RandomGameOptions& options = {});

}  // namespace cpe

#endif  // CPE_RANDOM_GAME_HPP_

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

#ifndef CPE_PDCE_HPP_
#define CPE_PDCE_HPP_

#include <cstddef>
#include <vector>

#include "cpe/game.hpp"
#include "cpe/polynomial.hpp"

namespace cpe {

// Independent player trembles parametrized by eps: entry (i, r, t) is the
// probability that player i plays t when recommended r.
//
// Every row sums to the constant polynomial 1, every entry is nonnegative
// for small eps, and each diagonal entry tends to 1. Entries may be
// identically zero; IsCompletelyMixed tells whether every entry is strictly
// positive near zero.
class TrembleFamily {
 public:
  using Rows = std::vector<std::vector<std::vector<EpsPolynomial>>>;

  // Throws std::invalid_argument when a row does not sum to 1, an entry is
  // negative near zero, a diagonal entry does not tend to 1, or the
  // dimensions do not match the game.
  TrembleFamily(const Game& game, Rows rows);

  static TrembleFamily Identity(const Game& game);

  const EpsPolynomial& operator()(std::size_t player, std::size_t recommended,
                                  std::size_t target) const {
    return rows_[player][recommended][target];
  }
  const Rows& rows() const { return rows_; }
  bool IsCompletelyMixed() const;

 private:
  Rows rows_;
};

// Profile probabilities as seen by one player who follows its own
// recommendation while the others tremble independently.
using PerceivedDistribution = std::vector<EpsPolynomial>;

//   entry(s) = sum_{s'_{-i}} rho(s_i, s'_{-i}) prod_{j != i} sigma_j(s_j | s'_j)
PerceivedDistribution PerceivedDistributionFor(const Game& game,
                                               const CorrelatedStrategy& rho,
                                               const TrembleFamily& trembles,
                                               std::size_t player);

// Deviate-minus-follow gain of one recommendation under the perceived
// distribution; must be <= 0 near zero.
struct GainRecord {
  std::size_t player = 0;
  std::size_t recommended = 0;
  std::size_t deviation = 0;
  EpsPolynomial gain;
  bool ok = true;
};

struct PdceReport {
  bool holds = true;
  bool trembles_completely_mixed = true;
  std::vector<GainRecord> gains;
};

// Checks the perfect direct correlated equilibrium conditions for the given
// tremble family: no recommendation has a positive gain polynomial for small
// eps. Never-recommended strategies give zero polynomials.
PdceReport PdceCheck(const Game& game, const CorrelatedStrategy& rho,
                     const TrembleFamily& trembles);

}  // namespace cpe

#endif  // CPE_PDCE_HPP_

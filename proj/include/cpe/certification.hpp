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

#ifndef CPE_CERTIFICATION_HPP_
#define CPE_CERTIFICATION_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "cpe/game.hpp"
#include "cpe/rational.hpp"

namespace cpe {

// Randomized deviation plan of one player: entry (r, t) is the probability
// of playing t when recommended r. Rows are probability distributions.
class DeviationPlan {
 public:
  // Throws std::invalid_argument unless the matrix is square with
  // nonnegative rows that sum to exactly one.
  explicit DeviationPlan(std::vector<std::vector<Rational>> rows);

  static DeviationPlan Identity(std::size_t strategy_count);
  // Deterministic plan: recommendation r is replaced by target[r].
  static DeviationPlan Pure(const std::vector<std::size_t>& target);

  std::size_t strategy_count() const { return rows_.size(); }
  const Rational& operator()(std::size_t recommended,
                             std::size_t target) const {
    return rows_[recommended][target];
  }
  const std::vector<Rational>& row(std::size_t recommended) const {
    return rows_[recommended];
  }
  // True when the row is the point mass on the recommendation itself.
  bool Follows(std::size_t recommended) const;

  bool operator==(const DeviationPlan&) const = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

// One deviation plan per player.
using DeviationProfile = std::vector<DeviationPlan>;

DeviationProfile IdentityProfile(const Game& game);

// Expected gain of `player` at the profile from following `plan`:
//   sum_t plan(t | s_i) * (u_i(t, s_{-i}) - u_i(s)).
Rational DeviationGain(const Game& game, std::size_t profile_index,
                       std::size_t player, const DeviationPlan& plan);

// Sum of DeviationGain over all players.
Rational AggregateGain(const Game& game, std::size_t profile_index,
                       const DeviationProfile& alpha);

struct DualVectorCheck {
  bool is_dual_vector = true;
  // First profile with negative aggregate gain, and that gain.
  std::optional<std::size_t> witness;
  Rational witness_gain;
};

// Aggregate gain nonnegative at every profile. Throws std::invalid_argument
// when the plans do not match the game's dimensions.
DualVectorCheck IsDualVector(const Game& game, const DeviationProfile& alpha);

// Every row outside the support follows the recommendation.
bool IsRestricted(const DeviationProfile& alpha, const ProductSupport& support);

struct GainWitness {
  std::size_t profile = 0;
  Rational gain;
};

// No restricted dual vector has a positive aggregate gain anywhere.
// `optimizer` is the plan the solver stopped at (aggregate gain zero
// everywhere).
struct PerfectCertificate {
  Rational optimum;
  DeviationProfile optimizer;
};

// A restricted dual vector with strictly positive aggregate gain at every
// listed witness profile.
struct Refutation {
  DeviationProfile alpha;
  std::vector<GainWitness> witnesses;
};

class CpeVerdict {
 public:
  explicit CpeVerdict(PerfectCertificate certificate)
      : value_(std::move(certificate)) {}
  explicit CpeVerdict(Refutation refutation) : value_(std::move(refutation)) {}

  bool is_perfect() const {
    return std::holds_alternative<PerfectCertificate>(value_);
  }
  const PerfectCertificate& certificate() const {
    return std::get<PerfectCertificate>(value_);
  }
  const Refutation& refutation() const { return std::get<Refutation>(value_); }

 private:
  std::variant<PerfectCertificate, Refutation> value_;
};

// Raised when a correlated-perfection query is made for a distribution that
// is not a correlated equilibrium.
class NotCorrelatedEquilibrium : public std::domain_error {
 public:
  NotCorrelatedEquilibrium(const std::string& message,
                           IncentiveViolation violation)
      : std::domain_error(message), violation_(std::move(violation)) {}
  const IncentiveViolation& violation() const { return violation_; }

 private:
  IncentiveViolation violation_;
};

// Decides whether every support-restricted dual vector has zero aggregate
// gain at every profile.
//
// Solves  max sum_s g(s)  over restricted plans subject to g(s) >= 0 for
// all s, where g(s) is the aggregate gain. The optimum is zero exactly when
// no collectively profitable restricted plan exists. Throws
// std::invalid_argument if some player's support is empty.
CpeVerdict CertifySupport(const Game& game, const ProductSupport& support);

// CertifySupport on the product support of rho, after checking that rho is
// a correlated equilibrium (NotCorrelatedEquilibrium otherwise).
CpeVerdict IsCorrelatedPerfect(const Game& game, const CorrelatedStrategy& rho);

// Independent recheck of a refutation: a restricted dual vector, a nonempty
// witness list, and every witness gain recomputed and strictly positive.
bool VerifyRefutation(const Game& game, const ProductSupport& support,
                      const Refutation& refutation);

}  // namespace cpe

#endif  // CPE_CERTIFICATION_HPP_

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

#ifndef CPE_SEQUENCE_HPP_
#define CPE_SEQUENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cpe/certification.hpp"
#include "cpe/game.hpp"
#include "cpe/lp.hpp"
#include "cpe/polynomial.hpp"

namespace cpe {

// Weights mu(s) >= 1 on every profile such that, for every player i,
// supported recommendation r and alternative d,
//   sum_{s_{-i}} mu(r, s_{-i}) [u_i(r, s_{-i}) - u_i(d, s_{-i})] >= 0.
using MuVector = std::vector<Rational>;

// The mu system has no solution. `certificate` is the LP's Farkas proof;
// `refutation` is the restricted dual vector it encodes.
struct MuInfeasibility {
  lp::FarkasCertificate certificate;
  Refutation refutation;
};

std::variant<MuVector, MuInfeasibility> FindMu(const Game& game,
                                               const ProductSupport& support);

// The linear system FindMu solves, with one constraint per nontrivial
// (player, supported recommendation, alternative) triple.
lp::LinearProgram MuSystem(const Game& game, const ProductSupport& support);

bool IsValidMu(const Game& game, const ProductSupport& support,
               const MuVector& mu);

// (rho(s) + mu(s)/k) / sum_t (rho(t) + mu(t)/k). Throws std::invalid_argument
// for k == 0 or a mu of the wrong length.
CorrelatedStrategy SupportingSequenceTerm(const Game& game,
                                          const CorrelatedStrategy& rho,
                                          const MuVector& mu, std::uint64_t k);

struct SequenceTermCheck {
  bool ok = true;
  std::optional<IncentiveViolation> violation;
};

// Every supported recommendation is a best response under rho_k. Throws
// std::invalid_argument unless rho_k is completely mixed.
SequenceTermCheck VerifySequenceTerm(const Game& game,
                                     const CorrelatedStrategy& rho_k,
                                     const ProductSupport& support);

// Unnormalized masses, one polynomial in eps per profile; each must be
// strictly positive for all small eps > 0.
class ParametricDistribution {
 public:
  // Throws std::invalid_argument on a length mismatch or a mass that is not
  // positive near zero.
  ParametricDistribution(const Game& game, std::vector<EpsPolynomial> masses);

  const EpsPolynomial& operator[](std::size_t profile_index) const {
    return masses_[profile_index];
  }
  const std::vector<EpsPolynomial>& masses() const { return masses_; }
  EpsPolynomial TotalMass() const;

  // Normalized distribution at a specific eps > 0.
  CorrelatedStrategy At(const Game& game, const Rational& eps) const;
  // Normalized distribution as eps -> 0+.
  CorrelatedStrategy Limit(const Game& game) const;

 private:
  std::vector<EpsPolynomial> masses_;
};

// Unnormalized conditional value: sum_{s_{-i}} mass(r, s_{-i}) u_i(d, s_{-i}).
EpsPolynomial ConditionalValuePolynomial(const Game& game,
                                         const ParametricDistribution& family,
                                         std::size_t player,
                                         std::size_t recommended,
                                         std::size_t deviation);

// Follow-minus-deviate margin of one obedience constraint along the family.
struct MarginRecord {
  std::size_t player = 0;
  std::size_t recommended = 0;
  std::size_t deviation = 0;
  EpsPolynomial margin;
  bool ok = true;
};

struct ParametricCheck {
  bool ok = true;
  bool limit_matches = true;
  // Profiles where the eps -> 0+ limit differs from the target.
  std::vector<std::size_t> limit_mismatches;
  std::vector<MarginRecord> constraints;
};

// Symbolic check that the family converges to `target` and that every
// supported recommendation is a best response for all small eps > 0.
ParametricCheck VerifyParametricSequence(const Game& game,
                                         const ParametricDistribution& family,
                                         const CorrelatedStrategy& target,
                                         const ProductSupport& support);

}  // namespace cpe

#endif  // CPE_SEQUENCE_HPP_

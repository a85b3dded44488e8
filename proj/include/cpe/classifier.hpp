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

#ifndef CPE_CLASSIFIER_HPP_
#define CPE_CLASSIFIER_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cpe/certification.hpp"
#include "cpe/game.hpp"

namespace cpe {

inline constexpr std::size_t kDefaultSupportCap = 20000;

// The number of product supports to examine exceeds the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t cap, std::size_t required);
  std::size_t cap() const { return cap_; }
  std::size_t required() const { return required_; }

 private:
  std::size_t cap_;
  std::size_t required_;
};

struct SupportClassification {
  ProductSupport support;
  // Every support-restricted dual vector has zero aggregate gain everywhere.
  bool equality_holds = false;
  // Some correlated equilibrium has exactly this product support.
  bool ce_exists = false;
  std::optional<CorrelatedStrategy> sample_ce;
  // Present iff !equality_holds.
  std::optional<Refutation> refutation;
  // The equality verdict was inherited from an already classified support
  // instead of solved directly.
  bool inherited = false;
};

struct ClassifierOptions {
  std::size_t cap = kDefaultSupportCap;
};

// A correlated equilibrium whose recommendation marginals are positive on
// exactly the support strategies, or nullopt. Maximizes the smallest
// supported marginal over CEs living on the product set; succeeds iff the
// optimum is positive.
std::optional<CorrelatedStrategy> CeWithExactSupport(
    const Game& game, const ProductSupport& support);

// prod_i (2^|S_i| - 1), saturating at SIZE_MAX.
std::size_t CountProductSupports(const Game& game);

// All nonempty product supports by decreasing total size, then
// lexicographically by membership mask. Throws CapExceeded past `cap`.
std::vector<ProductSupport> EnumerateProductSupports(const Game& game,
                                                     std::size_t cap);

// Top-down classification of every product support. A support inside an
// equality-certified support inherits equality; a support containing a
// refuted support inherits its refutation.
std::vector<SupportClassification> ClassifyAllSupports(
    const Game& game, const ClassifierOptions& options = {});

// Maximal supports (componentwise inclusion) among those that carry a
// correlated perfect equilibrium.
std::vector<ProductSupport> MaximalCpeSupports(
    const std::vector<SupportClassification>& classifications);
std::vector<ProductSupport> MaximalCpeSupports(
    const Game& game, const ClassifierOptions& options = {});

}  // namespace cpe

#endif  // CPE_CLASSIFIER_HPP_

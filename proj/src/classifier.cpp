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

#include "cpe/classifier.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "cpe/lp.hpp"

namespace cpe {

CapExceeded::CapExceeded(std::size_t cap, std::size_t required)
    : std::runtime_error("product support count " + std::to_string(required) +
                         " exceeds cap " + std::to_string(cap)),
      cap_(cap),
      required_(required) {}

std::optional<CorrelatedStrategy> CeWithExactSupport(
    const Game& game, const ProductSupport& support) {
  if (support.player_count() != game.player_count() || !support.IsNonEmpty()) {
    throw std::invalid_argument("support must name a nonempty strategy set "
                                "for every player");
  }
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    if (support.mask()[i].size() != game.strategy_count(i)) {
      throw std::invalid_argument("support does not match the game");
    }
  }
  // Variables: rho(s) for s in the product set, then t.
  std::vector<std::size_t> cells;
  std::vector<std::size_t> variable_of(game.profile_count(),
                                       std::numeric_limits<std::size_t>::max());
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    if (support.ContainsProfile(game, s)) {
      variable_of[s] = cells.size();
      cells.push_back(s);
    }
  }
  const std::size_t t_var = cells.size();
  lp::LinearProgram program(cells.size() + 1);

  for (std::size_t i = 0; i < game.player_count(); ++i) {
    for (std::size_t r : support.members(i)) {
      for (std::size_t d = 0; d < game.strategy_count(i); ++d) {
        if (d == r) continue;
        std::vector<Rational> row(cells.size() + 1);
        bool any = false;
        for (std::size_t k = 0; k < cells.size(); ++k) {
          const std::size_t s = cells[k];
          if (game.StrategyOf(s, i) != r) continue;
          row[k] = game.payoff(s, i) - game.payoff(game.WithStrategy(s, i, d), i);
          any = any || sgn(row[k]) != 0;
        }
        if (any) {
          program.AddConstraint(std::move(row), lp::Relation::kGreaterEqual,
                                Rational(0));
        }
      }
      std::vector<Rational> marginal(cells.size() + 1);
      for (std::size_t k = 0; k < cells.size(); ++k) {
        if (game.StrategyOf(cells[k], i) == r) marginal[k] = 1;
      }
      marginal[t_var] = -1;
      program.AddConstraint(std::move(marginal), lp::Relation::kGreaterEqual,
                            Rational(0));
    }
  }
  std::vector<Rational> total(cells.size() + 1, Rational(1));
  total[t_var] = 0;
  program.AddConstraint(std::move(total), lp::Relation::kEqual, Rational(1));
  program.SetObjectiveCoefficient(t_var, Rational(1));

  const lp::LpOutcome outcome = lp::Solve(program);
  const auto* optimal = std::get_if<lp::Optimal>(&outcome);
  if (optimal == nullptr || sgn(optimal->value) <= 0) return std::nullopt;
  std::vector<Rational> rho(game.profile_count());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    rho[cells[k]] = optimal->point[k];
  }
  return CorrelatedStrategy(game, std::move(rho));
}

std::size_t CountProductSupports(const Game& game) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t count = 1;
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    const std::size_t k = game.strategy_count(i);
    if (k >= 63) return kMax;
    const std::size_t subsets = (std::size_t{1} << k) - 1;
    if (count > kMax / subsets) return kMax;
    count *= subsets;
  }
  return count;
}

std::vector<ProductSupport> EnumerateProductSupports(const Game& game,
                                                     std::size_t cap) {
  const std::size_t count = CountProductSupports(game);
  if (count > cap) throw CapExceeded(cap, count);

  const std::size_t n = game.player_count();
  std::vector<ProductSupport> supports;
  supports.reserve(count);
  std::vector<std::uint64_t> mask(n, 1);
  for (;;) {
    std::vector<std::vector<bool>> members(n);
    for (std::size_t i = 0; i < n; ++i) {
      members[i].resize(game.strategy_count(i));
      for (std::size_t s = 0; s < members[i].size(); ++s) {
        members[i][s] = (mask[i] >> s) & 1U;
      }
    }
    supports.emplace_back(std::move(members));
    std::size_t i = n;
    while (i-- > 0) {
      if (++mask[i] < (std::uint64_t{1} << game.strategy_count(i))) break;
      mask[i] = 1;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  // Larger supports first; within a size, lexicographic on the masks with
  // members before non-members.
  std::stable_sort(supports.begin(), supports.end(),
                   [](const ProductSupport& a, const ProductSupport& b) {
                     const std::size_t sa = a.total_size();
                     const std::size_t sb = b.total_size();
                     if (sa != sb) return sa > sb;
                     return a.mask() > b.mask();
                   });
  return supports;
}

std::vector<SupportClassification> ClassifyAllSupports(
    const Game& game, const ClassifierOptions& options) {
  const std::vector<ProductSupport> supports =
      EnumerateProductSupports(game, options.cap);
  std::vector<SupportClassification> out;
  out.reserve(supports.size());
  // Insert-only caches of solved verdicts used for pruning.
  std::vector<std::size_t> certified;
  std::vector<std::size_t> refuted;

  for (const ProductSupport& support : supports) {
    SupportClassification c;
    c.support = support;
    bool decided = false;
    for (std::size_t k : certified) {
      if (support.IsSubsetOf(out[k].support)) {
        c.equality_holds = true;
        c.inherited = true;
        decided = true;
        break;
      }
    }
    if (!decided) {
      for (std::size_t k : refuted) {
        if (out[k].support.IsSubsetOf(support)) {
          c.equality_holds = false;
          c.refutation = out[k].refutation;
          c.inherited = true;
          decided = true;
          break;
        }
      }
    }
    if (!decided) {
      CpeVerdict verdict = CertifySupport(game, support);
      c.equality_holds = verdict.is_perfect();
      if (!c.equality_holds) c.refutation = verdict.refutation();
    }
    c.sample_ce = CeWithExactSupport(game, support);
    c.ce_exists = c.sample_ce.has_value();
    if (!c.inherited) {
      (c.equality_holds ? certified : refuted).push_back(out.size());
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ProductSupport> MaximalCpeSupports(
    const std::vector<SupportClassification>& classifications) {
  std::vector<const ProductSupport*> candidates;
  for (const auto& c : classifications) {
    if (c.equality_holds && c.ce_exists) candidates.push_back(&c.support);
  }
  std::vector<ProductSupport> maximal;
  for (const ProductSupport* a : candidates) {
    bool dominated = false;
    for (const ProductSupport* b : candidates) {
      if (a != b && *a != *b && a->IsSubsetOf(*b)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(*a);
  }
  return maximal;
}

std::vector<ProductSupport> MaximalCpeSupports(
    const Game& game, const ClassifierOptions& options) {
  return MaximalCpeSupports(ClassifyAllSupports(game, options));
}

}  // namespace cpe

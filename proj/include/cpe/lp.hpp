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

#ifndef CPE_LP_HPP_
#define CPE_LP_HPP_

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "cpe/rational.hpp"

namespace cpe::lp {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kGreaterEqual;
  Rational bound;
};

// maximize objective . x subject to the constraints and per-variable lower
// bounds. Variables default to x_j >= 0; SetFree removes the bound.
class LinearProgram {
 public:
  // Throws std::invalid_argument when variable_count == 0.
  explicit LinearProgram(std::size_t variable_count);

  std::size_t variable_count() const { return lower_bounds_.size(); }
  std::size_t constraint_count() const { return constraints_.size(); }

  void SetObjective(std::vector<Rational> objective);
  void SetObjectiveCoefficient(std::size_t variable, Rational value);
  // Throws std::invalid_argument on a coefficient-count mismatch.
  void AddConstraint(std::vector<Rational> coefficients, Relation relation,
                     Rational bound);
  void SetLowerBound(std::size_t variable, Rational bound);
  void SetFree(std::size_t variable);

  const std::vector<Rational>& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::optional<Rational>& lower_bound(std::size_t variable) const {
    return lower_bounds_[variable];
  }

  // Exact check of every constraint and bound at `point`.
  bool IsFeasible(const std::vector<Rational>& point) const;
  Rational ObjectiveValue(const std::vector<Rational>& point) const;

 private:
  std::vector<Rational> objective_;
  std::vector<Constraint> constraints_;
  std::vector<std::optional<Rational>> lower_bounds_;
};

// The system in "A x >= b" form: each constraint oriented as >=, equalities
// split into a pair of opposite >= rows, followed by one row x_j >= l_j per
// bounded variable.
struct GreaterEqualSystem {
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;
};
GreaterEqualSystem ToGreaterEqualSystem(const LinearProgram& lp);

// Proof that the constraint system has no solution.
//
// constraint_multipliers[r] multiplies constraint r as written: >= 0 for a
// >= row, <= 0 for a <= row, any sign for an = row. bound_multipliers[j] >= 0
// multiplies x_j >= l_j and is 0 for free variables. The weighted rows sum to
// the zero vector while the weighted right-hand sides sum to a positive
// number, which no x can satisfy.
struct FarkasCertificate {
  std::vector<Rational> constraint_multipliers;
  std::vector<Rational> bound_multipliers;

  // Exact check against `lp`.
  bool Verify(const LinearProgram& lp) const;
  // The same certificate as a nonnegative y over ToGreaterEqualSystem(lp),
  // so that y^T A = 0 and y . b > 0.
  std::vector<Rational> AsGreaterEqualMultipliers(
      const LinearProgram& lp) const;
};

struct Optimal {
  Rational value;
  std::vector<Rational> point;
};

struct Infeasible {
  FarkasCertificate certificate;
};

// `point` is feasible; `point + t * ray` stays feasible for all t >= 0 and
// the objective grows without bound along it.
struct Unbounded {
  std::vector<Rational> point;
  std::vector<Rational> ray;

  bool Verify(const LinearProgram& lp) const;
};

using LpOutcome = std::variant<Optimal, Infeasible, Unbounded>;

// Two-phase primal simplex on a dense exact tableau with Bland's rule.
// Deterministic for a fixed input.
LpOutcome Solve(const LinearProgram& lp);

// Ignores the objective: returns a point satisfying every constraint, or a
// Farkas certificate.
std::variant<std::vector<Rational>, FarkasCertificate> FeasiblePoint(
    const LinearProgram& lp);

}  // namespace cpe::lp

#endif  // CPE_LP_HPP_

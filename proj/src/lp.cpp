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

#include "cpe/lp.hpp"

#include <stdexcept>
#include <string>

namespace cpe::lp {
namespace {

Rational Dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational total = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (sgn(a[j]) != 0 && sgn(b[j]) != 0) total += a[j] * b[j];
  }
  return total;
}

bool Satisfies(const Rational& lhs, Relation relation, const Rational& rhs) {
  switch (relation) {
    case Relation::kLessEqual:
      return lhs <= rhs;
    case Relation::kEqual:
      return lhs == rhs;
    case Relation::kGreaterEqual:
      return lhs >= rhs;
  }
  return false;
}

// Dense tableau for the standard form  A' v = b', v >= 0,  b' >= 0.
//
// Columns are laid out as [structural | slack | artificial | rhs]. Each
// original variable maps to one structural column (x_j = l_j + v) or, when
// free, to a pair (x_j = v_pos - v_neg).
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    const std::size_t n = lp.variable_count();
    column_of_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      column_of_[j] = structural_count_;
      structural_count_ += lp.lower_bound(j).has_value() ? 1 : 2;
    }
    const auto& constraints = lp.constraints();
    const std::size_t m = constraints.size();
    slack_column_.assign(m, kNone);
    std::size_t slack_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (constraints[i].relation != Relation::kEqual) {
        slack_column_[i] = structural_count_ + slack_count++;
      }
    }
    artificial_begin_ = structural_count_ + slack_count;

    // Decide row orientation and which rows need an artificial column.
    row_sign_.assign(m, 1);
    unit_column_.assign(m, kNone);
    std::vector<Rational> shifted_rhs(m);
    std::size_t artificial_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Constraint& c = constraints[i];
      Rational rhs = c.bound;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& lb = lp.lower_bound(j);
        if (lb && sgn(*lb) != 0 && sgn(c.coefficients[j]) != 0) {
          rhs -= c.coefficients[j] * *lb;
        }
      }
      int slack_sign = 0;
      if (c.relation == Relation::kLessEqual) slack_sign = 1;
      if (c.relation == Relation::kGreaterEqual) slack_sign = -1;
      const int rhs_sign = sgn(rhs);
      if (rhs_sign < 0 || (rhs_sign == 0 && slack_sign < 0)) row_sign_[i] = -1;
      if (slack_sign * row_sign_[i] > 0) {
        unit_column_[i] = slack_column_[i];
      } else {
        unit_column_[i] = artificial_begin_ + artificial_count++;
      }
      shifted_rhs[i] = rhs;
    }
    column_count_ = artificial_begin_ + artificial_count;
    rhs_ = column_count_;

    rows_.assign(m, std::vector<Rational>(column_count_ + 1));
    basis_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const Constraint& c = constraints[i];
      auto& row = rows_[i];
      const int sign = row_sign_[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(c.coefficients[j]) == 0) continue;
        const Rational a = sign > 0 ? c.coefficients[j] : -c.coefficients[j];
        row[column_of_[j]] = a;
        if (!lp.lower_bound(j)) row[column_of_[j] + 1] = -a;
      }
      if (slack_column_[i] != kNone) {
        const int slack_sign = c.relation == Relation::kLessEqual ? 1 : -1;
        row[slack_column_[i]] = slack_sign * sign;
      }
      if (unit_column_[i] >= artificial_begin_) row[unit_column_[i]] = 1;
      row[rhs_] = sign > 0 ? shifted_rhs[i] : Rational(-shifted_rhs[i]);
      basis_[i] = unit_column_[i];
    }
    cost_.assign(column_count_ + 1, Rational(0));
  }

  LpOutcome Run(bool optimize) {
    if (artificial_begin_ < column_count_) {
      // Phase 1: maximize -(sum of artificials).
      std::fill(cost_.begin(), cost_.end(), Rational(0));
      for (std::size_t j = artificial_begin_; j < column_count_; ++j) {
        cost_[j] = -1;
      }
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (!IsArtificial(basis_[r])) continue;
        for (std::size_t j = 0; j <= column_count_; ++j) {
          if (sgn(rows_[r][j]) != 0) cost_[j] += rows_[r][j];
        }
      }
      const std::size_t stuck = Iterate(column_count_);
      // Phase 1 is bounded above by zero, so it always terminates optimal.
      if (stuck != kNone) throw std::logic_error("phase 1 unbounded");
      if (sgn(cost_[rhs_]) > 0) return Infeasible{ExtractCertificate()};
      DriveOutArtificials();
    }

    std::fill(cost_.begin(), cost_.end(), Rational(0));
    if (optimize) {
      const auto& objective = lp_.objective();
      for (std::size_t j = 0; j < objective.size(); ++j) {
        if (sgn(objective[j]) == 0) continue;
        cost_[column_of_[j]] = objective[j];
        if (!lp_.lower_bound(j)) cost_[column_of_[j] + 1] = -objective[j];
      }
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational basic_cost = cost_[basis_[r]];
        if (sgn(basic_cost) == 0) continue;
        for (std::size_t j = 0; j <= column_count_; ++j) {
          if (sgn(rows_[r][j]) != 0) cost_[j] -= basic_cost * rows_[r][j];
        }
      }
    }
    const std::size_t entering = Iterate(artificial_begin_);
    std::vector<Rational> point = ExtractPoint();
    if (entering != kNone) {
      return Unbounded{std::move(point), ExtractRay(entering)};
    }
    Rational value = lp_.ObjectiveValue(point);
    return Optimal{std::move(value), std::move(point)};
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool IsArtificial(std::size_t column) const {
    return column >= artificial_begin_ && column < column_count_;
  }

  // Runs Bland's-rule pivots over columns [0, allowed_end). Returns kNone
  // at optimality, or the entering column of an unbounded direction.
  std::size_t Iterate(std::size_t allowed_end) {
    for (;;) {
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < allowed_end; ++j) {
        if (sgn(cost_[j]) > 0) {
          entering = j;
          break;
        }
      }
      if (entering == kNone) return kNone;

      std::size_t leaving = kNone;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (sgn(rows_[r][entering]) <= 0) continue;
        Rational ratio = rows_[r][rhs_] / rows_[r][entering];
        if (leaving == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == kNone) return entering;
      Pivot(leaving, entering);
    }
  }

  void Pivot(std::size_t pivot_row, std::size_t entering) {
    auto& prow = rows_[pivot_row];
    const Rational inverse = 1 / prow[entering];
    nonzero_.clear();
    for (std::size_t j = 0; j <= column_count_; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] *= inverse;
        nonzero_.push_back(j);
      }
    }
    Rational factor;
    Rational product;
    auto eliminate = [&](std::vector<Rational>& row) {
      if (sgn(row[entering]) == 0) return;
      factor = row[entering];
      for (std::size_t j : nonzero_) {
        mpq_mul(product.get_mpq_t(), factor.get_mpq_t(), prow[j].get_mpq_t());
        mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), product.get_mpq_t());
      }
    };
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r != pivot_row) eliminate(rows_[r]);
    }
    eliminate(cost_);
    basis_[pivot_row] = entering;
  }

  void DriveOutArtificials() {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!IsArtificial(basis_[r])) continue;
      for (std::size_t j = 0; j < artificial_begin_; ++j) {
        if (sgn(rows_[r][j]) != 0) {
          Pivot(r, j);
          break;
        }
      }
      // A row with no non-artificial entry is redundant; its artificial stays
      // basic at zero and never blocks a later pivot.
    }
  }

  FarkasCertificate ExtractCertificate() const {
    // Simplex multipliers pi_r = c_u - d_u over each row's initial unit
    // column u. At the phase-1 optimum w = -pi satisfies w^T A' <= 0 and
    // w . b' > 0; undoing the row flips gives multipliers in the original
    // orientation.
    const std::size_t m = rows_.size();
    FarkasCertificate certificate;
    certificate.constraint_multipliers.resize(m);
    std::vector<Rational> combined(lp_.variable_count());
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t u = unit_column_[r];
      Rational w = cost_[u];
      if (IsArtificial(u)) w += 1;
      if (row_sign_[r] < 0) w = -w;
      const auto& coefficients = lp_.constraints()[r].coefficients;
      for (std::size_t j = 0; j < combined.size(); ++j) {
        if (sgn(coefficients[j]) != 0 && sgn(w) != 0) {
          combined[j] += w * coefficients[j];
        }
      }
      certificate.constraint_multipliers[r] = std::move(w);
    }
    certificate.bound_multipliers.resize(lp_.variable_count());
    for (std::size_t j = 0; j < combined.size(); ++j) {
      if (lp_.lower_bound(j)) certificate.bound_multipliers[j] = -combined[j];
    }
    return certificate;
  }

  std::vector<Rational> StandardValues() const {
    std::vector<Rational> values(column_count_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      values[basis_[r]] = rows_[r][rhs_];
    }
    return values;
  }

  std::vector<Rational> ToOriginal(const std::vector<Rational>& standard,
                                   bool shift) const {
    std::vector<Rational> x(lp_.variable_count());
    for (std::size_t j = 0; j < x.size(); ++j) {
      const auto& lb = lp_.lower_bound(j);
      if (lb) {
        x[j] = standard[column_of_[j]];
        if (shift) x[j] += *lb;
      } else {
        x[j] = standard[column_of_[j]] - standard[column_of_[j] + 1];
      }
    }
    return x;
  }

  std::vector<Rational> ExtractPoint() const {
    return ToOriginal(StandardValues(), true);
  }

  std::vector<Rational> ExtractRay(std::size_t entering) const {
    std::vector<Rational> direction(column_count_);
    direction[entering] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      direction[basis_[r]] = -rows_[r][entering];
    }
    return ToOriginal(direction, false);
  }

  const LinearProgram& lp_;
  std::vector<std::size_t> column_of_;
  std::vector<std::size_t> slack_column_;
  std::vector<std::size_t> unit_column_;
  std::vector<int> row_sign_;
  std::size_t structural_count_ = 0;
  std::size_t artificial_begin_ = 0;
  std::size_t column_count_ = 0;
  std::size_t rhs_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nonzero_;
};

}  // namespace

LinearProgram::LinearProgram(std::size_t variable_count)
    : objective_(variable_count), lower_bounds_(variable_count, Rational(0)) {
  if (variable_count == 0) {
    throw std::invalid_argument("linear program needs at least one variable");
  }
}

void LinearProgram::SetObjective(std::vector<Rational> objective) {
  if (objective.size() != variable_count()) {
    throw std::invalid_argument("objective length " +
                                std::to_string(objective.size()) +
                                " != variable count " +
                                std::to_string(variable_count()));
  }
  objective_ = std::move(objective);
}

void LinearProgram::SetObjectiveCoefficient(std::size_t variable,
                                            Rational value) {
  if (variable >= variable_count()) {
    throw std::invalid_argument("objective index out of range");
  }
  objective_[variable] = std::move(value);
}

void LinearProgram::AddConstraint(std::vector<Rational> coefficients,
                                  Relation relation, Rational bound) {
  if (coefficients.size() != variable_count()) {
    throw std::invalid_argument("constraint has " +
                                std::to_string(coefficients.size()) +
                                " coefficients, expected " +
                                std::to_string(variable_count()));
  }
  constraints_.push_back({std::move(coefficients), relation, std::move(bound)});
}

void LinearProgram::SetLowerBound(std::size_t variable, Rational bound) {
  if (variable >= variable_count()) {
    throw std::invalid_argument("bound index out of range");
  }
  lower_bounds_[variable] = std::move(bound);
}

void LinearProgram::SetFree(std::size_t variable) {
  if (variable >= variable_count()) {
    throw std::invalid_argument("bound index out of range");
  }
  lower_bounds_[variable].reset();
}

bool LinearProgram::IsFeasible(const std::vector<Rational>& point) const {
  if (point.size() != variable_count()) return false;
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (lower_bounds_[j] && point[j] < *lower_bounds_[j]) return false;
  }
  for (const auto& c : constraints_) {
    if (!Satisfies(Dot(c.coefficients, point), c.relation, c.bound)) {
      return false;
    }
  }
  return true;
}

Rational LinearProgram::ObjectiveValue(
    const std::vector<Rational>& point) const {
  return Dot(objective_, point);
}

GreaterEqualSystem ToGreaterEqualSystem(const LinearProgram& lp) {
  GreaterEqualSystem system;
  auto negated = [](const std::vector<Rational>& v) {
    std::vector<Rational> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = -v[j];
    return out;
  };
  for (const auto& c : lp.constraints()) {
    if (c.relation != Relation::kLessEqual) {
      system.matrix.push_back(c.coefficients);
      system.rhs.push_back(c.bound);
    }
    if (c.relation != Relation::kGreaterEqual) {
      system.matrix.push_back(negated(c.coefficients));
      system.rhs.push_back(-c.bound);
    }
  }
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    if (!lp.lower_bound(j)) continue;
    std::vector<Rational> row(lp.variable_count());
    row[j] = 1;
    system.matrix.push_back(std::move(row));
    system.rhs.push_back(*lp.lower_bound(j));
  }
  return system;
}

bool FarkasCertificate::Verify(const LinearProgram& lp) const {
  const auto& constraints = lp.constraints();
  if (constraint_multipliers.size() != constraints.size() ||
      bound_multipliers.size() != lp.variable_count()) {
    return false;
  }
  std::vector<Rational> combined(lp.variable_count());
  Rational weighted_rhs = 0;
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    const Rational& y = constraint_multipliers[r];
    if (constraints[r].relation == Relation::kGreaterEqual && sgn(y) < 0) {
      return false;
    }
    if (constraints[r].relation == Relation::kLessEqual && sgn(y) > 0) {
      return false;
    }
    if (sgn(y) == 0) continue;
    for (std::size_t j = 0; j < combined.size(); ++j) {
      combined[j] += y * constraints[r].coefficients[j];
    }
    weighted_rhs += y * constraints[r].bound;
  }
  for (std::size_t j = 0; j < combined.size(); ++j) {
    const Rational& z = bound_multipliers[j];
    if (sgn(z) < 0) return false;
    if (!lp.lower_bound(j)) {
      if (sgn(z) != 0) return false;
    } else {
      combined[j] += z;
      weighted_rhs += z * *lp.lower_bound(j);
    }
    if (sgn(combined[j]) != 0) return false;
  }
  return sgn(weighted_rhs) > 0;
}

std::vector<Rational> FarkasCertificate::AsGreaterEqualMultipliers(
    const LinearProgram& lp) const {
  std::vector<Rational> y;
  const auto& constraints = lp.constraints();
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    const Rational& w = constraint_multipliers[r];
    switch (constraints[r].relation) {
      case Relation::kGreaterEqual:
        y.push_back(w);
        break;
      case Relation::kLessEqual:
        y.push_back(-w);
        break;
      case Relation::kEqual:
        y.push_back(sgn(w) > 0 ? w : Rational(0));
        y.push_back(sgn(w) < 0 ? Rational(-w) : Rational(0));
        break;
    }
  }
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    if (lp.lower_bound(j)) y.push_back(bound_multipliers[j]);
  }
  return y;
}

bool Unbounded::Verify(const LinearProgram& lp) const {
  if (!lp.IsFeasible(point) || ray.size() != lp.variable_count()) return false;
  for (std::size_t j = 0; j < ray.size(); ++j) {
    if (lp.lower_bound(j) && sgn(ray[j]) < 0) return false;
  }
  for (const auto& c : lp.constraints()) {
    if (!Satisfies(Dot(c.coefficients, ray), c.relation, Rational(0))) {
      return false;
    }
  }
  return sgn(lp.ObjectiveValue(ray)) > 0;
}

LpOutcome Solve(const LinearProgram& lp) {
  for (const auto& c : lp.constraints()) {
    if (c.coefficients.size() != lp.variable_count()) {
      throw std::invalid_argument("malformed constraint");
    }
  }
  Tableau tableau(lp);
  return tableau.Run(true);
}

std::variant<std::vector<Rational>, FarkasCertificate> FeasiblePoint(
    const LinearProgram& lp) {
  Tableau tableau(lp);
  LpOutcome outcome = tableau.Run(false);
  if (auto* infeasible = std::get_if<Infeasible>(&outcome)) {
    return std::move(infeasible->certificate);
  }
  return std::move(std::get<Optimal>(outcome).point);
}

}  // namespace cpe::lp

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

#ifndef CPE_POLYNOMIAL_HPP_
#define CPE_POLYNOMIAL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cpe/rational.hpp"

namespace cpe {

// Univariate polynomial in a small positive parameter eps with exact
// coefficients; coefficient k multiplies eps^k. Trailing zeros are always
// trimmed, so the zero polynomial has no coefficients.
class EpsPolynomial {
 public:
  EpsPolynomial() = default;
  EpsPolynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  explicit EpsPolynomial(std::vector<Rational> coefficients);

  // c * eps^power.
  static EpsPolynomial Monomial(Rational c, std::size_t power);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  Rational coefficient(std::size_t power) const;
  bool IsZero() const { return coefficients_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  // Power of the lowest nonzero coefficient; nullopt for zero.
  std::optional<std::size_t> LowestOrder() const;

  // Sign on (0, delta) for all small enough delta > 0: the sign of the
  // lowest-order nonzero coefficient, 0 for the zero polynomial.
  int SignNearZero() const;

  Rational Evaluate(const Rational& eps) const;

  EpsPolynomial& operator+=(const EpsPolynomial& other);
  EpsPolynomial& operator-=(const EpsPolynomial& other);
  EpsPolynomial& operator*=(const EpsPolynomial& other);
  EpsPolynomial& operator*=(const Rational& scalar);

  friend EpsPolynomial operator+(EpsPolynomial a, const EpsPolynomial& b) {
    return a += b;
  }
  friend EpsPolynomial operator-(EpsPolynomial a, const EpsPolynomial& b) {
    return a -= b;
  }
  friend EpsPolynomial operator*(const EpsPolynomial& a,
                                 const EpsPolynomial& b) {
    EpsPolynomial out = a;
    return out *= b;
  }
  friend EpsPolynomial operator*(EpsPolynomial a, const Rational& c) {
    return a *= c;
  }
  EpsPolynomial operator-() const;

  bool operator==(const EpsPolynomial&) const = default;

  // "-9/16 + 7/4 e - 1/2 e^2"
  std::string ToString() const;

 private:
  void Trim();

  std::vector<Rational> coefficients_;
};

}  // namespace cpe

#endif  // CPE_POLYNOMIAL_HPP_

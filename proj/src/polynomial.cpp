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

#include "cpe/polynomial.hpp"

namespace cpe {

EpsPolynomial::EpsPolynomial(Rational constant) {
  coefficients_.push_back(std::move(constant));
  Trim();
}

EpsPolynomial::EpsPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  Trim();
}

EpsPolynomial EpsPolynomial::Monomial(Rational c, std::size_t power) {
  std::vector<Rational> coefficients(power + 1);
  coefficients[power] = std::move(c);
  return EpsPolynomial(std::move(coefficients));
}

Rational EpsPolynomial::coefficient(std::size_t power) const {
  if (power >= coefficients_.size()) return 0;
  return coefficients_[power];
}

std::optional<std::size_t> EpsPolynomial::LowestOrder() const {
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (sgn(coefficients_[k]) != 0) return k;
  }
  return std::nullopt;
}

int EpsPolynomial::SignNearZero() const {
  const auto lowest = LowestOrder();
  return lowest ? sgn(coefficients_[*lowest]) : 0;
}

Rational EpsPolynomial::Evaluate(const Rational& eps) const {
  Rational value = 0;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    value = value * eps + coefficients_[k];
  }
  return value;
}

EpsPolynomial& EpsPolynomial::operator+=(const EpsPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    coefficients_[k] += other.coefficients_[k];
  }
  Trim();
  return *this;
}

EpsPolynomial& EpsPolynomial::operator-=(const EpsPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    coefficients_[k] -= other.coefficients_[k];
  }
  Trim();
  return *this;
}

EpsPolynomial& EpsPolynomial::operator*=(const EpsPolynomial& other) {
  if (IsZero() || other.IsZero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<Rational> product(coefficients_.size() +
                                other.coefficients_.size() - 1);
  for (std::size_t a = 0; a < coefficients_.size(); ++a) {
    if (sgn(coefficients_[a]) == 0) continue;
    for (std::size_t b = 0; b < other.coefficients_.size(); ++b) {
      product[a + b] += coefficients_[a] * other.coefficients_[b];
    }
  }
  coefficients_ = std::move(product);
  Trim();
  return *this;
}

EpsPolynomial& EpsPolynomial::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  Trim();
  return *this;
}

EpsPolynomial EpsPolynomial::operator-() const {
  EpsPolynomial out = *this;
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

std::string EpsPolynomial::ToString() const {
  if (IsZero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    const Rational& c = coefficients_[k];
    if (sgn(c) == 0) continue;
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0 || magnitude != 1) {
      out += cpe::ToString(magnitude);
      if (k > 0) out += " ";
    }
    if (k == 1) out += "e";
    if (k > 1) out += "e^" + std::to_string(k);
  }
  return out;
}

void EpsPolynomial::Trim() {
  while (!coefficients_.empty() && sgn(coefficients_.back()) == 0) {
    coefficients_.pop_back();
  }
}

}  // namespace cpe

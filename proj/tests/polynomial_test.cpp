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

#include <doctest.h>

#include <random>

#include "cpe/polynomial.hpp"
#include "fixtures.hpp"

namespace cpe {
namespace {

using testing::Poly;
using testing::Q;

EpsPolynomial RandomPoly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> degree(0, 4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> c(degree(rng) + 1);
  for (auto& x : c) x = Q(coeff(rng), den(rng));
  return EpsPolynomial(c);
}

TEST_CASE("construction trims trailing zeros") {
  CHECK(Poly({1, 0, 0}).degree() == 0);
  CHECK(Poly({0, 0}).IsZero());
  CHECK(EpsPolynomial().IsZero());
  CHECK(Poly({0, 0, 3}) == EpsPolynomial::Monomial(3, 2));
  CHECK(EpsPolynomial::Monomial(0, 5).IsZero());
  CHECK(Poly({0, 0, 3}).LowestOrder() == 2);
}

TEST_CASE("arithmetic") {
  const EpsPolynomial a = Poly({1, -2, -1});
  const EpsPolynomial b = Poly({0, 1});
  CHECK(a + b == Poly({1, -1, -1}));
  CHECK(a - a == EpsPolynomial());
  CHECK(a * b == Poly({0, 1, -2, -1}));
  CHECK(-b == Poly({0, -1}));
  CHECK(a * Rational(2) == Poly({2, -4, -2}));
  CHECK(a.Evaluate(Q(1, 2)) == Q(-1, 4));
  CHECK(a.coefficient(7) == 0);
}

TEST_CASE("printing") {
  CHECK(Poly({Q(-9, 16), Q(7, 4), Q(-1, 2)}).ToString() == "-9/16 + 7/4 e - 1/2 e^2");
  CHECK(EpsPolynomial().ToString() == "0");
  CHECK(Poly({0, 6}).ToString() == "6 e");
  CHECK(Poly({0, -1}).ToString() == "-e");
}

TEST_CASE("sign near zero") {
  CHECK(Poly({0, 1}).SignNearZero() == 1);
  CHECK(Poly({Q(-1, 16), 0, Q(9, 16)}).SignNearZero() == -1);
  CHECK(Poly({0, 0, -1, 100}).SignNearZero() == -1);
  CHECK(EpsPolynomial().SignNearZero() == 0);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const EpsPolynomial a = RandomPoly(rng);
    const EpsPolynomial b = RandomPoly(rng);
    const EpsPolynomial c = RandomPoly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - b + b == a);
    CHECK(a * EpsPolynomial(Rational(1)) == a);
  }
}

TEST_CASE("sign near zero agrees with evaluation at a tiny epsilon") {
  std::mt19937_64 rng(7);
  const Rational eps = Q(1, 1000000000);
  for (int trial = 0; trial < 300; ++trial) {
    const EpsPolynomial p = RandomPoly(rng);
    CHECK(p.SignNearZero() == sgn(p.Evaluate(eps)));
  }
}

}  // namespace
}  // namespace cpe

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

#ifndef CPE_RATIONAL_HPP_
#define CPE_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cpe {

// Exact rational number. gmpxx keeps results of arithmetic canonical
// (lowest terms, positive denominator); every constructor that can produce a
// non-canonical value goes through ParseRational or MakeRational below.
using Rational = mpq_class;

// num/den in lowest terms. Throws std::invalid_argument when den == 0.
Rational MakeRational(long num, long den = 1);

// Accepts "p/q" or an integer literal ("-3", "+7"), with q > 0.
// Throws std::invalid_argument on anything else.
Rational ParseRational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& value);

int Sign(const Rational& value);

Rational Sum(const std::vector<Rational>& values);

}  // namespace cpe

#endif  // CPE_RATIONAL_HPP_

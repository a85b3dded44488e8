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

#include "cpe/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cpe {
namespace {

bool IsIntegerLiteral(std::string_view text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) return false;
  for (std::size_t k = start; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view text) {
  if (!IsIntegerLiteral(text)) {
    throw std::invalid_argument("not an integer literal: '" +
                                std::string(text) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

Rational MakeRational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInteger(text));
  const mpz_class num = ParseInteger(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (den_text.empty() || den_text[0] == '-' || den_text[0] == '+') {
    throw std::invalid_argument("denominator must be a positive integer: '" +
                                std::string(text) + "'");
  }
  const mpz_class den = ParseInteger(den_text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) +
                                "'");
  }
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string ToString(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

int Sign(const Rational& value) { return sgn(value); }

Rational Sum(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace cpe

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

#ifndef CPE_IO_HPP_
#define CPE_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cpe/game.hpp"
#include "cpe/pdce.hpp"
#include "cpe/polynomial.hpp"
#include "cpe/sequence.hpp"

namespace cpe::io {

using Json = nlohmann::ordered_json;

// Malformed input. `location` is "line:column" for syntax errors and a
// JSON-pointer-like path ("/payoffs/x1,x2,x3/1") for semantic ones.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message),
        location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

std::string ReadFile(const std::string& path);

// Game file:
//   {"players": ["1", "2"],
//    "strategies": [["a", "b"], ["a", "b"]],
//    "payoffs": {"a,a": ["1", "-1"], ...}}
// Every profile appears exactly once; values are "p/q" or integer strings.
Game ParseGame(std::string_view text);
Json GameToJson(const Game& game);

// Distribution file: {"probabilities": {"a,b": "1/2", ...}}. Omitted
// profiles have probability zero.
CorrelatedStrategy ParseDistribution(const Game& game, std::string_view text);
Json DistributionToJson(const Game& game, const CorrelatedStrategy& rho);

// Tremble file:
//   {"trembles": {"<player>": {"<recommended>": {"<target>":
//        {"coeffs": ["1", "-2", "-1"]}, ...}}}}
// Omitted targets are zero; an omitted recommendation row follows the
// recommendation exactly.
TrembleFamily ParseTrembles(const Game& game, std::string_view text);
Json TremblesToJson(const Game& game, const TrembleFamily& trembles);

// Parametric family: {"probabilities": {"a,b": {"coeffs": ["0", "1"]}}}.
ParametricDistribution ParseFamily(const Game& game, std::string_view text);
Json FamilyToJson(const Game& game, const ParametricDistribution& family);

// {"coeffs": [...]}
Json PolynomialToJson(const EpsPolynomial& polynomial);
EpsPolynomial PolynomialFromJson(const Json& value, const std::string& where);

Rational RationalFromJson(const Json& value, const std::string& where);

// "x1,y2,x3" -> profile index; labels are trimmed of surrounding spaces.
std::size_t ParseProfileLabel(const Game& game, std::string_view label,
                              const std::string& where);

}  // namespace cpe::io

#endif  // CPE_IO_HPP_

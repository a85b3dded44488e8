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

#include "cpe/io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace cpe::io {
namespace {

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into line:column.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t k = 0; k + 1 < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(std::to_string(line) + ":" + std::to_string(column),
                     "invalid JSON");
  }
}

const Json& Require(const Json& object, const char* key,
                    const std::string& where) {
  if (!object.is_object()) throw ParseError(where, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError(where, std::string("missing key \"") + key + "\"");
  }
  return *it;
}

std::string Trim(std::string_view text) {
  const auto begin = text.find_first_not_of(" \t");
  if (begin == std::string_view::npos) return "";
  const auto end = text.find_last_not_of(" \t");
  return std::string(text.substr(begin, end - begin + 1));
}

std::string RequireString(const Json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where, "expected a string");
  return value.get<std::string>();
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Rational RationalFromJson(const Json& value, const std::string& where) {
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else if (value.is_number_integer()) {
    text = value.dump();
  } else {
    throw ParseError(where, "expected a rational string such as \"3/4\"");
  }
  try {
    return ParseRational(Trim(text));
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
}

Json PolynomialToJson(const EpsPolynomial& polynomial) {
  Json coeffs = Json::array();
  for (const auto& c : polynomial.coefficients()) coeffs.push_back(ToString(c));
  if (coeffs.empty()) coeffs.push_back("0");
  return Json{{"coeffs", std::move(coeffs)}};
}

EpsPolynomial PolynomialFromJson(const Json& value, const std::string& where) {
  const Json& coeffs = Require(value, "coeffs", where);
  if (!coeffs.is_array()) throw ParseError(where + "/coeffs", "expected a list");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out.push_back(RationalFromJson(coeffs[k],
                                   where + "/coeffs/" + std::to_string(k)));
  }
  return EpsPolynomial(std::move(out));
}

std::size_t ParseProfileLabel(const Game& game, std::string_view label,
                              const std::string& where) {
  Profile profile;
  std::size_t start = 0;
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    const std::size_t comma = label.find(',', start);
    const bool last = i + 1 == game.player_count();
    if (last != (comma == std::string_view::npos)) {
      throw ParseError(where, "profile \"" + std::string(label) +
                                  "\" must name one strategy per player");
    }
    const std::string name = Trim(label.substr(
        start, last ? std::string_view::npos : comma - start));
    const auto strategy = game.FindStrategy(i, name);
    if (!strategy) {
      throw ParseError(where, "unknown strategy \"" + name + "\" for player " +
                                  game.player_name(i));
    }
    profile.push_back(*strategy);
    start = comma + 1;
  }
  return game.ProfileIndex(profile);
}

Game ParseGame(std::string_view text) {
  const Json doc = ParseJson(text);
  const Json& players = Require(doc, "players", "");
  const Json& strategies = Require(doc, "strategies", "");
  const Json& payoffs = Require(doc, "payoffs", "");
  if (!players.is_array() || players.empty()) {
    throw ParseError("/players", "expected a nonempty list of labels");
  }
  if (!strategies.is_array() || strategies.size() != players.size()) {
    throw ParseError("/strategies", "expected one strategy list per player");
  }
  std::vector<std::string> player_names;
  std::vector<std::vector<std::string>> strategy_names;
  for (std::size_t i = 0; i < players.size(); ++i) {
    player_names.push_back(
        RequireString(players[i], "/players/" + std::to_string(i)));
    const Json& list = strategies[i];
    const std::string where = "/strategies/" + std::to_string(i);
    if (!list.is_array() || list.empty()) {
      throw ParseError(where, "expected a nonempty list of labels");
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < list.size(); ++k) {
      std::string name = RequireString(list[k], where + "/" + std::to_string(k));
      if (name.empty() || name.find(',') != std::string::npos ||
          Trim(name) != name) {
        throw ParseError(where + "/" + std::to_string(k),
                         "strategy labels must be nonempty, without commas "
                         "or surrounding spaces");
      }
      names.push_back(std::move(name));
    }
    strategy_names.push_back(std::move(names));
  }
  // Build with placeholder payoffs to get profile indexing, then fill.
  std::size_t count = 1;
  for (const auto& names : strategy_names) count *= names.size();
  const std::size_t n = player_names.size();
  std::vector<Rational> table(count * n);
  std::optional<Game> shape_only;
  try {
    shape_only.emplace(player_names, strategy_names, table);
  } catch (const std::invalid_argument& e) {
    throw ParseError("/strategies", e.what());
  }
  if (!payoffs.is_object()) throw ParseError("/payoffs", "expected an object");
  std::set<std::size_t> seen;
  for (auto it = payoffs.begin(); it != payoffs.end(); ++it) {
    const std::string where = "/payoffs/" + it.key();
    const std::size_t index = ParseProfileLabel(*shape_only, it.key(), where);
    if (!seen.insert(index).second) {
      throw ParseError(where, "profile listed twice");
    }
    const Json& values = it.value();
    if (!values.is_array() || values.size() != n) {
      throw ParseError(where, "expected " + std::to_string(n) + " payoffs");
    }
    for (std::size_t i = 0; i < n; ++i) {
      table[index * n + i] =
          RationalFromJson(values[i], where + "/" + std::to_string(i));
    }
  }
  if (seen.size() != count) {
    for (std::size_t s = 0; s < count; ++s) {
      if (!seen.count(s)) {
        throw ParseError("/payoffs", "missing profile " +
                                         shape_only->ProfileLabel(s));
      }
    }
  }
  return Game(std::move(player_names), std::move(strategy_names),
              std::move(table));
}

Json GameToJson(const Game& game) {
  Json doc;
  Json players = Json::array();
  Json strategies = Json::array();
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    players.push_back(game.player_name(i));
    strategies.push_back(game.strategy_names(i));
  }
  doc["players"] = std::move(players);
  doc["strategies"] = std::move(strategies);
  Json payoffs = Json::object();
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    Json values = Json::array();
    for (std::size_t i = 0; i < game.player_count(); ++i) {
      values.push_back(ToString(game.payoff(s, i)));
    }
    payoffs[game.ProfileLabel(s)] = std::move(values);
  }
  doc["payoffs"] = std::move(payoffs);
  return doc;
}

CorrelatedStrategy ParseDistribution(const Game& game, std::string_view text) {
  const Json doc = ParseJson(text);
  const Json& probabilities = Require(doc, "probabilities", "");
  if (!probabilities.is_object()) {
    throw ParseError("/probabilities", "expected an object");
  }
  std::vector<Rational> values(game.profile_count());
  std::set<std::size_t> seen;
  for (auto it = probabilities.begin(); it != probabilities.end(); ++it) {
    const std::string where = "/probabilities/" + it.key();
    const std::size_t index = ParseProfileLabel(game, it.key(), where);
    if (!seen.insert(index).second) {
      throw ParseError(where, "profile listed twice");
    }
    values[index] = RationalFromJson(it.value(), where);
  }
  try {
    return CorrelatedStrategy(game, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError("/probabilities", e.what());
  }
}

Json DistributionToJson(const Game& game, const CorrelatedStrategy& rho) {
  Json probabilities = Json::object();
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    if (sgn(rho[s]) != 0) probabilities[game.ProfileLabel(s)] = ToString(rho[s]);
  }
  return Json{{"probabilities", std::move(probabilities)}};
}

TrembleFamily ParseTrembles(const Game& game, std::string_view text) {
  const Json doc = ParseJson(text);
  const Json& blocks = Require(doc, "trembles", "");
  if (!blocks.is_object()) throw ParseError("/trembles", "expected an object");
  TrembleFamily::Rows rows = TrembleFamily::Identity(game).rows();
  for (auto pit = blocks.begin(); pit != blocks.end(); ++pit) {
    const std::string pwhere = "/trembles/" + pit.key();
    std::optional<std::size_t> player;
    for (std::size_t i = 0; i < game.player_count(); ++i) {
      if (game.player_name(i) == pit.key()) player = i;
    }
    if (!player) throw ParseError(pwhere, "unknown player");
    if (!pit.value().is_object()) throw ParseError(pwhere, "expected an object");
    for (auto rit = pit.value().begin(); rit != pit.value().end(); ++rit) {
      const std::string rwhere = pwhere + "/" + rit.key();
      const auto recommended = game.FindStrategy(*player, rit.key());
      if (!recommended) throw ParseError(rwhere, "unknown strategy");
      if (!rit.value().is_object()) {
        throw ParseError(rwhere, "expected an object");
      }
      auto& row = rows[*player][*recommended];
      row.assign(row.size(), EpsPolynomial());
      for (auto tit = rit.value().begin(); tit != rit.value().end(); ++tit) {
        const std::string twhere = rwhere + "/" + tit.key();
        const auto target = game.FindStrategy(*player, tit.key());
        if (!target) throw ParseError(twhere, "unknown strategy");
        row[*target] = PolynomialFromJson(tit.value(), twhere);
      }
    }
  }
  try {
    return TrembleFamily(game, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError("/trembles", e.what());
  }
}

Json TremblesToJson(const Game& game, const TrembleFamily& trembles) {
  Json blocks = Json::object();
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    Json block = Json::object();
    for (std::size_t r = 0; r < game.strategy_count(i); ++r) {
      Json row = Json::object();
      for (std::size_t t = 0; t < game.strategy_count(i); ++t) {
        if (!trembles(i, r, t).IsZero()) {
          row[game.strategy_name(i, t)] = PolynomialToJson(trembles(i, r, t));
        }
      }
      block[game.strategy_name(i, r)] = std::move(row);
    }
    blocks[game.player_name(i)] = std::move(block);
  }
  return Json{{"trembles", std::move(blocks)}};
}

ParametricDistribution ParseFamily(const Game& game, std::string_view text) {
  const Json doc = ParseJson(text);
  const Json& probabilities = Require(doc, "probabilities", "");
  if (!probabilities.is_object()) {
    throw ParseError("/probabilities", "expected an object");
  }
  std::vector<EpsPolynomial> masses(game.profile_count());
  std::set<std::size_t> seen;
  for (auto it = probabilities.begin(); it != probabilities.end(); ++it) {
    const std::string where = "/probabilities/" + it.key();
    const std::size_t index = ParseProfileLabel(game, it.key(), where);
    if (!seen.insert(index).second) {
      throw ParseError(where, "profile listed twice");
    }
    masses[index] = PolynomialFromJson(it.value(), where);
  }
  try {
    return ParametricDistribution(game, std::move(masses));
  } catch (const std::invalid_argument& e) {
    throw ParseError("/probabilities", e.what());
  }
}

Json FamilyToJson(const Game& game, const ParametricDistribution& family) {
  Json probabilities = Json::object();
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    probabilities[game.ProfileLabel(s)] = PolynomialToJson(family[s]);
  }
  return Json{{"probabilities", std::move(probabilities)}};
}

}  // namespace cpe::io

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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>

#include <CLI11.hpp>

#include "cpe/certification.hpp"
#include "cpe/classifier.hpp"
#include "cpe/game.hpp"
#include "cpe/io.hpp"
#include "cpe/pdce.hpp"
#include "cpe/random_game.hpp"
#include "cpe/sequence.hpp"

namespace cpe::cli {
namespace {

using io::Json;

// Failure while loading an input file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Result {
  int code = kPass;
  Json report = Json::object();
};

struct Options {
  std::string game_path;
  std::string dist_path;
  std::string trembles_path;
  std::string family_path;
  std::vector<std::uint64_t> k_values;
  std::optional<std::size_t> cap;
  std::string format = "human";
  std::uint64_t seed = 1;
  std::size_t games = 20;
};

template <typename T>
T Load(const std::string& path, const std::function<T(std::string_view)>& parse) {
  std::string text;
  try {
    text = io::ReadFile(path);
    return parse(text);
  } catch (const io::ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

Game LoadGame(const std::string& path) {
  return Load<Game>(path, [](std::string_view text) { return io::ParseGame(text); });
}

CorrelatedStrategy LoadDistribution(const Game& game, const std::string& path) {
  return Load<CorrelatedStrategy>(path, [&](std::string_view text) {
    return io::ParseDistribution(game, text);
  });
}

Json ViolationJson(const Game& game, const IncentiveViolation& v) {
  return Json{{"player", game.player_name(v.player)},
              {"recommended", game.strategy_name(v.player, v.recommended)},
              {"deviation", game.strategy_name(v.player, v.deviation)},
              {"follow_value", ToString(v.follow_value)},
              {"deviation_value", ToString(v.deviation_value)}};
}

Json AlphaJson(const Game& game, const DeviationProfile& alpha) {
  Json players = Json::object();
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    Json rows = Json::object();
    for (std::size_t r = 0; r < game.strategy_count(i); ++r) {
      Json row = Json::object();
      for (std::size_t t = 0; t < game.strategy_count(i); ++t) {
        if (sgn(alpha[i](r, t)) != 0) {
          row[game.strategy_name(i, t)] = ToString(alpha[i](r, t));
        }
      }
      rows[game.strategy_name(i, r)] = std::move(row);
    }
    players[game.player_name(i)] = std::move(rows);
  }
  return players;
}

Json RefutationJson(const Game& game, const Refutation& refutation) {
  Json witnesses = Json::array();
  for (const auto& w : refutation.witnesses) {
    witnesses.push_back(
        Json{{"profile", game.ProfileLabel(w.profile)}, {"gain", ToString(w.gain)}});
  }
  return Json{{"alpha", AlphaJson(game, refutation.alpha)},
              {"witnesses", std::move(witnesses)}};
}

Json SupportJson(const Game& game, const ProductSupport& support) {
  Json players = Json::array();
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    Json names = Json::array();
    for (std::size_t s : support.members(i)) {
      names.push_back(game.strategy_name(i, s));
    }
    players.push_back(std::move(names));
  }
  return players;
}

Json MuJson(const Game& game, const ProductSupport& support,
            const MuVector& mu) {
  Json out = Json::object();
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    if (support.ContainsProfile(game, s)) {
      out[game.ProfileLabel(s)] = ToString(mu[s]);
    }
  }
  return out;
}

Result CheckCe(const Options& options) {
  const Game game = LoadGame(options.game_path);
  const CorrelatedStrategy rho = LoadDistribution(game, options.dist_path);
  const auto check = IsCorrelatedEquilibrium(game, rho);
  Result result;
  result.report["command"] = "check-ce";
  if (check.is_equilibrium) {
    result.report["verdict"] = "correlated_equilibrium";
  } else {
    result.code = kNegative;
    result.report["verdict"] = "not_correlated_equilibrium";
    result.report["violation"] = ViolationJson(game, *check.violation);
  }
  return result;
}

Result CheckCpe(const Options& options) {
  const Game game = LoadGame(options.game_path);
  const CorrelatedStrategy rho = LoadDistribution(game, options.dist_path);
  Result result;
  result.report["command"] = "check-cpe";
  const ProductSupport support = ProductSupportOf(game, rho);
  result.report["support"] = SupportJson(game, support);
  try {
    const CpeVerdict verdict = IsCorrelatedPerfect(game, rho);
    if (verdict.is_perfect()) {
      result.report["verdict"] = "perfect";
      const auto mu = FindMu(game, support);
      if (const auto* values = std::get_if<MuVector>(&mu)) {
        result.report["mu"] = MuJson(game, support, *values);
      }
    } else {
      result.code = kNegative;
      result.report["verdict"] = "refuted";
      result.report["refutation"] = RefutationJson(game, verdict.refutation());
    }
  } catch (const NotCorrelatedEquilibrium& e) {
    result.code = kNotEquilibrium;
    result.report["verdict"] = "not_correlated_equilibrium";
    result.report["violation"] = ViolationJson(game, e.violation());
  }
  return result;
}

Result Sequence(const Options& options) {
  if (options.k_values.empty()) throw InputError("--k needs at least one value");
  for (std::uint64_t k : options.k_values) {
    if (k == 0) throw InputError("--k values must be positive");
  }
  const Game game = LoadGame(options.game_path);
  const CorrelatedStrategy rho = LoadDistribution(game, options.dist_path);
  Result result;
  result.report["command"] = "sequence";
  if (const auto check = IsCorrelatedEquilibrium(game, rho); !check.is_equilibrium) {
    result.code = kNotEquilibrium;
    result.report["verdict"] = "not_correlated_equilibrium";
    result.report["violation"] = ViolationJson(game, *check.violation);
    return result;
  }
  const ProductSupport support = ProductSupportOf(game, rho);
  const auto mu = FindMu(game, support);
  if (const auto* failure = std::get_if<MuInfeasibility>(&mu)) {
    result.code = kNegative;
    result.report["verdict"] = "refuted";
    result.report["refutation"] = RefutationJson(game, failure->refutation);
    return result;
  }
  const MuVector& values = std::get<MuVector>(mu);
  result.report["verdict"] = "perfect";
  result.report["mu"] = MuJson(game, support, values);
  Json terms = Json::array();
  for (std::uint64_t k : options.k_values) {
    const CorrelatedStrategy term = SupportingSequenceTerm(game, rho, values, k);
    const SequenceTermCheck check = VerifySequenceTerm(game, term, support);
    Json entry{{"k", std::to_string(k)},
               {"verified", check.ok},
               {"distribution", io::DistributionToJson(game, term)["probabilities"]}};
    if (!check.ok) {
      result.code = kNegative;
      entry["violation"] = ViolationJson(game, *check.violation);
    }
    terms.push_back(std::move(entry));
  }
  result.report["terms"] = std::move(terms);
  return result;
}

std::size_t ResolveCap(const Options& options) {
  if (options.cap) return *options.cap;
  if (const char* env = std::getenv("CPE_SOLVER_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("CPE_SOLVER_CAP: not a count: ") + env);
  }
  return kDefaultSupportCap;
}

Result Enumerate(const Options& options) {
  const Game game = LoadGame(options.game_path);
  Result result;
  result.report["command"] = "enumerate";
  const std::size_t cap = ResolveCap(options);
  result.report["cap"] = std::to_string(cap);
  result.report["support_count"] = std::to_string(CountProductSupports(game));
  const auto classifications = ClassifyAllSupports(game, {cap});
  Json entries = Json::array();
  for (const auto& c : classifications) {
    Json entry{{"support", SupportJson(game, c.support)},
               {"label", c.support.ToString(game)},
               {"equality_holds", c.equality_holds},
               {"ce_exists", c.ce_exists},
               {"cpe_feasible", c.equality_holds && c.ce_exists},
               {"inherited", c.inherited}};
    if (c.sample_ce) {
      entry["sample_ce"] = io::DistributionToJson(game, *c.sample_ce)["probabilities"];
    }
    if (c.refutation) entry["refutation"] = RefutationJson(game, *c.refutation);
    entries.push_back(std::move(entry));
  }
  result.report["supports"] = std::move(entries);
  Json maximal = Json::array();
  for (const auto& support : MaximalCpeSupports(classifications)) {
    maximal.push_back(support.ToString(game));
  }
  result.report["maximal_cpe_supports"] = std::move(maximal);
  return result;
}

Result CheckPdce(const Options& options) {
  const Game game = LoadGame(options.game_path);
  const CorrelatedStrategy rho = LoadDistribution(game, options.dist_path);
  const TrembleFamily trembles = Load<TrembleFamily>(
      options.trembles_path,
      [&](std::string_view text) { return io::ParseTrembles(game, text); });
  const PdceReport report = PdceCheck(game, rho, trembles);
  Result result;
  result.report["command"] = "check-pdce";
  result.report["verdict"] = report.holds ? "pdce" : "not_pdce";
  result.report["trembles_completely_mixed"] = report.trembles_completely_mixed;
  Json gains = Json::array();
  for (const auto& g : report.gains) {
    gains.push_back(Json{{"player", game.player_name(g.player)},
                         {"recommended", game.strategy_name(g.player, g.recommended)},
                         {"deviation", game.strategy_name(g.player, g.deviation)},
                         {"gain", g.gain.ToString()},
                         {"coeffs", io::PolynomialToJson(g.gain)["coeffs"]},
                         {"ok", g.ok}});
  }
  result.report["gains"] = std::move(gains);
  if (!report.holds) result.code = kNegative;
  return result;
}

Result CheckFamily(const Options& options) {
  const Game game = LoadGame(options.game_path);
  const ParametricDistribution family = Load<ParametricDistribution>(
      options.family_path,
      [&](std::string_view text) { return io::ParseFamily(game, text); });
  const CorrelatedStrategy target = options.dist_path.empty()
                                        ? family.Limit(game)
                                        : LoadDistribution(game, options.dist_path);
  const ProductSupport support = ProductSupportOf(game, target);
  const ParametricCheck check =
      VerifyParametricSequence(game, family, target, support);
  Result result;
  result.report["command"] = "check-family";
  result.report["verdict"] = check.ok ? "supporting_sequence" : "rejected";
  result.report["limit_matches"] = check.limit_matches;
  result.report["total_mass"] = family.TotalMass().ToString();
  Json margins = Json::array();
  for (const auto& m : check.constraints) {
    margins.push_back(Json{{"player", game.player_name(m.player)},
                           {"recommended", game.strategy_name(m.player, m.recommended)},
                           {"deviation", game.strategy_name(m.player, m.deviation)},
                           {"margin", m.margin.ToString()},
                           {"ok", m.ok}});
  }
  result.report["margins"] = std::move(margins);
  if (!check.ok) result.code = kNegative;
  return result;
}

Result Dominated(const Options& options) {
  const Game game = LoadGame(options.game_path);
  Result result;
  result.report["command"] = "dominated";
  Json players = Json::object();
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    Json names = Json::array();
    for (std::size_t s : WeaklyDominatedStrategies(game, i)) {
      names.push_back(game.strategy_name(i, s));
    }
    players[game.player_name(i)] = std::move(names);
  }
  result.report["weakly_dominated"] = std::move(players);
  return result;
}

// Cross-checks the primal and dual certification routes on random games.
Result RandomCheck(const Options& options) {
  std::mt19937_64 rng(options.seed);
  std::size_t supports = 0;
  std::size_t perfect = 0;
  Json disagreements = Json::array();
  for (std::size_t g = 0; g < options.games; ++g) {
    const Game game = RandomGame(rng);
    for (const auto& support : EnumerateProductSupports(game, ResolveCap(options))) {
      ++supports;
      const bool certified = CertifySupport(game, support).is_perfect();
      const bool feasible = std::holds_alternative<MuVector>(FindMu(game, support));
      perfect += certified;
      if (certified != feasible) {
        disagreements.push_back(Json{{"game", io::GameToJson(game)},
                                     {"support", support.ToString(game)}});
      }
    }
  }
  Result result;
  result.report["command"] = "random-check";
  result.report["seed"] = std::to_string(options.seed);
  result.report["games"] = std::to_string(options.games);
  result.report["supports"] = std::to_string(supports);
  result.report["perfect_supports"] = std::to_string(perfect);
  result.report["verdict"] = disagreements.empty() ? "consistent" : "inconsistent";
  if (!disagreements.empty()) result.code = kNegative;
  result.report["disagreements"] = std::move(disagreements);
  return result;
}

void RenderHuman(const Json& value, int indent, std::ostream& out) {
  const std::string pad(indent, ' ');
  for (auto it = value.begin(); it != value.end(); ++it) {
    const std::string key = value.is_object() ? it.key() : "-";
    const bool scalar_list =
        it->is_array() && std::none_of(it->begin(), it->end(),
                                       [](const Json& v) { return v.is_structured(); });
    if (scalar_list) {
      out << pad << key << ": [";
      for (auto v = it->begin(); v != it->end(); ++v) {
        out << (v == it->begin() ? "" : ", ")
            << (v->is_string() ? v->get<std::string>() : v->dump());
      }
      out << "]\n";
    } else if (it->is_structured() && !it->empty()) {
      out << pad << key << ":\n";
      RenderHuman(*it, indent + 2, out);
    } else if (it->is_string()) {
      out << pad << key << ": " << it->get<std::string>() << "\n";
    } else {
      out << pad << key << ": " << it->dump() << "\n";
    }
  }
}

std::string ElapsedSeconds(std::chrono::steady_clock::duration elapsed) {
  const auto micros =
      std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();
  return ToString(Rational(static_cast<long>(micros), 1000000L));
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact correlated perfect equilibrium analysis", "cpe-solver"};
  app.require_subcommand(1);
  Options options;
  app.add_option("--format", options.format, "Report format")
      ->check(CLI::IsMember({"human", "structured"}));

  auto add_game = [&](CLI::App* sub) {
    sub->add_option("--game", options.game_path, "Game file")->required();
  };
  auto add_dist = [&](CLI::App* sub) {
    sub->add_option("--dist", options.dist_path, "Distribution file")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", options.format, "Report format")
        ->check(CLI::IsMember({"human", "structured"}));
  };

  std::function<Result(const Options&)> command;
  auto bind = [&](CLI::App* sub, Result (*fn)(const Options&)) {
    add_format(sub);
    sub->callback([&command, fn] { command = fn; });
  };

  auto* check_ce = app.add_subcommand("check-ce", "Test the obedience constraints");
  add_game(check_ce);
  add_dist(check_ce);
  bind(check_ce, CheckCe);

  auto* check_cpe = app.add_subcommand("check-cpe", "Decide correlated perfection");
  add_game(check_cpe);
  add_dist(check_cpe);
  bind(check_cpe, CheckCpe);

  auto* sequence = app.add_subcommand("sequence", "Build supporting sequence terms");
  add_game(sequence);
  add_dist(sequence);
  sequence->add_option("--k", options.k_values, "Sequence indices")
      ->required()
      ->delimiter(',');
  bind(sequence, Sequence);

  auto* enumerate = app.add_subcommand("enumerate", "Classify all product supports");
  add_game(enumerate);
  enumerate->add_option("--cap", options.cap, "Maximum number of supports");
  bind(enumerate, Enumerate);

  auto* check_pdce = app.add_subcommand("check-pdce", "Check a tremble family");
  add_game(check_pdce);
  add_dist(check_pdce);
  check_pdce->add_option("--trembles", options.trembles_path, "Tremble file")
      ->required();
  bind(check_pdce, CheckPdce);

  auto* check_family =
      app.add_subcommand("check-family", "Check a parametric distribution family");
  add_game(check_family);
  check_family->add_option("--family", options.family_path, "Family file")
      ->required();
  check_family->add_option("--dist", options.dist_path,
                           "Target distribution (defaults to the limit)");
  bind(check_family, CheckFamily);

  auto* dominated = app.add_subcommand("dominated", "List weakly dominated strategies");
  add_game(dominated);
  bind(dominated, Dominated);

  auto* random_check =
      app.add_subcommand("random-check", "Cross-check certification on random games");
  random_check->add_option("--seed", options.seed, "Random seed");
  random_check->add_option("--games", options.games, "Number of games");
  random_check->add_option("--cap", options.cap, "Maximum supports per game");
  bind(random_check, RandomCheck);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  Result result;
  try {
    result = command(options);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  result.report["exit_code"] = result.code;
  result.report["timing"] = Json{
      {"elapsed_seconds", ElapsedSeconds(std::chrono::steady_clock::now() - start)}};
  if (options.format == "structured") {
    out << result.report.dump(2) << "\n";
  } else {
    RenderHuman(result.report, 0, out);
  }
  return result.code;
}

}  // namespace cpe::cli

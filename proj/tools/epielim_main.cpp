// Copyright 2026 The epielim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: eliminate, announce, verify, gen.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "epielim/epistemic.hpp"
#include "epielim/errors.hpp"
#include "epielim/game_io.hpp"
#include "epielim/operator.hpp"
#include "epielim/random_game.hpp"
#include "epielim/report.hpp"

namespace {

using epielim::ReportFormat;

const std::map<std::string, ReportFormat> kFormats = {
    {"text", ReportFormat::kText}, {"structured", ReportFormat::kStructured}};

const std::map<std::string, epielim::AnnouncementMode> kModes = {
    {"optimality", epielim::AnnouncementMode::kOptimality},
    {"rationality", epielim::AnnouncementMode::kRationality}};

int Emit(const epielim::RunReport& report, ReportFormat format) {
  std::cout << epielim::Render(report, format);
  return report.HasFailure() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated elimination of non-optimal strategies and its "
               "public-announcement counterpart"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string property_text = "sdg";
  std::string mode_text = "optimality";
  ReportFormat format = ReportFormat::kText;
  bool trace = false;
  bool oracle = false;
  bool figure1 = false;
  std::size_t random_games = 0;
  std::uint64_t seed = 1;
  std::size_t budget = epielim::kDefaultEnumerationBudget;
  epielim::RandomGameBounds bounds;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Report format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };
  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Random seed");
    cmd->add_option("--max-players", bounds.max_players, "Most players");
    cmd->add_option("--max-strategies", bounds.max_strategies,
                    "Most strategies per player");
    cmd->add_option("--min-payoff", bounds.min_payoff, "Smallest payoff");
    cmd->add_option("--max-payoff", bounds.max_payoff, "Largest payoff");
  };

  auto* eliminate = app.add_subcommand(
      "eliminate", "Iterate the elimination operator to its outcome");
  eliminate->add_option("game", input, "Game file ('-' for stdin)");
  eliminate->add_option("--property", property_text,
                        "sdl|sdg|wdl|wdg|brl|brg, or one per player "
                        "separated by commas");
  eliminate->add_flag("--trace", trace, "Print per-round removals");
  eliminate->add_flag("--oracle", oracle,
                      "Cross-check against the brute-force oracle");
  add_format(eliminate);

  auto* announce = app.add_subcommand(
      "announce", "Iterate public announcements on standard models");
  announce->add_option("game", input, "Game file ('-' for stdin)");
  announce->add_option("--property", property_text, "Optimality properties");
  announce->add_option("--mode", mode_text, "optimality|rationality")
      ->check(CLI::IsMember({"optimality", "rationality"}));
  announce->add_flag("--trace", trace, "Print per-round events");
  add_format(announce);

  auto* verify = app.add_subcommand(
      "verify", "Run the full battery of mechanical checks");
  verify->add_option("game", input, "Game file ('-' for stdin)");
  verify->add_option("--random", random_games,
                     "Check this many seeded random games instead");
  verify->add_flag("--figure1", figure1,
                   "Reproduce the two-state announcement counterexample");
  verify->add_option("--budget", budget, "Exhaustive enumeration budget");
  add_bounds(verify);
  add_format(verify);

  auto* gen = app.add_subcommand("gen", "Print a seeded random game file");
  add_bounds(gen);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      std::cout << epielim::SerializeGame(
          epielim::GenerateRandomGame(seed, bounds));
      return 0;
    }
    if (*verify) {
      epielim::VerifyRunOptions options;
      options.verify.enumeration_budget = budget;
      options.verify.seed = seed;
      options.figure1 = figure1;
      std::vector<epielim::StrategicGame> games;
      if (random_games > 0) {
        games = epielim::GeneratePopulation(seed, random_games, bounds);
      } else if (!figure1 || verify->count("game") > 0) {
        games.push_back(epielim::ParseGame(epielim::ReadDocument(input)));
      }
      return Emit(epielim::RunVerification(games, options), format);
    }

    const epielim::StrategicGame game =
        epielim::ParseGame(epielim::ReadDocument(input));
    const epielim::PropertyVector properties =
        epielim::ParsePropertyVector(property_text, game.num_players());
    if (*eliminate) {
      epielim::EliminationOptions options;
      options.trace = trace;
      options.oracle = oracle;
      return Emit(epielim::RunElimination(game, properties, options), format);
    }
    epielim::AnnouncementOptions options;
    options.trace = trace;
    return Emit(epielim::RunAnnouncements(game, kModes.at(mode_text),
                                          properties, options),
                format);
  } catch (const epielim::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const epielim::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

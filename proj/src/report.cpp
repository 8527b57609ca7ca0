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

#include "epielim/report.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace epielim {
namespace {

std::vector<std::size_t> Sizes(const Restriction& r) {
  std::vector<std::size_t> sizes;
  for (const auto& set : r.sets) sizes.push_back(set.size());
  return sizes;
}

std::string Join(const std::vector<std::size_t>& values, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += sep;
    out += std::to_string(values[k]);
  }
  return out;
}

// "game17.oracle.sdg,sdg" -> "oracle"
std::string Family(const std::string& check) {
  std::string rest = check;
  if (rest.compare(0, 4, "game") == 0) {
    const auto dot = rest.find('.');
    if (dot != std::string::npos) rest = rest.substr(dot + 1);
  }
  return rest.substr(0, rest.find('.'));
}

}  // namespace

bool RunReport::HasFailure() const {
  for (const auto& verdict : verdicts) {
    if (verdict.status == VerdictStatus::kFails) return true;
  }
  return false;
}

std::string RenderStructured(const RunReport& report) {
  std::ostringstream out;
  out << "command=" << report.command << '\n';
  if (!report.mode.empty()) out << "mode=" << report.mode << '\n';
  if (!report.properties.empty()) {
    out << "properties=" << report.properties << '\n';
  }
  if (report.games > 0) out << "games=" << report.games << '\n';
  for (std::size_t k = 0; k < report.round_sizes.size(); ++k) {
    out << "round=" << k << " sizes=" << Join(report.round_sizes[k], ",")
        << '\n';
  }
  if (report.closure_round) {
    out << "closure_round=" << *report.closure_round << '\n';
  }
  if (!report.outcome.empty()) out << "outcome=" << report.outcome << '\n';
  for (const auto& line : report.trace) out << "trace " << line << '\n';
  if (report.oracle_agrees) {
    out << "oracle=" << (*report.oracle_agrees ? "agree" : "disagree") << '\n';
  }
  for (const auto& v : report.verdicts) {
    out << "verdict=" << v.check << " status=" << ToString(v.status);
    if (!v.detail.empty()) out << " detail=" << v.detail;
    out << '\n';
  }
  out << "result=" << (report.HasFailure() ? "fail" : "pass") << '\n';
  return out.str();
}

std::string RenderText(const RunReport& report) {
  std::ostringstream out;
  out << report.command;
  if (!report.mode.empty()) out << " (" << report.mode << ")";
  if (!report.properties.empty()) out << " with " << report.properties;
  out << '\n';
  if (report.games > 0) out << "games checked: " << report.games << '\n';
  for (std::size_t k = 0; k < report.round_sizes.size(); ++k) {
    out << "  round " << k << ": " << Join(report.round_sizes[k], " x ")
        << '\n';
  }
  if (report.closure_round) {
    out << "closure round: " << *report.closure_round << '\n';
  }
  if (!report.outcome.empty()) out << "outcome: " << report.outcome << '\n';
  for (const auto& line : report.trace) out << "  " << line << '\n';
  if (report.oracle_agrees) {
    out << "oracle: " << (*report.oracle_agrees ? "agrees" : "DISAGREES")
        << '\n';
  }
  if (report.games > 0) {
    // Per-family tallies; failures are listed in full.
    std::map<std::string, std::map<VerdictStatus, std::size_t>> tally;
    for (const auto& v : report.verdicts) ++tally[Family(v.check)][v.status];
    for (const auto& [family, counts] : tally) {
      out << "  " << family << ":";
      for (const auto& [status, count] : counts) {
        out << ' ' << count << ' ' << ToString(status);
      }
      out << '\n';
    }
    for (const auto& v : report.verdicts) {
      if (v.status == VerdictStatus::kFails) {
        out << "FAIL " << v.check << ": " << v.detail << '\n';
      }
    }
  } else {
    for (const auto& v : report.verdicts) {
      out << "  " << ToString(v.status) << "  " << v.check;
      if (!v.detail.empty()) out << ": " << v.detail;
      out << '\n';
    }
  }
  out << (report.HasFailure() ? "FAILED" : "ok") << '\n';
  return out.str();
}

std::string Render(const RunReport& report, ReportFormat format) {
  return format == ReportFormat::kText ? RenderText(report)
                                       : RenderStructured(report);
}

RunReport RunElimination(const StrategicGame& game,
                         const PropertyVector& properties,
                         const EliminationOptions& options) {
  const EliminationTrace trace = IterateOperator(properties, game);
  RunReport report;
  report.command = "eliminate";
  report.properties = ToString(properties);
  for (std::size_t k = 0; k <= trace.closure_round; ++k) {
    report.round_sizes.push_back(Sizes(trace.rounds[k]));
  }
  report.closure_round = trace.closure_round;
  report.outcome = game.RestrictionName(trace.outcome());
  if (options.trace) {
    for (std::size_t k = 0; k <= trace.closure_round; ++k) {
      report.trace.push_back("round=" + std::to_string(k) + " restriction=" +
                             game.RestrictionName(trace.rounds[k]));
      for (const auto& removal : trace.removals[k]) {
        std::string line = "removed round=" + std::to_string(k) +
                           " player=" + game.player_name(removal.player) +
                           " strategy=" +
                           game.strategy_name(removal.player, removal.strategy);
        line += removal.dominator
                    ? " dominator=" + game.strategy_name(removal.player,
                                                         *removal.dominator)
                    : std::string(" reason=no-supporting-profile");
        report.trace.push_back(std::move(line));
      }
    }
  }
  report.verdicts.push_back(CheckTraceStructure(game, properties));
  if (options.oracle) {
    const Restriction oracle =
        OracleOutcome(properties, game, options.oracle_budget);
    report.oracle_agrees = oracle == trace.outcome();
    if (*report.oracle_agrees) {
      report.verdicts.push_back({"oracle", VerdictStatus::kHolds,
                                 game.RestrictionName(oracle)});
    } else {
      report.verdicts.push_back({"oracle", VerdictStatus::kFails,
                                 "oracle " + game.RestrictionName(oracle)});
    }
  }
  return report;
}

RunReport RunAnnouncements(const StrategicGame& game, AnnouncementMode mode,
                           const PropertyVector& properties,
                           const AnnouncementOptions& options) {
  const AnnouncementTrace trace = IterateAnnouncements(mode, properties, game);
  RunReport report;
  report.command = "announce";
  report.mode = ToString(mode);
  report.properties = ToString(properties);
  for (const auto& model : trace.models) {
    report.round_sizes.push_back(Sizes(model.restriction));
  }
  report.closure_round = trace.models.size() - 1;
  report.outcome = game.RestrictionName(trace.final_model().restriction);
  if (options.trace) {
    for (std::size_t k = 0; k < trace.rounds.size(); ++k) {
      report.trace.push_back(
          "round=" + std::to_string(k) +
          " states=" + std::to_string(trace.models[k].size()) +
          " restriction=" + game.RestrictionName(trace.models[k].restriction));
      for (PlayerId i = 0; i < game.num_players(); ++i) {
        report.trace.push_back(
            "event round=" + std::to_string(k) +
            " player=" + game.player_name(i) + " size=" +
            std::to_string(trace.rounds[k].events[i].size()) +
            " event=" + EventName(game, trace.rounds[k].events[i]));
      }
    }
  }

  if (mode == AnnouncementMode::kOptimality) {
    report.verdicts.push_back(CheckOptimalityAnnouncements(game, properties));
  } else if (IsAllGlobal(properties)) {
    report.verdicts.push_back(CheckRationalityAnnouncements(game, properties));
  } else if (IsAllLocal(properties)) {
    report.verdicts.push_back(CheckLocalDegeneracy(game, properties).verdict);
  } else {
    const Restriction outcome = IterateOperator(properties, game).outcome();
    report.verdicts.push_back(
        {"rationality_announcements." + ToString(properties),
         VerdictStatus::kNotApplicable,
         std::string("mixed local/global vector; outcome ") +
             (outcome == trace.final_model().restriction ? "agrees"
                                                         : "disagrees") +
             " with T^inf = " + game.RestrictionName(outcome)});
  }
  return report;
}

RunReport RunVerification(const std::vector<StrategicGame>& games,
                          const VerifyRunOptions& options) {
  RunReport report;
  report.command = "verify";
  report.games = games.size();
  // Games are independent; each worker fills its own slots, so the merged
  // order does not depend on scheduling.
  std::vector<std::vector<Verdict>> per_game(games.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < games.size(); k = next++) {
      VerifyOptions opts = options.verify;
      opts.seed = PopulationSeed(options.verify.seed, k);
      per_game[k] = VerifyGame(games[k], opts, "game" + std::to_string(k));
    }
  };
  const std::size_t workers = std::min<std::size_t>(
      std::max(1U, std::thread::hardware_concurrency()), games.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& verdicts : per_game) {
    report.verdicts.insert(report.verdicts.end(),
                           std::make_move_iterator(verdicts.begin()),
                           std::make_move_iterator(verdicts.end()));
  }
  if (options.figure1) report.verdicts.push_back(CheckDiagonalAnnouncement());
  return report;
}

}  // namespace epielim

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

#ifndef EPIELIM_REPORT_HPP_
#define EPIELIM_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "epielim/epistemic.hpp"
#include "epielim/game.hpp"
#include "epielim/operator.hpp"
#include "epielim/random_game.hpp"
#include "epielim/verify.hpp"

namespace epielim {

struct RunReport {
  std::string command;
  std::string mode;
  std::string properties;
  // Component sizes of every round.
  std::vector<std::vector<std::size_t>> round_sizes;
  std::optional<std::size_t> closure_round;
  std::string outcome;
  // Pre-rendered per-round detail (removals, events), only with --trace.
  std::vector<std::string> trace;
  std::vector<Verdict> verdicts;
  std::optional<bool> oracle_agrees;
  std::size_t games = 0;

  // True iff some verdict fails; the CLI exits nonzero exactly then.
  bool HasFailure() const;
};

enum class ReportFormat { kText, kStructured };

// `key=value` lines in a fixed order.
std::string RenderStructured(const RunReport& report);
// Human-readable summary of the same data.
std::string RenderText(const RunReport& report);
std::string Render(const RunReport& report, ReportFormat format);

struct EliminationOptions {
  bool trace = false;
  bool oracle = false;
  std::size_t oracle_budget = kDefaultOracleBudget;
};

RunReport RunElimination(const StrategicGame& game,
                         const PropertyVector& properties,
                         const EliminationOptions& options);

struct AnnouncementOptions {
  bool trace = false;
};

// Runs the announcement process and checks it against the operator outcome.
RunReport RunAnnouncements(const StrategicGame& game, AnnouncementMode mode,
                           const PropertyVector& properties,
                           const AnnouncementOptions& options);

struct VerifyRunOptions {
  VerifyOptions verify;
  bool figure1 = false;
};

// Full battery over the given games; game k is labelled "game<k>".
RunReport RunVerification(const std::vector<StrategicGame>& games,
                          const VerifyRunOptions& options);

}  // namespace epielim

#endif  // EPIELIM_REPORT_HPP_

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

#ifndef EPIELIM_VERIFY_HPP_
#define EPIELIM_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "epielim/game.hpp"
#include "epielim/operator.hpp"
#include "epielim/optimality.hpp"

namespace epielim {

enum class VerdictStatus { kHolds, kFails, kNotApplicable };

std::string ToString(VerdictStatus status);

// Outcome of one mechanical check. A failing verdict always carries a
// serialized counterexample in `detail`.
struct Verdict {
  std::string check;
  VerdictStatus status = VerdictStatus::kHolds;
  std::string detail;
};

inline constexpr std::size_t kDefaultEnumerationBudget = 100000;

// Effect of every vector of proper announcements on the standard model of
// every restriction equals the standard model of G_E. Not applicable when
// the number of (restriction, announcement vector) pairs exceeds budget.
Verdict CheckProperAnnouncementEffects(const StrategicGame& game,
                                       std::size_t budget);

// Restricting the standard model of G to the optimality events gives
// T_phi(G), for every restriction G. Falls back to the restrictions visited
// by the iteration when the exhaustive sweep exceeds budget.
Verdict CheckOptimalityEventsMatchOperator(const StrategicGame& game,
                                           const PropertyVector& properties,
                                           std::size_t budget);

// On standard knowledge models, G_{P_i(w)} = (G_1, ..., {w_i}, ..., G_n)
// for every restriction within budget (otherwise H only).
Verdict CheckRelevantSubgames(const StrategicGame& game, std::size_t budget);

// Iterated optimality announcements end in the standard model of T^inf.
Verdict CheckOptimalityAnnouncements(const StrategicGame& game,
                                     const PropertyVector& properties);

// Iterated rationality announcements end in the standard knowledge model of
// T^inf, possibility correspondences included.
Verdict CheckRationalityAnnouncements(const StrategicGame& game,
                                      const PropertyVector& properties);

// For a global property, <phi_i> = [[phi_i]] on standard knowledge models.
Verdict CheckRationalityEqualsOptimality(const StrategicGame& game,
                                         OptimalityProperty property,
                                         std::size_t budget);

struct DegeneracyResult {
  Verdict verdict;
  // The rationality outcome (always H) differs from T^inf.
  bool differs_from_operator = false;
};

// For an all-local vector every rationality event is Omega and the
// announcement trace has a single model.
DegeneracyResult CheckLocalDegeneracy(const StrategicGame& game,
                                      const PropertyVector& properties);

// Global properties satisfy assumption A for every player; local ones fail
// it for some player. Not applicable when every |H_i| = 1.
Verdict CheckAssumptionA(const StrategicGame& game, OptimalityProperty property,
                         std::size_t budget = kDefaultAssumptionABudget);

Verdict CheckOracleAgreement(const StrategicGame& game,
                             const PropertyVector& properties,
                             std::size_t budget = kDefaultOracleBudget);

// Contraction, fixpoint, strictly decreasing rounds, the round bound and
// the knowledge axioms of every standard knowledge model along the trace.
Verdict CheckTraceStructure(const StrategicGame& game,
                            const PropertyVector& properties);

// The fixed two-state model over U/D x L/R: announcing ({w_ul}, {w_dr})
// has an empty effect while G_E = ({U}, {R}).
Verdict CheckDiagonalAnnouncement();

// Up to `count` distinct all-global, non-homogeneous vectors, chosen by a
// seeded shuffle.
std::vector<PropertyVector> MixedGlobalVectors(std::size_t players,
                                               std::size_t count,
                                               std::uint64_t seed);

struct VerifyOptions {
  std::size_t enumeration_budget = kDefaultEnumerationBudget;
  std::size_t mixed_global_vectors = 10;
  std::uint64_t seed = 0;
};

// The whole battery on one game. Check names are prefixed with `label`.
std::vector<Verdict> VerifyGame(const StrategicGame& game,
                                const VerifyOptions& options,
                                const std::string& label);

}  // namespace epielim

#endif  // EPIELIM_VERIFY_HPP_

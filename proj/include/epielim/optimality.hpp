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

#ifndef EPIELIM_OPTIMALITY_HPP_
#define EPIELIM_OPTIMALITY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epielim/game.hpp"

namespace epielim {

enum class PropertyKind { kStrictDominance, kWeakDominance, kBestResponse };

// Local properties compare s_i only with strategies in G_i; global ones with
// every strategy of the initial game H_i.
enum class PropertyScope { kLocal, kGlobal };

struct OptimalityProperty {
  PropertyKind kind = PropertyKind::kStrictDominance;
  PropertyScope scope = PropertyScope::kLocal;

  friend bool operator==(const OptimalityProperty&,
                         const OptimalityProperty&) = default;
};

inline constexpr OptimalityProperty kSdLocal{PropertyKind::kStrictDominance,
                                             PropertyScope::kLocal};
inline constexpr OptimalityProperty kSdGlobal{PropertyKind::kStrictDominance,
                                              PropertyScope::kGlobal};
inline constexpr OptimalityProperty kWdLocal{PropertyKind::kWeakDominance,
                                             PropertyScope::kLocal};
inline constexpr OptimalityProperty kWdGlobal{PropertyKind::kWeakDominance,
                                              PropertyScope::kGlobal};
inline constexpr OptimalityProperty kBrLocal{PropertyKind::kBestResponse,
                                             PropertyScope::kLocal};
inline constexpr OptimalityProperty kBrGlobal{PropertyKind::kBestResponse,
                                              PropertyScope::kGlobal};

inline constexpr OptimalityProperty kAllProperties[] = {
    kSdLocal, kSdGlobal, kWdLocal, kWdGlobal, kBrLocal, kBrGlobal};

// "sdl", "sdg", "wdl", "wdg", "brl", "brg".
std::string ToString(OptimalityProperty property);
// Inverse of ToString; throws InputError.
OptimalityProperty ParseProperty(std::string_view text);

// dominator strictly dominates dominated on r: better against every
// s_{-i} in r_{-i}. Both strategies range over H_i. Vacuously true when
// r_{-i} is empty.
bool StrictlyDominates(const StrategicGame& game, PlayerId i,
                       StrategyId dominator, StrategyId dominated,
                       const Restriction& r);

// Never worse against r_{-i} and better against at least one profile.
// Always false when r_{-i} is empty.
bool WeaklyDominates(const StrategicGame& game, PlayerId i,
                     StrategyId dominator, StrategyId dominated,
                     const Restriction& r);

// s is a best response among `comparison` to the opponent profile whose
// flat base index (player i at strategy 0) is opponent_base.
bool IsBestResponse(const StrategicGame& game, PlayerId i, StrategyId s,
                    ProfileIndex opponent_base, const StrategySet& comparison);

// Same, with the opponent profile given as a full profile (the entry for
// player i is ignored). Throws InputError on out-of-range entries.
bool IsBestResponse(const StrategicGame& game, PlayerId i, StrategyId s,
                    const std::vector<StrategyId>& profile,
                    const StrategySet& comparison);

// The strategies s_i is compared against: G_i for local, H_i for global.
StrategySet ComparisonSet(const StrategicGame& game, OptimalityProperty property,
                          PlayerId i, const Restriction& r);

// phi_i(s, r). Throws PreconditionError unless s is in r_i.
bool PropertyHolds(OptimalityProperty property, const StrategicGame& game,
                   PlayerId i, StrategyId s, const Restriction& r);

// For a dominance property, the first strategy (in H_i order) of the
// comparison set that dominates s on r; nullopt when none does or the
// property is best response.
std::optional<StrategyId> FirstDominator(OptimalityProperty property,
                                         const StrategicGame& game, PlayerId i,
                                         StrategyId s, const Restriction& r);

// Witness of a violation of assumption A: phi_i(strategy, with_own) differs
// from phi_i(strategy, with_alternative); the two restrictions agree off i.
struct AssumptionAWitness {
  StrategyId strategy = 0;
  Restriction with_own;
  Restriction with_alternative;
  bool holds_with_own = false;
};

struct AssumptionAResult {
  bool holds = true;
  std::optional<AssumptionAWitness> witness;
};

inline constexpr std::size_t kDefaultAssumptionABudget = std::size_t{1} << 22;

// Exhaustively checks that phi_i(s, (G_i, G_-i)) and phi_i(s, (G'_i, G_-i))
// agree for every restriction, every G'_i and every s in both G_i and G'_i.
// Throws ResourceError when prod_j 2^|H_j| exceeds budget.
AssumptionAResult SatisfiesAssumptionA(
    OptimalityProperty property, const StrategicGame& game, PlayerId i,
    std::size_t budget = kDefaultAssumptionABudget);

}  // namespace epielim

#endif  // EPIELIM_OPTIMALITY_HPP_

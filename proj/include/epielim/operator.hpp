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

#ifndef EPIELIM_OPERATOR_HPP_
#define EPIELIM_OPERATOR_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epielim/game.hpp"
#include "epielim/optimality.hpp"

namespace epielim {

// One optimality property per player; players may use different ones.
using PropertyVector = std::vector<OptimalityProperty>;

PropertyVector Homogeneous(OptimalityProperty property, std::size_t players);

// Accepts a single property name ("sdg") applied to every player, or a
// comma-separated list with one entry per player ("sdg,brg,wdg").
PropertyVector ParsePropertyVector(std::string_view text, std::size_t players);
std::string ToString(const PropertyVector& properties);
bool IsAllGlobal(const PropertyVector& properties);
bool IsAllLocal(const PropertyVector& properties);

// One step of T_phi: keeps, for every player simultaneously, the strategies
// of G_i that are phi_i-optimal in G. The result is always below G.
Restriction ApplyOperator(const PropertyVector& properties,
                          const StrategicGame& game, const Restriction& r);

struct Removal {
  PlayerId player = 0;
  StrategyId strategy = 0;
  // Dominance properties: first dominator in H_i order. Best response:
  // empty, meaning no supporting opponent profile exists.
  std::optional<StrategyId> dominator;

  friend bool operator==(const Removal&, const Removal&) = default;
};

struct EliminationTrace {
  // T^0 = H, T^1, ..., T^a, T^{a+1}; the last two are equal.
  std::vector<Restriction> rounds;
  // removals[k] lists what T maps away from rounds[k].
  std::vector<std::vector<Removal>> removals;
  // Least a with T^{a+1} = T^a.
  std::size_t closure_round = 0;

  const Restriction& outcome() const { return rounds[closure_round]; }
};

// Iterates T_phi from the top of the lattice until it stabilises. Finite
// games always close after at most sum_i |H_i| rounds.
EliminationTrace IterateOperator(const PropertyVector& properties,
                                 const StrategicGame& game);

inline constexpr std::size_t kDefaultOracleBudget = 100000;

// Independent recomputation of the outcome of T_phi, for cross-checking.
// Works from the exact payoffs and an explicit list of joint profiles and
// shares no code with the dominance routines. Throws ResourceError when the
// game has more than budget joint profiles.
Restriction OracleOutcome(const PropertyVector& properties,
                          const StrategicGame& game,
                          std::size_t budget = kDefaultOracleBudget);

}  // namespace epielim

#endif  // EPIELIM_OPERATOR_HPP_

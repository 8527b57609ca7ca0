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

#ifndef EPIELIM_RANDOM_GAME_HPP_
#define EPIELIM_RANDOM_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "epielim/game.hpp"

namespace epielim {

struct RandomGameBounds {
  std::size_t min_players = 2;
  std::size_t max_players = 3;
  std::size_t min_strategies = 2;
  std::size_t max_strategies = 4;
  // Small integer payoffs make ties, and so weak dominance, common.
  int min_payoff = -5;
  int max_payoff = 5;

  // Throws InputError on empty ranges or fewer than two players.
  void Validate() const;
};

// Deterministic in (seed, bounds). Players are P1..Pn; player k's
// strategies are <letter k>1, <letter k>2, ...
StrategicGame GenerateRandomGame(std::uint64_t seed,
                                 const RandomGameBounds& bounds);

// Game k of the population is GenerateRandomGame(PopulationSeed(seed, k)).
std::uint64_t PopulationSeed(std::uint64_t seed, std::size_t k);
std::vector<StrategicGame> GeneratePopulation(std::uint64_t seed,
                                              std::size_t count,
                                              const RandomGameBounds& bounds);

}  // namespace epielim

#endif  // EPIELIM_RANDOM_GAME_HPP_

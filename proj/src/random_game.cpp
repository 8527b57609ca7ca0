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

#include "epielim/random_game.hpp"

#include <random>
#include <string>

#include "epielim/errors.hpp"

namespace epielim {

void RandomGameBounds::Validate() const {
  if (min_players < 2) throw InputError("games need at least two players");
  if (min_players > max_players) throw InputError("empty player range");
  if (max_players > 26) throw InputError("at most 26 players");
  if (min_strategies < 1) throw InputError("strategy sets must be non-empty");
  if (min_strategies > max_strategies) {
    throw InputError("empty strategy range");
  }
  if (min_payoff > max_payoff) throw InputError("empty payoff range");
}

StrategicGame GenerateRandomGame(std::uint64_t seed,
                                 const RandomGameBounds& bounds) {
  bounds.Validate();
  std::mt19937_64 rng(seed);
  auto draw = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t n = draw(bounds.min_players, bounds.max_players);
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> strategies(n);
  std::size_t profiles = 1;
  for (std::size_t i = 0; i < n; ++i) {
    players.push_back("P" + std::to_string(i + 1));
    const std::size_t count = draw(bounds.min_strategies, bounds.max_strategies);
    for (std::size_t s = 0; s < count; ++s) {
      strategies[i].push_back(std::string(1, static_cast<char>('a' + i)) +
                              std::to_string(s + 1));
    }
    profiles *= count;
  }
  std::uniform_int_distribution<int> payoff(bounds.min_payoff,
                                            bounds.max_payoff);
  std::vector<std::vector<Rational>> payoffs(n);
  for (std::size_t k = 0; k < profiles; ++k) {
    for (std::size_t i = 0; i < n; ++i) payoffs[i].emplace_back(payoff(rng));
  }
  return StrategicGame(std::move(players), std::move(strategies),
                       std::move(payoffs));
}

std::uint64_t PopulationSeed(std::uint64_t seed, std::size_t k) {
  // splitmix64 step, so neighbouring seeds give unrelated streams.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<StrategicGame> GeneratePopulation(std::uint64_t seed,
                                              std::size_t count,
                                              const RandomGameBounds& bounds) {
  std::vector<StrategicGame> games;
  games.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    games.push_back(GenerateRandomGame(PopulationSeed(seed, k), bounds));
  }
  return games;
}

}  // namespace epielim

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

#ifndef EPIELIM_TESTS_TEST_UTIL_HPP_
#define EPIELIM_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "epielim/game.hpp"
#include "epielim/operator.hpp"
#include "epielim/optimality.hpp"
#include "epielim/random_game.hpp"

namespace epielim::testing {

// Players are P1..Pn; rows[k] holds the n payoffs of joint profile k.
inline StrategicGame MakeGame(std::vector<std::vector<std::string>> strategies,
                              const std::vector<std::vector<int>>& rows) {
  std::vector<std::string> players;
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    players.push_back("P" + std::to_string(i + 1));
  }
  std::vector<std::vector<Rational>> payoffs(strategies.size());
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) payoffs[i].emplace_back(row[i]);
  }
  return StrategicGame(std::move(players), std::move(strategies),
                       std::move(payoffs));
}

// C/C (3,3), C/D (0,4), D/C (4,0), D/D (1,1).
inline StrategicGame PrisonersDilemma() {
  return MakeGame({{"C", "D"}, {"C", "D"}},
                  {{3, 3}, {0, 4}, {4, 0}, {1, 1}});
}

inline StrategicGame MatchingPennies() {
  return MakeGame({{"H", "T"}, {"H", "T"}},
                  {{1, -1}, {-1, 1}, {-1, 1}, {1, -1}});
}

inline Restriction Named(const StrategicGame& game,
                         const std::vector<std::vector<std::string>>& names) {
  Restriction r;
  r.sets.resize(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (const auto& name : names[i]) {
      r[i].push_back(game.StrategyIndex(i, name));
    }
    std::sort(r[i].begin(), r[i].end());
  }
  return r;
}

// Enumerates the opponent profiles of r_{-i} as full profiles (slot i = 0),
// independently of ForEachOpponentProfile.
inline std::vector<std::vector<StrategyId>> BruteOpponents(
    const StrategicGame& game, const Restriction& r, PlayerId i) {
  std::vector<std::vector<StrategyId>> out = {{}};
  for (PlayerId j = 0; j < game.num_players(); ++j) {
    std::vector<std::vector<StrategyId>> next;
    const StrategySet choices = j == i ? StrategySet{0} : r[j];
    for (const auto& prefix : out) {
      for (StrategyId s : choices) {
        auto extended = prefix;
        extended.push_back(s);
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline const Rational& BrutePayoff(const StrategicGame& game, PlayerId i,
                                   std::vector<StrategyId> profile,
                                   StrategyId s) {
  profile[i] = s;
  return game.payoff(i, game.Encode(profile));
}

inline bool BruteStrict(const StrategicGame& game, PlayerId i, StrategyId a,
                        StrategyId b, const Restriction& r) {
  for (const auto& o : BruteOpponents(game, r, i)) {
    if (!(BrutePayoff(game, i, o, a) > BrutePayoff(game, i, o, b))) {
      return false;
    }
  }
  return true;
}

inline bool BruteWeak(const StrategicGame& game, PlayerId i, StrategyId a,
                      StrategyId b, const Restriction& r) {
  bool better = false;
  for (const auto& o : BruteOpponents(game, r, i)) {
    const auto& x = BrutePayoff(game, i, o, a);
    const auto& y = BrutePayoff(game, i, o, b);
    if (x < y) return false;
    if (x > y) better = true;
  }
  return better;
}

// phi_i(s, r) straight from the definitions. Dominators range over r_i
// (local) or H_i (global) and must differ from s.
inline bool BruteProperty(OptimalityProperty property, const StrategicGame& game,
                          PlayerId i, StrategyId s, const Restriction& r) {
  std::vector<StrategyId> comparison;
  if (property.scope == PropertyScope::kLocal) {
    comparison = r[i];
  } else {
    for (StrategyId t = 0; t < game.num_strategies(i); ++t) {
      comparison.push_back(t);
    }
  }
  if (property.kind == PropertyKind::kBestResponse) {
    for (const auto& o : BruteOpponents(game, r, i)) {
      bool best = true;
      for (StrategyId t : comparison) {
        if (BrutePayoff(game, i, o, t) > BrutePayoff(game, i, o, s)) {
          best = false;
        }
      }
      if (best) return true;
    }
    return false;
  }
  for (StrategyId t : comparison) {
    if (t == s) continue;
    const bool dominated = property.kind == PropertyKind::kStrictDominance
                               ? BruteStrict(game, i, t, s, r)
                               : BruteWeak(game, i, t, s, r);
    if (dominated) return false;
  }
  return true;
}

inline std::vector<Restriction> AllRestrictions(const StrategicGame& game) {
  std::vector<Restriction> out = {Restriction{}};
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    std::vector<Restriction> next;
    const std::size_t h = game.num_strategies(i);
    for (const auto& prefix : out) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << h); ++mask) {
        Restriction r = prefix;
        r.sets.emplace_back();
        for (StrategyId s = 0; s < h; ++s) {
          if (mask >> s & 1U) r.sets.back().push_back(s);
        }
        next.push_back(std::move(r));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<StrategicGame> SmallPopulation(std::size_t count,
                                                  std::uint64_t seed) {
  RandomGameBounds bounds;
  bounds.max_players = 3;
  bounds.max_strategies = 3;
  return GeneratePopulation(seed, count, bounds);
}

}  // namespace epielim::testing

#endif  // EPIELIM_TESTS_TEST_UTIL_HPP_

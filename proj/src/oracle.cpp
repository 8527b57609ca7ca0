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

// Brute-force recomputation of the elimination outcome. Deliberately naive:
// every round rebuilds the opponent profile lists from the explicit table of
// joint strategies and evaluates the quantifiers on exact payoffs.

#include <map>
#include <string>
#include <vector>

#include "epielim/errors.hpp"
#include "epielim/operator.hpp"

namespace epielim {
namespace {

using Profile = std::vector<StrategyId>;
using Alive = std::vector<std::vector<bool>>;

struct Table {
  std::map<Profile, std::vector<Rational>> payoffs;
};

const Rational& Payoff(const Table& table, PlayerId i, Profile profile,
                       StrategyId s) {
  profile[i] = s;
  return table.payoffs.at(profile)[i];
}

// Opponent profiles in the current restriction, with slot i set to 0.
std::vector<Profile> Opponents(const Table& table, const Alive& alive,
                               PlayerId i) {
  std::vector<Profile> out;
  for (const auto& [profile, unused] : table.payoffs) {
    if (profile[i] != 0) continue;
    bool inside = true;
    for (PlayerId j = 0; j < profile.size(); ++j) {
      if (j != i && !alive[j][profile[j]]) inside = false;
    }
    if (inside) out.push_back(profile);
  }
  return out;
}

bool Optimal(OptimalityProperty property, const Table& table,
             const Alive& alive, PlayerId i, StrategyId s) {
  const std::vector<Profile> opponents = Opponents(table, alive, i);
  std::vector<StrategyId> rivals;
  for (StrategyId t = 0; t < alive[i].size(); ++t) {
    if (property.scope == PropertyScope::kGlobal || alive[i][t]) {
      rivals.push_back(t);
    }
  }
  switch (property.kind) {
    case PropertyKind::kStrictDominance:
      for (StrategyId t : rivals) {
        if (t == s) continue;
        bool beats_everywhere = true;
        for (const auto& o : opponents) {
          if (!(Payoff(table, i, o, t) > Payoff(table, i, o, s))) {
            beats_everywhere = false;
          }
        }
        if (beats_everywhere) return false;
      }
      return true;
    case PropertyKind::kWeakDominance:
      for (StrategyId t : rivals) {
        if (t == s) continue;
        bool never_worse = true;
        bool sometimes_better = false;
        for (const auto& o : opponents) {
          const Rational& a = Payoff(table, i, o, t);
          const Rational& b = Payoff(table, i, o, s);
          if (a < b) never_worse = false;
          if (a > b) sometimes_better = true;
        }
        if (never_worse && sometimes_better) return false;
      }
      return true;
    case PropertyKind::kBestResponse:
      for (const auto& o : opponents) {
        bool best = true;
        for (StrategyId t : rivals) {
          if (Payoff(table, i, o, t) > Payoff(table, i, o, s)) best = false;
        }
        if (best) return true;
      }
      return false;
  }
  return false;
}

}  // namespace

Restriction OracleOutcome(const PropertyVector& properties,
                          const StrategicGame& game, std::size_t budget) {
  const std::size_t n = game.num_players();
  if (properties.size() != n) {
    throw InputError("property vector does not match the number of players");
  }
  if (game.num_profiles() > budget) {
    throw ResourceError("oracle needs " + std::to_string(game.num_profiles()) +
                        " joint strategies, budget is " +
                        std::to_string(budget));
  }
  Table table;
  for (ProfileIndex k = 0; k < game.num_profiles(); ++k) {
    std::vector<Rational> values;
    for (PlayerId i = 0; i < n; ++i) values.push_back(game.payoff(i, k));
    table.payoffs.emplace(game.Decode(k), std::move(values));
  }

  Alive alive(n);
  for (PlayerId i = 0; i < n; ++i) alive[i].assign(game.num_strategies(i), true);
  while (true) {
    Alive next = alive;
    for (PlayerId i = 0; i < n; ++i) {
      for (StrategyId s = 0; s < alive[i].size(); ++s) {
        if (alive[i][s] && !Optimal(properties[i], table, alive, i, s)) {
          next[i][s] = false;
        }
      }
    }
    if (next == alive) break;
    alive = std::move(next);
  }

  Restriction out;
  out.sets.resize(n);
  for (PlayerId i = 0; i < n; ++i) {
    for (StrategyId s = 0; s < alive[i].size(); ++s) {
      if (alive[i][s]) out[i].push_back(s);
    }
  }
  return out;
}

}  // namespace epielim

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

#include "epielim/operator.hpp"

#include <algorithm>
#include <string>

#include "epielim/errors.hpp"

namespace epielim {

PropertyVector Homogeneous(OptimalityProperty property, std::size_t players) {
  return PropertyVector(players, property);
}

PropertyVector ParsePropertyVector(std::string_view text,
                                   std::size_t players) {
  PropertyVector out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(ParseProperty(text.substr(
        start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() == 1) return Homogeneous(out.front(), players);
  if (out.size() != players) {
    throw InputError("property list has " + std::to_string(out.size()) +
                     " entries for " + std::to_string(players) + " players");
  }
  return out;
}

std::string ToString(const PropertyVector& properties) {
  std::string out;
  for (std::size_t i = 0; i < properties.size(); ++i) {
    if (i > 0) out += ',';
    out += ToString(properties[i]);
  }
  return out;
}

bool IsAllGlobal(const PropertyVector& properties) {
  return std::all_of(properties.begin(), properties.end(), [](auto p) {
    return p.scope == PropertyScope::kGlobal;
  });
}

bool IsAllLocal(const PropertyVector& properties) {
  return std::all_of(properties.begin(), properties.end(), [](auto p) {
    return p.scope == PropertyScope::kLocal;
  });
}

namespace {

void CheckArity(const PropertyVector& properties, const StrategicGame& game) {
  if (properties.size() != game.num_players()) {
    throw InputError("property vector has " +
                     std::to_string(properties.size()) + " entries for " +
                     std::to_string(game.num_players()) + " players");
  }
}

// T_phi(r) together with what it removed.
Restriction Step(const PropertyVector& properties, const StrategicGame& game,
                 const Restriction& r, std::vector<Removal>* removals) {
  Restriction next;
  next.sets.resize(game.num_players());
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    for (StrategyId s : r[i]) {
      if (PropertyHolds(properties[i], game, i, s, r)) {
        next[i].push_back(s);
      } else if (removals != nullptr) {
        removals->push_back(
            {i, s, FirstDominator(properties[i], game, i, s, r)});
      }
    }
  }
  return next;
}

}  // namespace

Restriction ApplyOperator(const PropertyVector& properties,
                          const StrategicGame& game, const Restriction& r) {
  CheckArity(properties, game);
  game.CheckRestriction(r);
  return Step(properties, game, r, nullptr);
}

EliminationTrace IterateOperator(const PropertyVector& properties,
                                 const StrategicGame& game) {
  CheckArity(properties, game);
  EliminationTrace trace;
  trace.rounds.push_back(game.FullRestriction());
  while (true) {
    std::vector<Removal> removed;
    Restriction next = Step(properties, game, trace.rounds.back(), &removed);
    trace.removals.push_back(std::move(removed));
    const bool fixpoint = next == trace.rounds.back();
    trace.rounds.push_back(std::move(next));
    if (fixpoint) break;
  }
  trace.closure_round = trace.rounds.size() - 2;
  return trace;
}

}  // namespace epielim

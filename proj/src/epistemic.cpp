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

#include "epielim/epistemic.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <string>
#include <utility>

#include "epielim/errors.hpp"

namespace epielim {
namespace {

bool IsEventOf(const EpistemicModel& model, const Event& event) {
  return std::includes(model.states.begin(), model.states.end(), event.begin(),
                       event.end()) &&
         std::adjacent_find(event.begin(), event.end(),
                            std::greater_equal<>()) == event.end();
}

void CheckEvents(const EpistemicModel& model,
                 const AnnouncementVector& events) {
  if (events.size() != model.restriction.num_players()) {
    throw PreconditionError("announcement vector needs one event per player");
  }
  for (const auto& event : events) {
    if (!IsEventOf(model, event)) {
      throw PreconditionError("announcement is not an event of the model");
    }
  }
}

Event StandardStates(const StrategicGame& game, const Restriction& r) {
  Event states;
  states.reserve(r.NumProfiles());
  ForEachProfile(game, r, [&](ProfileIndex k) { states.push_back(k); });
  return states;
}

}  // namespace

std::optional<std::size_t> EpistemicModel::Position(StateId state) const {
  const auto it = std::lower_bound(states.begin(), states.end(), state);
  if (it == states.end() || *it != state) return std::nullopt;
  return static_cast<std::size_t>(it - states.begin());
}

StrategyId EpistemicModel::StrategyOf(PlayerId i, StateId state) const {
  const auto k = Position(state);
  if (!k) throw PreconditionError("state is not in the model");
  return strategies[*k].at(i);
}

const Event& EpistemicModel::Cell(PlayerId i, StateId state) const {
  if (!possibility) {
    throw PreconditionError("model has no possibility correspondences");
  }
  const auto k = Position(state);
  if (!k) throw PreconditionError("state is not in the model");
  return possibility->at(i)[*k];
}

bool SameStructure(const EpistemicModel& a, const EpistemicModel& b) {
  return a.states == b.states && a.strategies == b.strategies &&
         a.possibility == b.possibility;
}

void ValidateModel(const StrategicGame& game, const EpistemicModel& model) {
  game.CheckRestriction(model.restriction);
  const std::size_t n = game.num_players();
  if (std::adjacent_find(model.states.begin(), model.states.end(),
                         std::greater_equal<>()) != model.states.end()) {
    throw InputError("model states must be strictly ascending");
  }
  if (model.strategies.size() != model.states.size()) {
    throw InputError("every state needs a strategy assignment");
  }
  for (std::size_t k = 0; k < model.states.size(); ++k) {
    if (model.strategies[k].size() != n) {
      throw InputError("strategy assignment of " +
                       StateName(game, model.states[k]) + " has wrong length");
    }
    for (PlayerId i = 0; i < n; ++i) {
      if (!model.restriction.Contains(i, model.strategies[k][i])) {
        throw InputError("s_" + game.player_name(i) + " maps " +
                         StateName(game, model.states[k]) +
                         " outside the restriction");
      }
    }
  }
  if (!model.possibility) return;
  if (model.possibility->size() != n) {
    throw InputError("knowledge model needs one correspondence per player");
  }
  for (PlayerId i = 0; i < n; ++i) {
    if ((*model.possibility)[i].size() != model.states.size()) {
      throw InputError("possibility correspondence of " + game.player_name(i) +
                       " does not cover every state");
    }
    if (const auto violation =
            CheckKnowledgeAxioms(model.states, (*model.possibility)[i])) {
      throw InputError("possibility correspondence of " + game.player_name(i) +
                       " violates knowledge axiom " +
                       std::to_string(violation->axiom) + " at " +
                       StateName(game, violation->state));
    }
  }
}

EpistemicModel MakeModel(const StrategicGame& game, Restriction restriction,
                         Event states,
                         std::vector<std::vector<StrategyId>> strategies,
                         std::optional<std::vector<PossibilityMap>> possibility) {
  EpistemicModel model{std::move(restriction), std::move(states),
                       std::move(strategies), std::move(possibility)};
  ValidateModel(game, model);
  return model;
}

EpistemicModel StandardModel(const StrategicGame& game, const Restriction& r) {
  game.CheckRestriction(r);
  EpistemicModel model;
  model.restriction = r;
  model.states = StandardStates(game, r);
  model.strategies.reserve(model.states.size());
  for (StateId state : model.states) {
    model.strategies.push_back(game.Decode(state));
  }
  return model;
}

bool IsStandardModel(const StrategicGame& game, const EpistemicModel& model) {
  if (model.restriction.num_players() != game.num_players()) return false;
  if (model.states != StandardStates(game, model.restriction)) return false;
  for (std::size_t k = 0; k < model.states.size(); ++k) {
    if (model.strategies[k] != game.Decode(model.states[k])) return false;
  }
  return true;
}

std::vector<PossibilityMap> StandardPossibility(const EpistemicModel& model) {
  const std::size_t n = model.restriction.num_players();
  std::vector<PossibilityMap> possibility(n);
  for (PlayerId i = 0; i < n; ++i) {
    std::map<StrategyId, Event> same_choice;
    for (std::size_t k = 0; k < model.size(); ++k) {
      same_choice[model.strategies[k][i]].push_back(model.states[k]);
    }
    possibility[i].reserve(model.size());
    for (std::size_t k = 0; k < model.size(); ++k) {
      possibility[i].push_back(same_choice[model.strategies[k][i]]);
    }
  }
  return possibility;
}

EpistemicModel StandardKnowledgeModel(const StrategicGame& game,
                                      const Restriction& r) {
  EpistemicModel model = StandardModel(game, r);
  model.possibility = StandardPossibility(model);
  return model;
}

AnnouncementVector TrivialAnnouncements(const EpistemicModel& model) {
  return AnnouncementVector(model.restriction.num_players(), model.states);
}

Restriction RestrictionOf(const EpistemicModel& model,
                          const AnnouncementVector& events) {
  CheckEvents(model, events);
  Restriction out;
  out.sets.resize(events.size());
  for (PlayerId i = 0; i < events.size(); ++i) {
    for (StateId state : events[i]) out[i].push_back(model.StrategyOf(i, state));
    std::sort(out[i].begin(), out[i].end());
    out[i].erase(std::unique(out[i].begin(), out[i].end()), out[i].end());
  }
  return out;
}

EpistemicModel AnnouncementEffect(const EpistemicModel& model,
                                  const AnnouncementVector& events) {
  CheckEvents(model, events);
  Event survivors = model.states;
  for (const auto& event : events) {
    Event kept;
    std::set_intersection(survivors.begin(), survivors.end(), event.begin(),
                          event.end(), std::back_inserter(kept));
    survivors = std::move(kept);
  }

  EpistemicModel effect;
  effect.restriction = model.restriction;
  effect.states = survivors;
  std::vector<std::size_t> positions;
  for (StateId state : survivors) {
    positions.push_back(*model.Position(state));
    effect.strategies.push_back(model.strategies[positions.back()]);
  }
  if (model.possibility) {
    effect.possibility.emplace();
    for (const auto& cells : *model.possibility) {
      PossibilityMap restricted;
      for (std::size_t k : positions) {
        Event cell;
        std::set_intersection(cells[k].begin(), cells[k].end(),
                              survivors.begin(), survivors.end(),
                              std::back_inserter(cell));
        restricted.push_back(std::move(cell));
      }
      effect.possibility->push_back(std::move(restricted));
    }
  }
  return effect;
}

std::optional<StrategySet> ProperAnnouncement(const StrategicGame& game,
                                              const EpistemicModel& model,
                                              PlayerId i, const Event& event) {
  if (!IsStandardModel(game, model)) {
    throw PreconditionError("proper announcements live on standard models");
  }
  game.CheckPlayer(i);
  if (!IsEventOf(model, event)) {
    throw PreconditionError("announcement is not an event of the model");
  }
  StrategySet own;
  for (StateId state : event) own.push_back(game.Component(state, i));
  std::sort(own.begin(), own.end());
  own.erase(std::unique(own.begin(), own.end()), own.end());

  Restriction shape = model.restriction;
  shape[i] = own;
  if (StandardStates(game, shape) != event) return std::nullopt;
  return own;
}

Event OptimalityEvent(OptimalityProperty property, const EpistemicModel& model,
                      const StrategicGame& game, PlayerId i) {
  // phi_i(s_i(w), G) depends on w only through s_i(w).
  std::map<StrategyId, bool> optimal;
  Event event;
  for (std::size_t k = 0; k < model.size(); ++k) {
    const StrategyId s = model.strategies[k][i];
    auto it = optimal.find(s);
    if (it == optimal.end()) {
      it = optimal
               .emplace(s, PropertyHolds(property, game, i, s,
                                         model.restriction))
               .first;
    }
    if (it->second) event.push_back(model.states[k]);
  }
  return event;
}

Restriction RelevantSubgame(const EpistemicModel& model, PlayerId i,
                            StateId state) {
  const Event& cell = model.Cell(i, state);
  return RestrictionOf(
      model, AnnouncementVector(model.restriction.num_players(), cell));
}

Event RationalityEvent(OptimalityProperty property, const EpistemicModel& model,
                       const StrategicGame& game, PlayerId i) {
  if (!model.possibility) {
    throw PreconditionError("rationality needs a knowledge model");
  }
  Event event;
  for (std::size_t k = 0; k < model.size(); ++k) {
    const Restriction known = RelevantSubgame(model, i, model.states[k]);
    if (PropertyHolds(property, game, i, model.strategies[k][i], known)) {
      event.push_back(model.states[k]);
    }
  }
  return event;
}

std::optional<AxiomViolation> CheckKnowledgeAxioms(const Event& states,
                                                   const PossibilityMap& cells) {
  if (cells.size() != states.size()) {
    throw InputError("possibility correspondence does not cover every state");
  }
  auto position = [&](StateId s) -> std::optional<std::size_t> {
    const auto it = std::lower_bound(states.begin(), states.end(), s);
    if (it == states.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - states.begin());
  };
  for (std::size_t k = 0; k < states.size(); ++k) {
    const Event& cell = cells[k];
    for (StateId other : cell) {
      if (!position(other)) return AxiomViolation{0, states[k], other};
    }
    if (cell.empty()) return AxiomViolation{1, states[k], states[k]};
    for (StateId other : cell) {
      if (cells[*position(other)] != cell) {
        return AxiomViolation{2, states[k], other};
      }
    }
    if (!std::binary_search(cell.begin(), cell.end(), states[k])) {
      return AxiomViolation{3, states[k], states[k]};
    }
  }
  return std::nullopt;
}

std::string ToString(AnnouncementMode mode) {
  return mode == AnnouncementMode::kOptimality ? "optimality" : "rationality";
}

AnnouncementTrace IterateAnnouncements(AnnouncementMode mode,
                                       const PropertyVector& properties,
                                       const StrategicGame& game) {
  if (properties.size() != game.num_players()) {
    throw InputError("property vector does not match the number of players");
  }
  const bool knowledge = mode == AnnouncementMode::kRationality;
  auto standard = [&](const Restriction& r) {
    return knowledge ? StandardKnowledgeModel(game, r) : StandardModel(game, r);
  };

  AnnouncementTrace trace;
  trace.mode = mode;
  trace.models.push_back(standard(game.FullRestriction()));
  while (true) {
    const EpistemicModel& current = trace.models.back();
    AnnouncementRound round;
    for (PlayerId i = 0; i < game.num_players(); ++i) {
      round.events.push_back(
          knowledge ? RationalityEvent(properties[i], current, game, i)
                    : OptimalityEvent(properties[i], current, game, i));
    }
    round.effect = AnnouncementEffect(current, round.events);
    Restriction next = RestrictionOf(current, round.events);
    EpistemicModel reformed = standard(next);
    round.effect_is_standard = SameStructure(round.effect, reformed);
    const bool unchanged = next == current.restriction;
    trace.rounds.push_back(std::move(round));
    if (unchanged) break;
    trace.models.push_back(std::move(reformed));
  }
  return trace;
}

std::string StateName(const StrategicGame& game, StateId state) {
  if (state < game.num_profiles()) return game.ProfileName(state);
  return "w" + std::to_string(state);
}

std::string EventName(const StrategicGame& game, const Event& event) {
  std::string out = "{";
  for (std::size_t k = 0; k < event.size(); ++k) {
    if (k > 0) out += ',';
    out += StateName(game, event[k]);
  }
  return out + "}";
}

}  // namespace epielim

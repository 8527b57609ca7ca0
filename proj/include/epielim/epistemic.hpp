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

#ifndef EPIELIM_EPISTEMIC_HPP_
#define EPIELIM_EPISTEMIC_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "epielim/game.hpp"
#include "epielim/operator.hpp"
#include "epielim/optimality.hpp"

namespace epielim {

// States are opaque ids. In standard models a state's id is the
// ProfileIndex of its joint strategy, so models built along different
// routes compare equal exactly when they describe the same states.
using StateId = std::size_t;

// A set of states, strictly ascending.
using Event = std::vector<StateId>;

// P_i: cell of every state, parallel to EpistemicModel::states.
using PossibilityMap = std::vector<Event>;

// A model (Omega, s_1, ..., s_n) for a restriction G, optionally carrying a
// possibility correspondence per player (a knowledge model).
struct EpistemicModel {
  Restriction restriction;
  Event states;
  // strategies[k][i] is s_i(states[k]).
  std::vector<std::vector<StrategyId>> strategies;
  // possibility[i][k] is P_i(states[k]).
  std::optional<std::vector<PossibilityMap>> possibility;

  std::size_t size() const { return states.size(); }
  bool is_knowledge_model() const { return possibility.has_value(); }
  // Position of a state in `states`, if present.
  std::optional<std::size_t> Position(StateId state) const;
  StrategyId StrategyOf(PlayerId i, StateId state) const;
  const Event& Cell(PlayerId i, StateId state) const;

  friend bool operator==(const EpistemicModel&,
                         const EpistemicModel&) = default;
};

// Same states, strategy functions and possibility correspondences; the
// restriction the model is declared for is ignored.
bool SameStructure(const EpistemicModel& a, const EpistemicModel& b);

// Throws InputError unless `model` is well formed for `game`: states
// ascending and unique, s_i mapping into G_i, cells inside Omega and every
// P_i a knowledge correspondence.
void ValidateModel(const StrategicGame& game, const EpistemicModel& model);

// Builds and validates an arbitrary (possibly non-standard) model.
EpistemicModel MakeModel(const StrategicGame& game, Restriction restriction,
                         Event states,
                         std::vector<std::vector<StrategyId>> strategies,
                         std::optional<std::vector<PossibilityMap>> possibility =
                             std::nullopt);

// States G_1 x ... x G_n with projection strategy functions.
EpistemicModel StandardModel(const StrategicGame& game, const Restriction& r);

// True iff model is the standard model for its restriction (possibility
// correspondences are not inspected).
bool IsStandardModel(const StrategicGame& game, const EpistemicModel& model);

// The standard model with P_i(w) = { w' : w'_i = w_i }.
EpistemicModel StandardKnowledgeModel(const StrategicGame& game,
                                      const Restriction& r);

// Every P_i(w) = { w' : s_i(w') = s_i(w) }, on an arbitrary model.
std::vector<PossibilityMap> StandardPossibility(const EpistemicModel& model);

using AnnouncementVector = std::vector<Event>;

// Event vector (Omega, ..., Omega).
AnnouncementVector TrivialAnnouncements(const EpistemicModel& model);

// G_E = (s_1(E_1), ..., s_n(E_n)). Throws PreconditionError if some E_i is
// not an event of the model.
Restriction RestrictionOf(const EpistemicModel& model,
                          const AnnouncementVector& events);

// Restricts the model to the intersection of the events; possibility cells
// are intersected with it as well. The declared restriction is kept.
EpistemicModel AnnouncementEffect(const EpistemicModel& model,
                                  const AnnouncementVector& events);

// If event has the shape G_1 x ... x G'_i x ... x G_n, returns G'_i.
// Throws PreconditionError unless model is standard.
std::optional<StrategySet> ProperAnnouncement(const StrategicGame& game,
                                              const EpistemicModel& model,
                                              PlayerId i, const Event& event);

// [[phi_i]]: states where s_i(w) is phi_i-optimal in the model's restriction.
Event OptimalityEvent(OptimalityProperty property, const EpistemicModel& model,
                      const StrategicGame& game, PlayerId i);

// G_{P_i(w)}: the game player i knows to be relevant at w. Throws
// PreconditionError on a model without possibility correspondences.
Restriction RelevantSubgame(const EpistemicModel& model, PlayerId i,
                            StateId state);

// <phi_i>: states where s_i(w) is phi_i-optimal in G_{P_i(w)}.
Event RationalityEvent(OptimalityProperty property, const EpistemicModel& model,
                       const StrategicGame& game, PlayerId i);

struct AxiomViolation {
  // 0: cell leaves Omega, 1: empty cell, 2: w' in P(w) but P(w') != P(w),
  // 3: w not in P(w).
  int axiom = 0;
  StateId state = 0;
  StateId other = 0;
};

// Checks non-emptiness, cell consistency and reflexivity of a possibility
// correspondence over `states`, which together make its cells a partition.
std::optional<AxiomViolation> CheckKnowledgeAxioms(const Event& states,
                                                   const PossibilityMap& cells);

enum class AnnouncementMode { kOptimality, kRationality };

std::string ToString(AnnouncementMode mode);

struct AnnouncementRound {
  AnnouncementVector events;
  // Effect of the events on the model the round started from.
  EpistemicModel effect;
  // The effect coincides with the standard (knowledge) model of G_E.
  bool effect_is_standard = false;
};

struct AnnouncementTrace {
  AnnouncementMode mode = AnnouncementMode::kOptimality;
  // Distinct models, starting with the standard (knowledge) model for H.
  std::vector<EpistemicModel> models;
  // rounds[k] is announced on models[k]; the last round changes nothing.
  std::vector<AnnouncementRound> rounds;

  const EpistemicModel& final_model() const { return models.back(); }
};

// Repeatedly announces [[phi]] (optimality) or <phi> (rationality), starting
// from the standard (knowledge) model for H and re-forming the standard
// model for the new restriction after every round, until a round leaves the
// restriction unchanged.
AnnouncementTrace IterateAnnouncements(AnnouncementMode mode,
                                       const PropertyVector& properties,
                                       const StrategicGame& game);

// State label: the joint profile for ids below num_profiles, else "w<id>".
std::string StateName(const StrategicGame& game, StateId state);
std::string EventName(const StrategicGame& game, const Event& event);

}  // namespace epielim

#endif  // EPIELIM_EPISTEMIC_HPP_

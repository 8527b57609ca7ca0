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

#include "epielim/verify.hpp"

#include <algorithm>
#include <functional>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "epielim/epistemic.hpp"
#include "epielim/errors.hpp"

namespace epielim {
namespace {

Verdict Holds(std::string check, std::string detail = {}) {
  return {std::move(check), VerdictStatus::kHolds, std::move(detail)};
}

Verdict Fails(std::string check, std::string witness) {
  return {std::move(check), VerdictStatus::kFails, std::move(witness)};
}

Verdict NotApplicable(std::string check, std::string why) {
  return {std::move(check), VerdictStatus::kNotApplicable, std::move(why)};
}

StrategySet SubsetOf(const StrategySet& set, std::uint64_t mask) {
  StrategySet out;
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (mask >> k & 1U) out.push_back(set[k]);
  }
  return out;
}

// Calls fn(sub) for every restriction sub below r.
template <typename Fn>
void ForEachSubRestriction(const Restriction& r, Fn&& fn) {
  const std::size_t n = r.num_players();
  std::vector<std::uint64_t> mask(n, 0);
  Restriction sub;
  sub.sets.resize(n);
  while (true) {
    for (PlayerId i = 0; i < n; ++i) sub[i] = SubsetOf(r[i], mask[i]);
    fn(static_cast<const Restriction&>(sub));
    PlayerId i = n;
    while (i-- > 0) {
      if (++mask[i] < (std::uint64_t{1} << r[i].size())) break;
      mask[i] = 0;
    }
    if (i == static_cast<PlayerId>(-1)) return;
  }
}

// Restrictions of the game with every component non-empty.
std::vector<Restriction> InhabitedRestrictions(const StrategicGame& game) {
  std::vector<Restriction> out;
  ForEachSubRestriction(game.FullRestriction(), [&](const Restriction& r) {
    if (!r.HasEmptyComponent()) out.push_back(r);
  });
  return out;
}

// Saturating product, for budget arithmetic.
std::size_t Product(std::size_t a, std::size_t b) {
  if (a != 0 && b > SIZE_MAX / a) return SIZE_MAX;
  return a * b;
}

// Sum of |Omega_G| over all inhabited restrictions: prod_j h_j 2^(h_j - 1).
std::size_t StandardStateCount(const StrategicGame& game) {
  std::size_t count = 1;
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    const std::size_t h = game.num_strategies(i);
    count = Product(count, h >= 63 ? SIZE_MAX : h << (h - 1));
  }
  return count;
}

std::string Describe(const StrategicGame& game, const EpistemicModel& model) {
  std::string out = "states=" + EventName(game, model.states);
  if (model.possibility) {
    for (PlayerId i = 0; i < model.possibility->size(); ++i) {
      out += " P_" + game.player_name(i) + "=[";
      for (std::size_t k = 0; k < model.size(); ++k) {
        if (k > 0) out += ';';
        out += EventName(game, (*model.possibility)[i][k]);
      }
      out += ']';
    }
  }
  return out;
}

Verdict CheckAnnouncementsAgainstOperator(const std::string& name,
                                          AnnouncementMode mode,
                                          const StrategicGame& game,
                                          const PropertyVector& properties) {
  const AnnouncementTrace trace =
      IterateAnnouncements(mode, properties, game);
  const EliminationTrace operator_trace = IterateOperator(properties, game);
  const Restriction& outcome = operator_trace.outcome();
  const EpistemicModel expected = mode == AnnouncementMode::kOptimality
                                      ? StandardModel(game, outcome)
                                      : StandardKnowledgeModel(game, outcome);
  if (!(trace.final_model() == expected)) {
    return Fails(name, "announcement outcome " +
                           game.RestrictionName(trace.final_model().restriction) +
                           " [" + Describe(game, trace.final_model()) +
                           "] but T^inf = " + game.RestrictionName(outcome) +
                           " [" + Describe(game, expected) + "]");
  }
  if (trace.models.size() != operator_trace.closure_round + 1) {
    return Fails(name, "announcements took " +
                           std::to_string(trace.models.size() - 1) +
                           " rounds, operator closed at round " +
                           std::to_string(operator_trace.closure_round));
  }
  for (std::size_t k = 0; k < trace.models.size(); ++k) {
    if (trace.models[k].restriction != operator_trace.rounds[k]) {
      return Fails(name, "round " + std::to_string(k) + ": model for " +
                             game.RestrictionName(trace.models[k].restriction) +
                             ", operator at " +
                             game.RestrictionName(operator_trace.rounds[k]));
    }
    if (!trace.rounds[k].effect_is_standard) {
      return Fails(name, "round " + std::to_string(k) +
                             ": announcement effect is not the standard "
                             "model of the announced restriction");
    }
  }
  return Holds(name, "outcome " + game.RestrictionName(outcome));
}

std::string WitnessName(const StrategicGame& game, PlayerId i,
                        const AssumptionAWitness& w) {
  return "player=" + game.player_name(i) +
         " strategy=" + game.strategy_name(i, w.strategy) + " holds_in " +
         game.RestrictionName(w.holds_with_own ? w.with_own
                                               : w.with_alternative) +
         " fails_in " +
         game.RestrictionName(w.holds_with_own ? w.with_alternative
                                               : w.with_own);
}

}  // namespace

std::string ToString(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kHolds: return "holds";
    case VerdictStatus::kFails: return "fails";
    case VerdictStatus::kNotApplicable: return "not-applicable";
  }
  return "";
}

Verdict CheckProperAnnouncementEffects(const StrategicGame& game,
                                       std::size_t budget) {
  const std::string name = "proper_announcements";
  // Sum over restrictions G of prod_j 2^|G_j| is prod_j 3^|H_j|.
  std::size_t count = 1;
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    for (std::size_t s = 0; s < game.num_strategies(i); ++s) {
      count = Product(count, 3);
    }
  }
  if (count > budget) {
    return NotApplicable(name, "needs " + std::to_string(count) +
                                   " announcement vectors, budget " +
                                   std::to_string(budget));
  }
  std::optional<Verdict> failure;
  ForEachSubRestriction(game.FullRestriction(), [&](const Restriction& g) {
    if (failure) return;
    const EpistemicModel model = StandardModel(game, g);
    ForEachSubRestriction(g, [&](const Restriction& announced) {
      if (failure) return;
      AnnouncementVector events;
      for (PlayerId i = 0; i < game.num_players(); ++i) {
        Restriction shape = g;
        shape[i] = announced[i];
        events.push_back(StandardModel(game, shape).states);
        const auto own = ProperAnnouncement(game, model, i, events.back());
        if (!own || (!g.HasEmptyComponent() && *own != announced[i])) {
          failure = Fails(name, "event " + EventName(game, events.back()) +
                                    " on the standard model for " +
                                    game.RestrictionName(g) +
                                    " not recognised as proper");
          return;
        }
      }
      const EpistemicModel effect = AnnouncementEffect(model, events);
      const Restriction image = RestrictionOf(model, events);
      if (!SameStructure(effect, StandardModel(game, image))) {
        failure = Fails(name, "G=" + game.RestrictionName(g) + " G'=" +
                                  game.RestrictionName(announced) +
                                  ": effect " + Describe(game, effect) +
                                  " is not the standard model for " +
                                  game.RestrictionName(image));
      } else if (!g.HasEmptyComponent() && image != announced) {
        failure = Fails(name, "G=" + game.RestrictionName(g) + ": G_E=" +
                                  game.RestrictionName(image) +
                                  " differs from announced " +
                                  game.RestrictionName(announced));
      }
    });
  });
  if (failure) return *failure;
  return Holds(name, std::to_string(count) + " announcement vectors");
}

Verdict CheckOptimalityEventsMatchOperator(const StrategicGame& game,
                                           const PropertyVector& properties,
                                           std::size_t budget) {
  const std::string name = "optimality_events." + ToString(properties);
  std::vector<Restriction> restrictions;
  std::string scope;
  if (StandardStateCount(game) <= budget) {
    restrictions = InhabitedRestrictions(game);
    scope = "all " + std::to_string(restrictions.size()) +
            " inhabited restrictions";
  } else {
    restrictions = IterateOperator(properties, game).rounds;
    scope = "the " + std::to_string(restrictions.size()) +
            " iteration rounds (exhaustive sweep over budget)";
  }
  for (const auto& g : restrictions) {
    const EpistemicModel model = StandardModel(game, g);
    AnnouncementVector events;
    for (PlayerId i = 0; i < game.num_players(); ++i) {
      events.push_back(OptimalityEvent(properties[i], model, game, i));
      if (!ProperAnnouncement(game, model, i, events.back())) {
        return Fails(name, "[[phi_" + game.player_name(i) + "]] = " +
                               EventName(game, events.back()) + " in " +
                               game.RestrictionName(g) + " is not proper");
      }
    }
    const Restriction via_events = RestrictionOf(model, events);
    const Restriction via_operator = ApplyOperator(properties, game, g);
    if (via_events != via_operator) {
      return Fails(name, "G=" + game.RestrictionName(g) + ": G_[[phi]]=" +
                             game.RestrictionName(via_events) +
                             " but T(G)=" +
                             game.RestrictionName(via_operator));
    }
  }
  return Holds(name, scope);
}

Verdict CheckRelevantSubgames(const StrategicGame& game, std::size_t budget) {
  const std::string name = "relevant_subgames";
  std::vector<Restriction> restrictions;
  if (Product(StandardStateCount(game), game.num_players()) <= budget) {
    restrictions = InhabitedRestrictions(game);
  } else {
    restrictions.push_back(game.FullRestriction());
  }
  for (const auto& g : restrictions) {
    const EpistemicModel model = StandardKnowledgeModel(game, g);
    for (PlayerId i = 0; i < game.num_players(); ++i) {
      if (const auto v =
              CheckKnowledgeAxioms(model.states, (*model.possibility)[i])) {
        return Fails(name, "standard correspondence of " +
                               game.player_name(i) + " on " +
                               game.RestrictionName(g) + " violates axiom " +
                               std::to_string(v->axiom) + " at " +
                               StateName(game, v->state));
      }
      for (std::size_t k = 0; k < model.size(); ++k) {
        Restriction expected = g;
        expected[i] = {model.strategies[k][i]};
        const Restriction known = RelevantSubgame(model, i, model.states[k]);
        if (known != expected) {
          return Fails(name, "G=" + game.RestrictionName(g) + " player " +
                                 game.player_name(i) + " at " +
                                 StateName(game, model.states[k]) + ": " +
                                 game.RestrictionName(known));
        }
      }
    }
  }
  return Holds(name, std::to_string(restrictions.size()) + " restrictions");
}

Verdict CheckOptimalityAnnouncements(const StrategicGame& game,
                                     const PropertyVector& properties) {
  return CheckAnnouncementsAgainstOperator(
      "optimality_announcements." + ToString(properties),
      AnnouncementMode::kOptimality, game, properties);
}

Verdict CheckRationalityAnnouncements(const StrategicGame& game,
                                      const PropertyVector& properties) {
  return CheckAnnouncementsAgainstOperator(
      "rationality_announcements." + ToString(properties),
      AnnouncementMode::kRationality, game, properties);
}

Verdict CheckRationalityEqualsOptimality(const StrategicGame& game,
                                         OptimalityProperty property,
                                         std::size_t budget) {
  const std::string name = "rationality_equals_optimality." + ToString(property);
  if (property.scope != PropertyScope::kGlobal) {
    return NotApplicable(name, "only claimed for global properties");
  }
  std::vector<Restriction> restrictions;
  if (StandardStateCount(game) <= budget) {
    restrictions = InhabitedRestrictions(game);
  } else {
    restrictions =
        IterateOperator(Homogeneous(property, game.num_players()), game).rounds;
  }
  for (const auto& g : restrictions) {
    const EpistemicModel model = StandardKnowledgeModel(game, g);
    for (PlayerId i = 0; i < game.num_players(); ++i) {
      const Event rational = RationalityEvent(property, model, game, i);
      const Event optimal = OptimalityEvent(property, model, game, i);
      if (rational != optimal) {
        return Fails(name, "G=" + game.RestrictionName(g) + " player " +
                               game.player_name(i) + ": <phi>=" +
                               EventName(game, rational) + " [[phi]]=" +
                               EventName(game, optimal));
      }
    }
  }
  return Holds(name, std::to_string(restrictions.size()) + " restrictions");
}

DegeneracyResult CheckLocalDegeneracy(const StrategicGame& game,
                                      const PropertyVector& properties) {
  const std::string name = "local_degeneracy." + ToString(properties);
  DegeneracyResult result;
  if (!IsAllLocal(properties)) {
    result.verdict = NotApplicable(name, "property vector is not all-local");
    return result;
  }
  const AnnouncementTrace trace =
      IterateAnnouncements(AnnouncementMode::kRationality, properties, game);
  const Restriction outcome = IterateOperator(properties, game).outcome();
  result.differs_from_operator = outcome != game.FullRestriction();
  const EpistemicModel& start = trace.models.front();
  for (const auto& round : trace.rounds) {
    for (PlayerId i = 0; i < round.events.size(); ++i) {
      if (round.events[i] != start.states) {
        result.verdict =
            Fails(name, "<phi_" + game.player_name(i) + "> = " +
                            EventName(game, round.events[i]) + " is not Omega");
        return result;
      }
    }
  }
  if (trace.models.size() != 1) {
    result.verdict = Fails(name, "announcement trace has " +
                                     std::to_string(trace.models.size()) +
                                     " models");
    return result;
  }
  result.verdict =
      Holds(name, std::string("identity operator; T^inf = ") +
                      game.RestrictionName(outcome) +
                      (result.differs_from_operator ? " differs from H"
                                                    : " equals H"));
  return result;
}

Verdict CheckAssumptionA(const StrategicGame& game,
                         OptimalityProperty property, std::size_t budget) {
  const std::string name = "assumption_a." + ToString(property);
  try {
    if (property.scope == PropertyScope::kGlobal) {
      for (PlayerId i = 0; i < game.num_players(); ++i) {
        const auto result = SatisfiesAssumptionA(property, game, i, budget);
        if (!result.holds) {
          return Fails(name, WitnessName(game, i, *result.witness));
        }
      }
      return Holds(name, "A holds for every player");
    }
    bool any_choice = false;
    for (PlayerId i = 0; i < game.num_players(); ++i) {
      if (game.num_strategies(i) < 2) continue;
      any_choice = true;
      const auto result = SatisfiesAssumptionA(property, game, i, budget);
      if (!result.holds) {
        return Holds(name, "A violated: " +
                               WitnessName(game, i, *result.witness));
      }
    }
    if (!any_choice) {
      return NotApplicable(name, "every player has a single strategy");
    }
    return Fails(name, "no violation of A found for a local property on " +
                           std::to_string(game.num_players()) +
                           "-player game");
  } catch (const ResourceError& e) {
    return NotApplicable(name, e.what());
  }
}

Verdict CheckOracleAgreement(const StrategicGame& game,
                             const PropertyVector& properties,
                             std::size_t budget) {
  const std::string name = "oracle." + ToString(properties);
  try {
    const Restriction oracle = OracleOutcome(properties, game, budget);
    const Restriction outcome = IterateOperator(properties, game).outcome();
    if (oracle != outcome) {
      return Fails(name, "iteration " + game.RestrictionName(outcome) +
                             " oracle " + game.RestrictionName(oracle));
    }
    return Holds(name, game.RestrictionName(outcome));
  } catch (const ResourceError& e) {
    return NotApplicable(name, e.what());
  }
}

Verdict CheckTraceStructure(const StrategicGame& game,
                            const PropertyVector& properties) {
  const std::string name = "structure." + ToString(properties);
  const EliminationTrace trace = IterateOperator(properties, game);
  std::size_t bound = 0;
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    bound += game.num_strategies(i) - 1;
  }
  if (trace.closure_round > bound) {
    return Fails(name, "closure round " + std::to_string(trace.closure_round) +
                           " exceeds bound " + std::to_string(bound));
  }
  if (trace.rounds.size() != trace.closure_round + 2 ||
      trace.rounds[trace.closure_round + 1] != trace.outcome()) {
    return Fails(name, "trace does not end in a repeated restriction");
  }
  for (std::size_t k = 0; k + 1 < trace.rounds.size(); ++k) {
    const Restriction& g = trace.rounds[k];
    const Restriction image = ApplyOperator(properties, game, g);
    if (image != trace.rounds[k + 1] || !IsSubRestriction(image, g)) {
      return Fails(name, "round " + std::to_string(k) + ": T(" +
                             game.RestrictionName(g) + ") = " +
                             game.RestrictionName(image));
    }
    if (k < trace.closure_round && image == g) {
      return Fails(name, "round " + std::to_string(k) + " does not shrink");
    }
    const EpistemicModel model = StandardKnowledgeModel(game, g);
    for (PlayerId i = 0; i < game.num_players(); ++i) {
      if (const auto v =
              CheckKnowledgeAxioms(model.states, (*model.possibility)[i])) {
        return Fails(name, "knowledge axiom " + std::to_string(v->axiom) +
                               " fails for " + game.player_name(i) + " on " +
                               game.RestrictionName(g));
      }
    }
  }
  return Holds(name,
               "closure round " + std::to_string(trace.closure_round));
}

Verdict CheckDiagonalAnnouncement() {
  const std::string name = "figure1";
  const StrategicGame game({"Row", "Col"}, {{"U", "D"}, {"L", "R"}},
                           {std::vector<Rational>(4), std::vector<Rational>(4)});
  const ProfileIndex ul = game.Encode(std::vector<StrategyId>{0, 0});
  const ProfileIndex dr = game.Encode(std::vector<StrategyId>{1, 1});
  const EpistemicModel model = MakeModel(game, game.FullRestriction(), {ul, dr},
                                         {{0, 0}, {1, 1}});
  const AnnouncementVector events = {{ul}, {dr}};
  const EpistemicModel effect = AnnouncementEffect(model, events);
  const Restriction image = RestrictionOf(model, events);
  const Restriction expected{{{0}, {1}}};
  std::ostringstream detail;
  detail << "effect states=" << EventName(game, effect.states)
         << " G_E=" << game.RestrictionName(image);
  if (!effect.states.empty() || image != expected) {
    return Fails(name, detail.str());
  }
  if (SameStructure(effect, StandardModel(game, image))) {
    return Fails(name, detail.str() + " (effect is a model of G_E)");
  }
  return Holds(name, detail.str() + " (effect is not a model of G_E)");
}

std::vector<PropertyVector> MixedGlobalVectors(std::size_t players,
                                               std::size_t count,
                                               std::uint64_t seed) {
  static constexpr OptimalityProperty kGlobals[] = {kSdGlobal, kWdGlobal,
                                                    kBrGlobal};
  std::vector<PropertyVector> all;
  std::vector<std::size_t> digit(players, 0);
  while (true) {
    PropertyVector v;
    for (std::size_t d : digit) v.push_back(kGlobals[d]);
    if (std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) !=
        v.end()) {
      all.push_back(std::move(v));
    }
    std::size_t i = players;
    while (i-- > 0) {
      if (++digit[i] < 3) break;
      digit[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  if (all.size() > count) all.resize(count);
  return all;
}

std::vector<Verdict> VerifyGame(const StrategicGame& game,
                                const VerifyOptions& options,
                                const std::string& label) {
  const std::size_t n = game.num_players();
  const std::size_t budget = options.enumeration_budget;
  std::vector<Verdict> out;
  out.push_back(CheckProperAnnouncementEffects(game, budget));
  out.push_back(CheckRelevantSubgames(game, budget));
  for (const auto& property : kAllProperties) {
    const PropertyVector phi = Homogeneous(property, n);
    out.push_back(CheckOptimalityEventsMatchOperator(game, phi, budget));
    out.push_back(CheckOptimalityAnnouncements(game, phi));
    out.push_back(CheckOracleAgreement(game, phi));
    out.push_back(CheckTraceStructure(game, phi));
    out.push_back(CheckAssumptionA(game, property));
    if (property.scope == PropertyScope::kGlobal) {
      out.push_back(CheckRationalityEqualsOptimality(game, property, budget));
      out.push_back(CheckRationalityAnnouncements(game, phi));
    } else {
      out.push_back(CheckLocalDegeneracy(game, phi).verdict);
    }
  }
  for (const auto& phi :
       MixedGlobalVectors(n, options.mixed_global_vectors, options.seed)) {
    out.push_back(CheckRationalityAnnouncements(game, phi));
  }
  for (auto& verdict : out) verdict.check = label + "." + verdict.check;
  return out;
}

}  // namespace epielim

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

#include <gtest/gtest.h>

#include "epielim/epistemic.hpp"
#include "epielim/errors.hpp"
#include "test_util.hpp"

namespace epielim {
namespace {

using testing::MakeGame;
using testing::Named;
using testing::PrisonersDilemma;

StrategicGame UpDownLeftRight() {
  return MakeGame({{"U", "D"}, {"L", "R"}}, {{0, 0}, {0, 0}, {0, 0}, {0, 0}});
}

StateId Id(const StrategicGame& game, std::vector<StrategyId> profile) {
  return game.Encode(profile);
}

// The two-state model w_ul = (U,L), w_dr = (D,R).
EpistemicModel DiagonalModel(const StrategicGame& game,
                              bool with_partition = false) {
  std::optional<std::vector<PossibilityMap>> possibility;
  if (with_partition) {
    const StateId ul = Id(game, {0, 0});
    const StateId dr = Id(game, {1, 1});
    possibility = std::vector<PossibilityMap>{{{ul}, {dr}}, {{ul}, {dr}}};
  }
  return MakeModel(game, game.FullRestriction(),
                   {Id(game, {0, 0}), Id(game, {1, 1})}, {{0, 0}, {1, 1}},
                   possibility);
}

TEST(StandardModelTest, TwoByTwo) {
  const StrategicGame game = UpDownLeftRight();
  const EpistemicModel model = StandardModel(game, game.FullRestriction());
  EXPECT_EQ(model.states, (Event{0, 1, 2, 3}));
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(model.strategies[k], game.Decode(model.states[k]));
  }
  EXPECT_FALSE(model.is_knowledge_model());
  EXPECT_TRUE(IsStandardModel(game, model));
}

TEST(StandardModelTest, SingleStateAndEmpty) {
  const StrategicGame game = PrisonersDilemma();
  const EpistemicModel single = StandardModel(game, Named(game, {{"D"}, {"D"}}));
  EXPECT_EQ(single.states, (Event{Id(game, {1, 1})}));
  const EpistemicModel empty = StandardModel(game, Named(game, {{}, {"C", "D"}}));
  EXPECT_TRUE(empty.states.empty());
  EXPECT_TRUE(IsStandardModel(game, empty));
}

TEST(MakeModelTest, RejectsStrategiesOutsideRestriction) {
  const StrategicGame game = UpDownLeftRight();
  EXPECT_THROW(MakeModel(game, Named(game, {{"U"}, {"L", "R"}}), {0, 3},
                         {{0, 0}, {1, 1}}),
               InputError);
  EXPECT_THROW(MakeModel(game, game.FullRestriction(), {3, 0},
                         {{1, 1}, {0, 0}}),
               InputError);
  // Non-partition possibility correspondence.
  EXPECT_THROW(MakeModel(game, game.FullRestriction(), {0, 3}, {{0, 0}, {1, 1}},
                         std::vector<PossibilityMap>{{{0, 3}, {3}}, {{0}, {3}}}),
               InputError);
}

TEST(RestrictionOfTest, DiagonalModel) {
  const StrategicGame game = UpDownLeftRight();
  const EpistemicModel model = DiagonalModel(game);
  EXPECT_FALSE(IsStandardModel(game, model));
  EXPECT_EQ(RestrictionOf(model, {{Id(game, {0, 0})}, {Id(game, {1, 1})}}),
            Named(game, {{"U"}, {"R"}}));
}

TEST(RestrictionOfTest, WholeStateSetGivesRestriction) {
  const StrategicGame game = PrisonersDilemma();
  const Restriction g = Named(game, {{"C", "D"}, {"D"}});
  const EpistemicModel model = StandardModel(game, g);
  EXPECT_EQ(RestrictionOf(model, TrivialAnnouncements(model)), g);
  EXPECT_EQ(RestrictionOf(model, {{}, model.states}), Named(game, {{}, {"D"}}));
}

TEST(RestrictionOfTest, RejectsForeignEvents) {
  const StrategicGame game = PrisonersDilemma();
  const EpistemicModel model = StandardModel(game, Named(game, {{"D"}, {"D"}}));
  EXPECT_THROW(RestrictionOf(model, {{0}, {}}), PreconditionError);
  EXPECT_THROW(RestrictionOf(model, {{}}), PreconditionError);
}

TEST(AnnouncementEffectTest, DiagonalEventsHaveEmptyEffect) {
  const StrategicGame game = UpDownLeftRight();
  const EpistemicModel model = DiagonalModel(game);
  const AnnouncementVector events = {{Id(game, {0, 0})}, {Id(game, {1, 1})}};
  const EpistemicModel effect = AnnouncementEffect(model, events);
  EXPECT_TRUE(effect.states.empty());
  const Restriction image = RestrictionOf(model, events);
  EXPECT_FALSE(image.HasEmptyComponent());
  EXPECT_FALSE(SameStructure(effect, StandardModel(game, image)));
}

TEST(AnnouncementEffectTest, TrivialAnnouncementIsIdentity) {
  const StrategicGame game = PrisonersDilemma();
  const EpistemicModel model =
      StandardKnowledgeModel(game, game.FullRestriction());
  EXPECT_EQ(AnnouncementEffect(model, TrivialAnnouncements(model)), model);
}

TEST(AnnouncementEffectTest, ProperAnnouncementGivesStandardModel) {
  const StrategicGame game = UpDownLeftRight();
  const EpistemicModel model = StandardModel(game, game.FullRestriction());
  const Event up = {Id(game, {0, 0}), Id(game, {0, 1})};
  const EpistemicModel effect = AnnouncementEffect(model, {up, model.states});
  EXPECT_TRUE(SameStructure(
      effect, StandardModel(game, Named(game, {{"U"}, {"L", "R"}}))));
}

TEST(AnnouncementEffectTest, RestrictsPossibilityCells) {
  const StrategicGame game = UpDownLeftRight();
  const EpistemicModel model =
      StandardKnowledgeModel(game, game.FullRestriction());
  const Event left = {Id(game, {0, 0}), Id(game, {1, 0})};
  const EpistemicModel effect = AnnouncementEffect(model, {model.states, left});
  ASSERT_TRUE(effect.is_knowledge_model());
  // Row's cell at (U,L) loses (U,R).
  EXPECT_EQ(effect.Cell(0, Id(game, {0, 0})), (Event{Id(game, {0, 0})}));
  EXPECT_TRUE(SameStructure(
      effect, StandardKnowledgeModel(game, Named(game, {{"U", "D"}, {"L"}}))));
}

TEST(ProperAnnouncementTest, ProductShapes) {
  const StrategicGame game = UpDownLeftRight();
  const EpistemicModel model = StandardModel(game, game.FullRestriction());
  EXPECT_EQ(ProperAnnouncement(game, model, 0,
                               {Id(game, {0, 0}), Id(game, {0, 1})}),
            StrategySet{0});
  EXPECT_EQ(ProperAnnouncement(game, model, 0,
                               {Id(game, {0, 0}), Id(game, {1, 1})}),
            std::nullopt);
  EXPECT_EQ(ProperAnnouncement(game, model, 0, {}), StrategySet{});
  // Product in player 1's coordinate, not player 0's.
  EXPECT_EQ(ProperAnnouncement(game, model, 0,
                               {Id(game, {0, 0}), Id(game, {1, 0})}),
            std::nullopt);
  EXPECT_EQ(ProperAnnouncement(game, model, 1,
                               {Id(game, {0, 0}), Id(game, {1, 0})}),
            StrategySet{0});
}

TEST(ProperAnnouncementTest, NonStandardModelIsPreconditionError) {
  const StrategicGame game = UpDownLeftRight();
  EXPECT_THROW(ProperAnnouncement(game, DiagonalModel(game), 0, {}),
               PreconditionError);
}

TEST(OptimalityEventTest, PrisonersDilemma) {
  const StrategicGame game = PrisonersDilemma();
  const EpistemicModel model = StandardModel(game, game.FullRestriction());
  EXPECT_EQ(OptimalityEvent(kSdGlobal, model, game, 0),
            (Event{Id(game, {1, 0}), Id(game, {1, 1})}));
  // Matching-pennies style: everything optimal gives Omega.
  const StrategicGame mp = testing::MatchingPennies();
  const EpistemicModel mp_model = StandardModel(mp, mp.FullRestriction());
  EXPECT_EQ(OptimalityEvent(kSdLocal, mp_model, mp, 1), mp_model.states);
}

TEST(OptimalityEventTest, RestrictedToEventsMatchesOperator) {
  const StrategicGame game = PrisonersDilemma();
  for (const auto& p : kAllProperties) {
    const PropertyVector phi = Homogeneous(p, 2);
    const EpistemicModel model = StandardModel(game, game.FullRestriction());
    AnnouncementVector events;
    for (PlayerId i = 0; i < 2; ++i) {
      events.push_back(OptimalityEvent(p, model, game, i));
    }
    EXPECT_EQ(RestrictionOf(model, events),
              ApplyOperator(phi, game, game.FullRestriction()));
  }
}

TEST(OptimalityEventTest, EmptyComponentBreaksOntoProjections) {
  // With G_1 empty the standard model has no states, so the optimality
  // events cannot carry player 2's surviving strategies: wd keeps both of
  // them (no opponent profile to be strictly better on) while G_[[wd]] is
  // empty. The identity only holds on inhabited restrictions.
  const StrategicGame game = PrisonersDilemma();
  const Restriction g = Named(game, {{}, {"C", "D"}});
  const PropertyVector phi = Homogeneous(kWdLocal, 2);
  const EpistemicModel model = StandardModel(game, g);
  const AnnouncementVector events = {OptimalityEvent(kWdLocal, model, game, 0),
                                     OptimalityEvent(kWdLocal, model, game, 1)};
  EXPECT_EQ(RestrictionOf(model, events), Named(game, {{}, {}}));
  EXPECT_EQ(ApplyOperator(phi, game, g), g);
}

TEST(StandardKnowledgeModelTest, CellsAndRelevantSubgame) {
  const StrategicGame game = UpDownLeftRight();
  const EpistemicModel model =
      StandardKnowledgeModel(game, game.FullRestriction());
  const StateId ul = Id(game, {0, 0});
  EXPECT_EQ(model.Cell(0, ul), (Event{ul, Id(game, {0, 1})}));
  EXPECT_EQ(RelevantSubgame(model, 0, ul), Named(game, {{"U"}, {"L", "R"}}));
  EXPECT_EQ(RelevantSubgame(model, 1, ul), Named(game, {{"U", "D"}, {"L"}}));
  for (PlayerId i = 0; i < 2; ++i) {
    EXPECT_EQ(CheckKnowledgeAxioms(model.states, (*model.possibility)[i]),
              std::nullopt);
  }
}

TEST(StandardKnowledgeModelTest, SingleState) {
  const StrategicGame game = PrisonersDilemma();
  const EpistemicModel model =
      StandardKnowledgeModel(game, Named(game, {{"D"}, {"D"}}));
  const StateId dd = Id(game, {1, 1});
  EXPECT_EQ(model.Cell(0, dd), (Event{dd}));
  EXPECT_EQ(model.Cell(1, dd), (Event{dd}));
}

TEST(RelevantSubgameTest, ThreePlayers) {
  const StrategicGame game = testing::MakeGame(
      {{"a", "b"}, {"x", "y"}, {"u", "v"}},
      std::vector<std::vector<int>>(8, {0, 0, 0}));
  const EpistemicModel model =
      StandardKnowledgeModel(game, game.FullRestriction());
  const StateId w = Id(game, {1, 0, 1});
  EXPECT_EQ(RelevantSubgame(model, 1, w),
            Named(game, {{"a", "b"}, {"x"}, {"u", "v"}}));
}

TEST(RelevantSubgameTest, NonStandardModels) {
  const StrategicGame game = UpDownLeftRight();
  const EpistemicModel partitioned = DiagonalModel(game, true);
  EXPECT_EQ(RelevantSubgame(partitioned, 0, Id(game, {0, 0})),
            Named(game, {{"U"}, {"L"}}));
  const StateId ul = Id(game, {0, 0});
  const StateId dr = Id(game, {1, 1});
  const EpistemicModel coarse =
      MakeModel(game, game.FullRestriction(), {ul, dr}, {{0, 0}, {1, 1}},
                std::vector<PossibilityMap>{{{ul, dr}, {ul, dr}},
                                            {{ul, dr}, {ul, dr}}});
  EXPECT_EQ(RelevantSubgame(coarse, 0, ul), game.FullRestriction());
  EXPECT_THROW(RelevantSubgame(DiagonalModel(game), 0, ul), PreconditionError);
}

TEST(RationalityEventTest, LocalPropertiesGiveOmega) {
  const StrategicGame game = PrisonersDilemma();
  const EpistemicModel model =
      StandardKnowledgeModel(game, game.FullRestriction());
  for (const auto& p : {kSdLocal, kWdLocal, kBrLocal}) {
    for (PlayerId i = 0; i < 2; ++i) {
      EXPECT_EQ(RationalityEvent(p, model, game, i), model.states);
    }
  }
}

TEST(RationalityEventTest, GlobalPropertiesMatchOptimality) {
  const StrategicGame game = PrisonersDilemma();
  const EpistemicModel model =
      StandardKnowledgeModel(game, game.FullRestriction());
  for (const auto& p : {kSdGlobal, kWdGlobal, kBrGlobal}) {
    for (PlayerId i = 0; i < 2; ++i) {
      EXPECT_EQ(RationalityEvent(p, model, game, i),
                OptimalityEvent(p, model, game, i));
    }
  }
}

TEST(RationalityEventTest, SingleStateModel) {
  const StrategicGame game = PrisonersDilemma();
  const EpistemicModel model =
      StandardKnowledgeModel(game, Named(game, {{"D"}, {"D"}}));
  EXPECT_EQ(RationalityEvent(kSdGlobal, model, game, 0), model.states);
  EXPECT_THROW(RationalityEvent(kSdGlobal, StandardModel(game, Named(game, {{"D"}, {"D"}})),
                                game, 0),
               PreconditionError);
}

TEST(KnowledgeAxiomsTest, Violations) {
  const Event states = {0, 1};
  auto v = CheckKnowledgeAxioms(states, {{}, {1}});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->axiom, 1);
  EXPECT_EQ(v->state, 0u);

  v = CheckKnowledgeAxioms(states, {{0, 1}, {1}});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->axiom, 2);
  EXPECT_EQ(v->other, 1u);

  v = CheckKnowledgeAxioms(states, {{1}, {1}});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->axiom, 3);

  v = CheckKnowledgeAxioms(states, {{0, 7}, {1}});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->axiom, 0);

  EXPECT_EQ(CheckKnowledgeAxioms(states, {{0, 1}, {0, 1}}), std::nullopt);
  EXPECT_EQ(CheckKnowledgeAxioms({}, {}), std::nullopt);
}

TEST(IterateAnnouncementsTest, OptimalityPrisonersDilemma) {
  const StrategicGame game = PrisonersDilemma();
  const AnnouncementTrace trace = IterateAnnouncements(
      AnnouncementMode::kOptimality, Homogeneous(kSdGlobal, 2), game);
  ASSERT_EQ(trace.models.size(), 2u);
  EXPECT_EQ(trace.final_model(),
            StandardModel(game, Named(game, {{"D"}, {"D"}})));
  EXPECT_EQ(trace.final_model().states, (Event{Id(game, {1, 1})}));
  for (const auto& round : trace.rounds) EXPECT_TRUE(round.effect_is_standard);
}

TEST(IterateAnnouncementsTest, RationalityLocalIsIdentity) {
  const StrategicGame game = PrisonersDilemma();
  const AnnouncementTrace trace = IterateAnnouncements(
      AnnouncementMode::kRationality, Homogeneous(kSdLocal, 2), game);
  ASSERT_EQ(trace.models.size(), 1u);
  EXPECT_EQ(trace.final_model(),
            StandardKnowledgeModel(game, game.FullRestriction()));
}

TEST(IterateAnnouncementsTest, RationalityGlobalBestResponse) {
  const StrategicGame game = PrisonersDilemma();
  const PropertyVector phi = Homogeneous(kBrGlobal, 2);
  const AnnouncementTrace trace =
      IterateAnnouncements(AnnouncementMode::kRationality, phi, game);
  EXPECT_EQ(trace.final_model(),
            StandardKnowledgeModel(game, OracleOutcome(phi, game)));
}

TEST(EpistemicProperties, ProperAnnouncementEffectsAreStandard) {
  for (const auto& game : testing::SmallPopulation(6, 31)) {
    if (game.num_players() > 2) continue;
    for (const auto& g : testing::AllRestrictions(game)) {
      const EpistemicModel model = StandardModel(game, g);
      for (const auto& sub : testing::AllRestrictions(game)) {
        if (!IsSubRestriction(sub, g)) continue;
        AnnouncementVector events;
        for (PlayerId i = 0; i < 2; ++i) {
          Restriction shape = g;
          shape[i] = sub[i];
          events.push_back(StandardModel(game, shape).states);
        }
        const EpistemicModel effect = AnnouncementEffect(model, events);
        ASSERT_TRUE(SameStructure(
            effect, StandardModel(game, RestrictionOf(model, events))));
      }
    }
  }
}

TEST(EpistemicProperties, OptimalityEventsAreProper) {
  for (const auto& game : testing::SmallPopulation(20, 32)) {
    for (const auto& g : testing::AllRestrictions(game)) {
      const EpistemicModel model = StandardModel(game, g);
      for (const auto& p : kAllProperties) {
        for (PlayerId i = 0; i < game.num_players(); ++i) {
          ASSERT_TRUE(ProperAnnouncement(game, model, i,
                                         OptimalityEvent(p, model, game, i)));
        }
      }
    }
  }
}

TEST(EpistemicProperties, RestrictedCellsKeepAxioms) {
  for (const auto& game : testing::SmallPopulation(20, 33)) {
    const EpistemicModel model =
        StandardKnowledgeModel(game, game.FullRestriction());
    // Drop every third state.
    Event kept;
    for (std::size_t k = 0; k < model.size(); ++k) {
      if (k % 3 != 0) kept.push_back(model.states[k]);
    }
    const EpistemicModel effect = AnnouncementEffect(
        model, AnnouncementVector(game.num_players(), kept));
    for (PlayerId i = 0; i < game.num_players(); ++i) {
      EXPECT_EQ(CheckKnowledgeAxioms(effect.states, (*effect.possibility)[i]),
                std::nullopt);
    }
  }
}

}  // namespace
}  // namespace epielim

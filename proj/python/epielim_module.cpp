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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "epielim/epistemic.hpp"
#include "epielim/errors.hpp"
#include "epielim/game.hpp"
#include "epielim/game_io.hpp"
#include "epielim/operator.hpp"
#include "epielim/optimality.hpp"
#include "epielim/random_game.hpp"
#include "epielim/verify.hpp"

namespace py = pybind11;

namespace epielim {
namespace {

using NamedRestriction = std::vector<std::vector<std::string>>;

Restriction FromNames(const StrategicGame& game,
                      const std::optional<NamedRestriction>& names) {
  if (!names) return game.FullRestriction();
  if (names->size() != game.num_players()) {
    throw InputError("restriction needs one strategy list per player");
  }
  Restriction r;
  r.sets.resize(game.num_players());
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    for (const auto& name : (*names)[i]) {
      r[i].push_back(game.StrategyIndex(i, name));
    }
    std::sort(r[i].begin(), r[i].end());
    r[i].erase(std::unique(r[i].begin(), r[i].end()), r[i].end());
  }
  return r;
}

NamedRestriction ToNames(const StrategicGame& game, const Restriction& r) {
  NamedRestriction out(r.num_players());
  for (PlayerId i = 0; i < r.num_players(); ++i) {
    for (StrategyId s : r[i]) out[i].push_back(game.strategy_name(i, s));
  }
  return out;
}

std::vector<std::vector<std::string>> StateNames(const StrategicGame& game,
                                                 const Event& states) {
  std::vector<std::vector<std::string>> out;
  for (StateId state : states) {
    std::vector<std::string> profile;
    for (PlayerId i = 0; i < game.num_players(); ++i) {
      profile.push_back(game.strategy_name(i, game.Component(state, i)));
    }
    out.push_back(std::move(profile));
  }
  return out;
}

PropertyVector Properties(const StrategicGame& game, const std::string& text) {
  return ParsePropertyVector(text, game.num_players());
}

}  // namespace
}  // namespace epielim

PYBIND11_MODULE(_epielim, m) {
  using namespace epielim;
  m.doc() = "Iterated elimination of non-optimal strategies and iterated "
            "public announcements on epistemic models";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError",
                                            PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError",
                                        PyExc_RuntimeError);

  py::class_<StrategicGame>(m, "Game")
      .def_static("from_text", [](const std::string& text) {
        return ParseGame(text);
      })
      .def("to_text", &SerializeGame)
      .def_property_readonly("players", &StrategicGame::player_names)
      .def("strategies",
           [](const StrategicGame& g, const std::string& player) {
             return g.strategy_names(g.PlayerIndex(player));
           })
      .def("payoff",
           [](const StrategicGame& g, const std::string& player,
              const std::vector<std::string>& profile) {
             if (profile.size() != g.num_players()) {
               throw InputError("profile needs one strategy per player");
             }
             std::vector<StrategyId> ids;
             for (PlayerId i = 0; i < g.num_players(); ++i) {
               ids.push_back(g.StrategyIndex(i, profile[i]));
             }
             return ToString(g.payoff(g.PlayerIndex(player), g.Encode(ids)));
           })
      .def("__eq__", [](const StrategicGame& a, const StrategicGame& b) {
        return a == b;
      })
      .def("__repr__", [](const StrategicGame& g) {
        return "<epielim.Game " + std::to_string(g.num_players()) +
               " players, " + std::to_string(g.num_profiles()) + " profiles>";
      });

  m.def(
      "random_game",
      [](std::uint64_t seed, std::size_t max_players,
         std::size_t max_strategies, int min_payoff, int max_payoff) {
        RandomGameBounds bounds;
        bounds.max_players = max_players;
        bounds.max_strategies = max_strategies;
        bounds.min_payoff = min_payoff;
        bounds.max_payoff = max_payoff;
        return GenerateRandomGame(seed, bounds);
      },
      py::arg("seed"), py::arg("max_players") = 3,
      py::arg("max_strategies") = 4, py::arg("min_payoff") = -5,
      py::arg("max_payoff") = 5);

  m.def(
      "strictly_dominates",
      [](const StrategicGame& g, const std::string& player,
         const std::string& dominator, const std::string& dominated,
         const std::optional<NamedRestriction>& restriction) {
        const PlayerId i = g.PlayerIndex(player);
        return StrictlyDominates(g, i, g.StrategyIndex(i, dominator),
                                 g.StrategyIndex(i, dominated),
                                 FromNames(g, restriction));
      },
      py::arg("game"), py::arg("player"), py::arg("dominator"),
      py::arg("dominated"), py::arg("restriction") = py::none());

  m.def(
      "weakly_dominates",
      [](const StrategicGame& g, const std::string& player,
         const std::string& dominator, const std::string& dominated,
         const std::optional<NamedRestriction>& restriction) {
        const PlayerId i = g.PlayerIndex(player);
        return WeaklyDominates(g, i, g.StrategyIndex(i, dominator),
                               g.StrategyIndex(i, dominated),
                               FromNames(g, restriction));
      },
      py::arg("game"), py::arg("player"), py::arg("dominator"),
      py::arg("dominated"), py::arg("restriction") = py::none());

  m.def(
      "property_holds",
      [](const std::string& property, const StrategicGame& g,
         const std::string& player, const std::string& strategy,
         const std::optional<NamedRestriction>& restriction) {
        const PlayerId i = g.PlayerIndex(player);
        return PropertyHolds(ParseProperty(property), g, i,
                             g.StrategyIndex(i, strategy),
                             FromNames(g, restriction));
      },
      py::arg("property"), py::arg("game"), py::arg("player"),
      py::arg("strategy"), py::arg("restriction") = py::none());

  m.def(
      "satisfies_assumption_a",
      [](const std::string& property, const StrategicGame& g,
         const std::string& player) -> py::object {
        const PlayerId i = g.PlayerIndex(player);
        const auto result = SatisfiesAssumptionA(ParseProperty(property), g, i);
        if (result.holds) return py::cast(true);
        const auto& w = *result.witness;
        py::dict witness;
        witness["strategy"] = g.strategy_name(i, w.strategy);
        witness["with_own"] = ToNames(g, w.with_own);
        witness["with_alternative"] = ToNames(g, w.with_alternative);
        witness["holds_with_own"] = w.holds_with_own;
        return py::make_tuple(false, witness);
      },
      py::arg("property"), py::arg("game"), py::arg("player"));

  m.def(
      "apply_operator",
      [](const StrategicGame& g, const std::string& properties,
         const std::optional<NamedRestriction>& restriction) {
        return ToNames(g, ApplyOperator(Properties(g, properties), g,
                                        FromNames(g, restriction)));
      },
      py::arg("game"), py::arg("properties"),
      py::arg("restriction") = py::none());

  m.def(
      "eliminate",
      [](const StrategicGame& g, const std::string& properties) {
        const EliminationTrace trace =
            IterateOperator(Properties(g, properties), g);
        py::list rounds;
        for (const auto& r : trace.rounds) rounds.append(ToNames(g, r));
        py::list removals;
        for (const auto& round : trace.removals) {
          py::list entries;
          for (const auto& removal : round) {
            entries.append(py::make_tuple(
                g.player_name(removal.player),
                g.strategy_name(removal.player, removal.strategy),
                removal.dominator
                    ? py::cast(g.strategy_name(removal.player,
                                               *removal.dominator))
                    : py::object(py::none())));
          }
          removals.append(entries);
        }
        py::dict out;
        out["rounds"] = rounds;
        out["removals"] = removals;
        out["closure_round"] = trace.closure_round;
        out["outcome"] = ToNames(g, trace.outcome());
        return out;
      },
      py::arg("game"), py::arg("properties"));

  m.def(
      "oracle_outcome",
      [](const StrategicGame& g, const std::string& properties) {
        return ToNames(g, OracleOutcome(Properties(g, properties), g));
      },
      py::arg("game"), py::arg("properties"));

  m.def(
      "announce",
      [](const StrategicGame& g, const std::string& mode,
         const std::string& properties) {
        AnnouncementMode parsed;
        if (mode == "optimality") {
          parsed = AnnouncementMode::kOptimality;
        } else if (mode == "rationality") {
          parsed = AnnouncementMode::kRationality;
        } else {
          throw InputError("mode must be 'optimality' or 'rationality'");
        }
        const AnnouncementTrace trace =
            IterateAnnouncements(parsed, Properties(g, properties), g);
        py::list restrictions;
        for (const auto& model : trace.models) {
          restrictions.append(ToNames(g, model.restriction));
        }
        py::dict out;
        out["restrictions"] = restrictions;
        out["rounds"] = trace.models.size() - 1;
        out["final_states"] = StateNames(g, trace.final_model().states);
        out["final_restriction"] = ToNames(g, trace.final_model().restriction);
        return out;
      },
      py::arg("game"), py::arg("mode"), py::arg("properties"));

  m.def(
      "verify",
      [](const StrategicGame& g, std::uint64_t seed) {
        VerifyOptions options;
        options.seed = seed;
        py::list out;
        for (const auto& v : VerifyGame(g, options, "game")) {
          out.append(py::make_tuple(v.check, ToString(v.status), v.detail));
        }
        return out;
      },
      py::arg("game"), py::arg("seed") = 0);

  m.def("figure1", [] {
    const Verdict v = CheckDiagonalAnnouncement();
    return py::make_tuple(ToString(v.status), v.detail);
  });
}

# Copyright 2026 The epielim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pathlib

import pytest

import epielim

PD = (pathlib.Path(__file__).resolve().parents[2] / "tests" / "golden" / "pd.game").read_text()


@pytest.fixture
def pd():
    return epielim.Game.from_text(PD)


def test_game_accessors(pd):
    assert pd.players == ["Row", "Col"]
    assert pd.strategies("Row") == ["C", "D"]
    assert pd.payoff("Col", ["C", "D"]) == "4"
    assert epielim.Game.from_text(pd.to_text()) == pd


def test_dominance(pd):
    assert epielim.strictly_dominates(pd, "Row", "D", "C")
    assert not epielim.strictly_dominates(pd, "Row", "C", "D")
    assert epielim.weakly_dominates(pd, "Col", "D", "C", [["C"], ["C", "D"]])
    assert not epielim.property_holds("sdg", pd, "Row", "C")
    assert epielim.property_holds("sdl", pd, "Row", "C", [["C"], ["C", "D"]])


def test_eliminate_matches_oracle(pd):
    trace = epielim.eliminate(pd, "sdg")
    assert trace["outcome"] == [["D"], ["D"]]
    assert trace["closure_round"] == 1
    assert trace["removals"][0] == [("Row", "C", "D"), ("Col", "C", "D")]
    assert epielim.oracle_outcome(pd, "sdg") == trace["outcome"]
    assert epielim.apply_operator(pd, "brg") == [["D"], ["D"]]


def test_announce(pd):
    out = epielim.announce(pd, "optimality", "sdg")
    assert out["final_states"] == [["D", "D"]]
    assert out["final_restriction"] == [["D"], ["D"]]
    local = epielim.announce(pd, "rationality", "sdl")
    assert local["rounds"] == 0
    assert local["final_restriction"] == [["C", "D"], ["C", "D"]]


def test_assumption_a(pd):
    assert epielim.satisfies_assumption_a("wdg", pd, "Row") is True
    holds, witness = epielim.satisfies_assumption_a("sdl", pd, "Row")
    assert holds is False
    assert witness["strategy"] in ("C", "D")


def test_diagonal_announcement_and_verify():
    status, _ = epielim.figure1()
    assert status == "holds"
    game = epielim.random_game(5, max_players=2, max_strategies=3)
    verdicts = epielim.verify(game, seed=5)
    assert verdicts
    assert all(status != "fails" for _, status, _ in verdicts)
    assert epielim.random_game(5) == epielim.random_game(5)


def test_errors(pd):
    with pytest.raises(epielim.InputError, match="line 1"):
        epielim.Game.from_text("players Solo\n")
    with pytest.raises(epielim.InputError):
        epielim.eliminate(pd, "nope")
    with pytest.raises(epielim.InputError):
        epielim.announce(pd, "sideways", "sdg")
    with pytest.raises(epielim.PreconditionError):
        epielim.property_holds("sdl", pd, "Row", "C", [["D"], ["C", "D"]])

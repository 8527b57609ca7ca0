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

"""Iterated elimination of non-optimal strategies and iterated public
announcements on epistemic models."""

from ._epielim import (
    Game,
    InputError,
    PreconditionError,
    ResourceError,
    announce,
    apply_operator,
    eliminate,
    figure1,
    oracle_outcome,
    property_holds,
    random_game,
    satisfies_assumption_a,
    strictly_dominates,
    verify,
    weakly_dominates,
)

__all__ = [
    "Game",
    "InputError",
    "PreconditionError",
    "ResourceError",
    "announce",
    "apply_operator",
    "eliminate",
    "figure1",
    "oracle_outcome",
    "property_holds",
    "random_game",
    "satisfies_assumption_a",
    "strictly_dominates",
    "verify",
    "weakly_dominates",
]

# Copyright 2026 The rcsbr Authors
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

"""Strong-belief solution concepts and separating type structures.

Product sets are lists with one list of strategy labels per player, in the
game's player order. Everything else comes back as plain dicts.
"""

import json

from . import _rcsbr
from ._rcsbr import Game, RcsbrError, TypeStructure

__all__ = [
    "Game",
    "RcsbrError",
    "TypeStructure",
    "construct",
    "correlated_rationalizability",
    "fbrs",
    "fsbrs",
    "is_fsbrs",
    "mfsbrs",
    "rcbr",
    "rcsbr",
    "real",
    "strong_rationalizability",
]


def _target(target):
    return json.dumps(target)


def strong_rationalizability(game):
    return json.loads(_rcsbr.strong_rationalizability(game))


def correlated_rationalizability(game):
    return json.loads(_rcsbr.correlated_rationalizability(game))


def fsbrs(game):
    return json.loads(_rcsbr.fsbrs(game))


def mfsbrs(game):
    return json.loads(_rcsbr.mfsbrs(game))


def fbrs(game):
    return json.loads(_rcsbr.fbrs(game))


def is_fsbrs(game, target):
    """`target` is a list of label lists or a {player: labels} dict."""
    return _rcsbr.is_fsbrs(game, _target(target))


def rcsbr(game, structure):
    return json.loads(_rcsbr.rcsbr(game, structure))


def rcbr(game, structure):
    return json.loads(_rcsbr.rcbr(game, structure))


def real(game, state_path):
    """Real RCSBR under minimal closures of a state-space file."""
    return json.loads(_rcsbr.real(game, str(state_path)))


def construct(game, target, degenerate=True, common=True):
    """Host, state space and closures realizing `target` in a quadrant."""
    return json.loads(_rcsbr.construct(game, _target(target), degenerate, common))

# Copyright nestmc contributors: see top-level COPYRIGHT file for details
# SPDX-License-Identifier: (Apache-2.0 OR MIT)
"""Nested-universe Monte Carlo geometry and k-eigenvalue transport.

Models are plain dictionaries in the JSON input format (sections
``surfaces``, ``universes``, ``arrays``, ``embeddings``, ``materials``,
``run``). Generators produce them; :func:`run` executes power iteration.
"""

import json
import os

from . import _nestmc
from ._nestmc import (
    ConfigError,
    GeometryError,
    TransportError,
    UnsupportedError,
)

__all__ = [
    "ConfigError",
    "Geometry",
    "GeometryError",
    "TransportError",
    "UnsupportedError",
    "bench",
    "generate",
    "infinite_medium_k",
    "load",
    "run",
    "suite_names",
    "verify",
]

STRATEGIES = ("dp", "sp", "st", "rtk")


def _text(model):
    if isinstance(model, (str, os.PathLike)) and os.path.exists(model):
        return json.dumps(load(model))
    if isinstance(model, str):
        return model
    return json.dumps(model)


def load(path):
    """Read a model file into a dictionary."""
    with open(path) as f:
        return json.load(f)


def generate(name, **params):
    """Build a generated model: minicore-rect, minicore-hex, infinite-1g/2g."""
    return json.loads(_nestmc.generate(name, json.dumps(params)))


def run(model, **overrides):
    """Run power iteration; keyword arguments override the ``run`` section."""
    return json.loads(_nestmc.run(_text(model), json.dumps(overrides)))


def verify(suites=(), seed=20240611, scale=1.0, replay_seeds=10):
    """Run oracle suites; returns one dictionary per suite."""
    return json.loads(
        _nestmc.verify(list(suites), seed, scale, replay_seeds)
    )


def bench(model, strategies=STRATEGIES, workloads=(2000, 10000),
          inactive=2, active=3):
    """Time strategies over workloads; returns (csv_text, report)."""
    csv, report = _nestmc.bench(
        _text(model), list(strategies), list(workloads), inactive, active
    )
    return csv, json.loads(report)


def infinite_medium_k(model):
    """Analytic k for a single-material infinite medium."""
    return _nestmc.infinite_medium_k(_text(model))


def suite_names():
    return list(_nestmc.suite_names())


class Geometry:
    """Point location in a built model under one tracking strategy."""

    def __init__(self, model, strategy="dp"):
        self._geo = _nestmc.Geometry(_text(model), strategy)

    @property
    def strategy(self):
        return self._geo.strategy

    def locate(self, pos):
        """Universe label and local cell at each level, root first."""
        return self._geo.locate(tuple(pos))

    def material(self, pos):
        return self._geo.material(tuple(pos))

    def dump(self, pos, direction=(0.0, 0.0, 1.0)):
        return self._geo.dump(tuple(pos), tuple(direction))

"""Exact verification of twisted partial Hopf actions."""

import json

from . import _hopfpartial
from ._hopfpartial import HopfPartialError, __version__, mutation_targets, run_cli, scenario_names

__all__ = [
    "HopfPartialError",
    "__version__",
    "default_config",
    "mutation_catalogue",
    "mutation_targets",
    "run_cli",
    "scenario_names",
    "table",
    "verify",
]


def default_config(name):
    return json.loads(_hopfpartial.default_config(name))


def verify(scenario, *, mutate=None, fail_fast=False, jobs=0, **overrides):
    """Run a scenario and return the report envelope as a dict.

    `scenario` is a name or a config dict; keyword overrides replace config fields.
    """
    cfg = default_config(scenario) if isinstance(scenario, str) else dict(scenario)
    cfg.update(overrides)
    if mutate is not None:
        cfg["mutate"] = mutate
    return json.loads(_hopfpartial.run_scenario(json.dumps(cfg), fail_fast, jobs))


def table(scenario, obj):
    cfg = default_config(scenario) if isinstance(scenario, str) else dict(scenario)
    return json.loads(_hopfpartial.table(json.dumps(cfg), obj))


def mutation_catalogue():
    return [
        {"scenario": s, "mutation": m, "expected": e} for s, m, e in _hopfpartial.mutation_catalogue()
    ]

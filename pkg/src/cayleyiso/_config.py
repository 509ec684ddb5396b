#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/_config.py
"""Run configuration: search budgets, feature flags, output paths, seed.

Defaults can be overridden through the ``CAYLEYISO_BUDGETS`` environment
variable, e.g.::

    CAYLEYISO_BUDGETS="aut=60,search=500000,census=1000000"
"""

from __future__ import annotations

import dataclasses
import logging
import os
from dataclasses import dataclass
from pathlib import Path

from ._errors import MalformedInputError

logger = logging.getLogger(__name__)

ENV_VAR = "CAYLEYISO_BUDGETS"

# env key -> RunConfig field
_ENV_KEYS = {
    "aut": "aut_bound",
    "search": "search_budget",
    "elements": "element_cap",
    "census": "census_budget",
    "symbols": "symbol_check_budget",
    "seed": "seed",
}


@dataclass(frozen=True)
class RunConfig:
    """Budgets and switches threaded through every pipeline.

    Parameters
    ----------
    aut_bound : int
        Largest group order for which the full automorphism list is built.
    search_budget : int
        Node budget for semiregular-subgroup and conjugacy backtracks.
    element_cap : int
        Largest permutation group enumerated element by element.
    census_budget : int
        Largest number of admissible subsets enumerated directly.
    symbol_check_budget : int
        Largest number of symbol transformations tried by normalizer_in_aut.
    stretch_z2_5 : bool
        Enable the order-32 elementary abelian census.
    seed : int
        Seed for every randomized step.
    json_path, tsv_path : Path, optional
        Report destinations used by the CLI.
    """

    aut_bound: int = 60
    search_budget: int = 200_000
    element_cap: int = 1_000_000
    census_budget: int = 10_000_000
    symbol_check_budget: int = 100_000_000
    stretch_z2_5: bool = False
    seed: int = 20240229
    json_path: Path | None = None
    tsv_path: Path | None = None

    def __post_init__(self):
        for name in (
            "aut_bound",
            "search_budget",
            "element_cap",
            "census_budget",
            "symbol_check_budget",
        ):
            if getattr(self, name) <= 0:
                raise MalformedInputError(f"{name} must be positive")

    @classmethod
    def from_env(cls, environ: dict | None = None) -> RunConfig:
        """Build a config from defaults plus ``CAYLEYISO_BUDGETS``."""
        environ = os.environ if environ is None else environ
        raw = environ.get(ENV_VAR, "").strip()
        if not raw:
            return cls()
        return cls(**parse_budget_string(raw))

    def with_overrides(self, **overrides) -> RunConfig:
        """Return a copy with every non-None override applied."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        if not changes:
            return self
        logger.debug("Config overrides: %s", changes)
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict:
        data = dataclasses.asdict(self)
        for key in ("json_path", "tsv_path"):
            if data[key] is not None:
                data[key] = str(data[key])
        return data


def parse_budget_string(raw: str) -> dict:
    """Parse ``key=value,...`` into RunConfig keyword arguments.

    Raises
    ------
    MalformedInputError
        On unknown keys or non-numeric values.
    """
    result = {}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        key = key.strip().lower()
        if not sep or key not in _ENV_KEYS:
            raise MalformedInputError(f"{ENV_VAR}: unknown entry {item!r}")
        try:
            result[_ENV_KEYS[key]] = int(float(value))
        except ValueError:
            raise MalformedInputError(
                f"{ENV_VAR}: value for {key!r} is not a number: {value!r}"
            ) from None
    return result


def resolve(config: RunConfig | None) -> RunConfig:
    """Return ``config`` or the environment-derived default."""
    return RunConfig.from_env() if config is None else config


__all__ = ["RunConfig", "ENV_VAR", "parse_budget_string", "resolve"]

# EOF

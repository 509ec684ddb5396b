#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/__init__.py
"""cayleyiso: Cayley isomorphism properties of m-Cayley and bi-Cayley digraphs."""

from . import census, ci, groups, iso, mcayley, perm
from ._config import RunConfig
from ._errors import (
    BudgetExceededError,
    CayleyIsoError,
    GroupSpecError,
    InvariantViolation,
    MalformedInputError,
    NotNormalError,
    NotPartiteError,
    SubgroupNotContainedError,
)

__version__ = "0.1.0"
__all__ = [
    "perm",
    "groups",
    "mcayley",
    "iso",
    "ci",
    "census",
    "RunConfig",
    "CayleyIsoError",
    "MalformedInputError",
    "GroupSpecError",
    "BudgetExceededError",
    "SubgroupNotContainedError",
    "NotNormalError",
    "NotPartiteError",
    "InvariantViolation",
]

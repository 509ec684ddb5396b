#!/usr/bin/env python3
# Timestamp: "2026-10-19"
# File: src/cayleyiso/_errors.py
"""Exception hierarchy shared by every cayleyiso subpackage."""

from __future__ import annotations


class CayleyIsoError(Exception):
    """Base class for all errors raised by cayleyiso."""


class MalformedInputError(CayleyIsoError, ValueError):
    """Input that does not describe a valid object (bad degree, label, symbol)."""


class GroupSpecError(MalformedInputError):
    """Unknown or unparsable group spec string."""


class BudgetExceededError(CayleyIsoError, RuntimeError):
    """A search or enumeration hit its configured bound.

    A truncated search never yields a verdict; callers must either raise
    the budget or switch to a different method.
    """

    def __init__(self, what: str, budget: int, used: int | None = None):
        self.what = what
        self.budget = budget
        self.used = used
        detail = f"{what}: budget {budget} exceeded"
        if used is not None:
            detail += f" (needed {used})"
        super().__init__(detail)


class SubgroupNotContainedError(CayleyIsoError, ValueError):
    """A subgroup argument is not contained in the ambient group."""


class NotNormalError(CayleyIsoError, ValueError):
    """A subgroup required to be normal is not."""


class NotPartiteError(CayleyIsoError, ValueError):
    """An m-PCayley (empty diagonal) symbol was required."""


class InvariantViolation(CayleyIsoError, AssertionError):
    """An internal cross-check disagreed; indicates a bug, not bad input."""


__all__ = [
    "CayleyIsoError",
    "MalformedInputError",
    "GroupSpecError",
    "BudgetExceededError",
    "SubgroupNotContainedError",
    "NotNormalError",
    "NotPartiteError",
    "InvariantViolation",
]

# EOF

#!/usr/bin/env python3
"""Shared fixtures for the cayleyiso test suite."""

import pytest

from cayleyiso import RunConfig
from cayleyiso.groups import named_group


@pytest.fixture
def config():
    """Default budgets, independent of CAYLEYISO_BUDGETS in the caller's shell."""
    return RunConfig()


@pytest.fixture
def z3():
    return named_group("Z3")


@pytest.fixture
def z4():
    return named_group("Z4")


@pytest.fixture
def z8():
    return named_group("Z8")


@pytest.fixture
def z4xz2():
    return named_group("Z4xZ2")


@pytest.fixture
def z2_4():
    return named_group("Z2^4")


# EOF

"""Shared fixtures; the repository root is importable from tests."""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bridgecensus.knot import NAMED_KNOTS, TwoBridgeKnot, canonicalize  # noqa: E402


@pytest.fixture(scope="session")
def named() -> dict[str, TwoBridgeKnot]:
    return {name: canonicalize(f) for name, f in NAMED_KNOTS.items()}


@pytest.fixture(scope="session")
def trefoil() -> TwoBridgeKnot:
    return canonicalize(Fraction(1, 3))


@pytest.fixture(scope="session")
def figure_eight() -> TwoBridgeKnot:
    return canonicalize(Fraction(2, 5))

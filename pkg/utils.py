"""Input grammar and small formatting helpers."""

import logging
import re
from fractions import Fraction
from typing import Sequence

from bridgecensus.errors import MalformedInput
from bridgecensus.knot import NAMED_KNOTS, TwoBridgeKnot, canonicalize, knot_of_cf
from bridgecensus.rational_cf import ContinuedFraction

logger = logging.getLogger("bridgecensus")

_FRACTION = re.compile(r"^\s*(-?\d+)\s*/\s*(\d+)\s*$")
_CF = re.compile(r"^\s*\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]\s*$")


def parse_fraction(text: str) -> Fraction:
    """Parse ``"q/p"``; the denominator must be positive."""
    match = _FRACTION.match(text)
    if not match:
        raise MalformedInput(f"Not a fraction 'q/p': {text!r}")
    q, p = int(match.group(1)), int(match.group(2))
    if p == 0:
        raise MalformedInput(f"Zero denominator in {text!r}")
    return Fraction(q, p)


def parse_cf(text: str) -> ContinuedFraction:
    """Parse ``"[a1,a2,...]"``; negative entries are allowed."""
    if not _CF.match(text):
        raise MalformedInput(f"Not a continued fraction '[a1,...]': {text!r}")
    body = text.strip()[1:-1].strip()
    if not body:
        raise MalformedInput("Empty continued fraction")
    return tuple(int(part) for part in body.split(","))


def is_cf_text(text: str) -> bool:
    return text.strip().startswith("[")


def parse_knot_input(text: str) -> TwoBridgeKnot:
    """A knot from a fraction, a continued fraction or a name like ``3_1``."""
    alias = text.strip()
    if alias in NAMED_KNOTS:
        return canonicalize(NAMED_KNOTS[alias])
    if is_cf_text(text):
        return knot_of_cf(parse_cf(text))
    return canonicalize(parse_fraction(text))


def format_cf(cf: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in cf) + "]"


def format_eps(eps: Sequence[int]) -> str:
    """Signs as a string of ``+`` and ``-``."""
    return "".join("+" if e > 0 else "-" for e in eps)

"""2-bridge knots up to mirror image: Schubert canonical form and census.

``K(q/p)`` and ``K(q'/p)`` are the same knot (mirrors identified) exactly
when ``q' = ±q`` or ``q q' = ±1`` modulo ``p``.  The canonical
representative is the least numerator of that orbit in ``(0, p/2)``.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from bridgecensus.errors import InconsistentResult, IsLink, OutOfRange, Trivial
from bridgecensus.rational_cf import (
    ContinuedFraction,
    cf_eval,
    euclid_cf,
    first_column,
)

logger = logging.getLogger("bridgecensus")


@dataclass(frozen=True, order=True)
class TwoBridgeKnot:
    """Canonical representative of a 2-bridge knot; ordered by crossing, then q/p."""
    crossing: int
    fraction: Fraction
    std_cf: ContinuedFraction = field(compare=False)

    @property
    def q(self) -> int:
        return self.fraction.numerator

    @property
    def p(self) -> int:
        return self.fraction.denominator

    def __str__(self) -> str:
        return f"K({self.q}/{self.p})"


# Knots named in the literature, by a representative fraction
NAMED_KNOTS: dict[str, Fraction] = {
    "3_1": Fraction(1, 3),
    "4_1": Fraction(2, 5),
    "5_1": Fraction(1, 5),
    "5_2": Fraction(3, 7),
    "6_1": Fraction(2, 9),
    "6_2": Fraction(3, 11),
    "6_3": Fraction(5, 13),
    "9_1": Fraction(1, 9),
    "9_6": Fraction(5, 27),
    "9_23": Fraction(19, 45),
}


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------

def canonical_numerator(q: int, p: int) -> int:
    """Least member of ``{±q, ±q^-1} mod p`` lying in ``(0, p/2)``."""
    q0 = q % p
    inverse = pow(q0, -1, p)
    return min(q0, p - q0, inverse, p - inverse)


def _check_denominator(p: int) -> None:
    if p == 1:
        raise Trivial("denominator 1 describes the trivial knot")
    if p % 2 == 0:
        raise IsLink(f"denominator {p} is even: a 2-bridge link, not a knot")


def knot_from_terms(q: int, p: int) -> TwoBridgeKnot:
    """Canonical knot of ``q/p`` for coprime ``q``, odd ``p >= 3``."""
    canon = Fraction(canonical_numerator(q, p), p)
    std_cf = euclid_cf(canon)
    return TwoBridgeKnot(crossing=sum(std_cf), fraction=canon, std_cf=std_cf)


def canonicalize(f: Fraction) -> TwoBridgeKnot:
    """The TwoBridgeKnot of ``f``; any numerator is reduced modulo ``p`` first."""
    f = Fraction(f)
    _check_denominator(f.denominator)
    return knot_from_terms(f.numerator, f.denominator)


def knot_of_cf(cf: Sequence[int]) -> TwoBridgeKnot:
    return canonicalize(cf_eval(cf))


def source_key(cf: Sequence[int]) -> tuple[int, int]:
    """``(canonical q, p)`` of a continued fraction without building a knot."""
    m11, m21 = first_column(cf)
    p = abs(m11)
    _check_denominator(p)
    return canonical_numerator(m21, p), p


def equivalent(f1: Fraction, f2: Fraction) -> bool:
    """Schubert equivalence up to mirror image."""
    return canonicalize(f1) == canonicalize(f2)


def crossing_number(k: TwoBridgeKnot) -> int:
    return sum(k.std_cf)


def knot_name(k: TwoBridgeKnot) -> str | None:
    for name, fraction in NAMED_KNOTS.items():
        if canonicalize(fraction) == k:
            return name
    return None


# ---------------------------------------------------------------------------
# Even standard continued fractions
# ---------------------------------------------------------------------------

def _even_quotients(q: int, p: int) -> list[int]:
    """Euclidean expansion of ``q/p`` with every quotient even.

    Needs ``p`` odd and ``q`` even; remainders alternate in parity so the
    nearest even quotient is never a tie and the expansion has even length.
    """
    quotients: list[int] = []
    num, den = p, q
    while den:
        x = 2 * ((num + den) // (2 * den))
        quotients.append(x)
        num, den = den, num - x * den
    return quotients


def escf_variants(cf: Sequence[int]) -> list[ContinuedFraction]:
    """The four sequences equivalent under negation and reversal."""
    forward = tuple(cf)
    backward = forward[::-1]
    return [
        forward,
        tuple(-x for x in forward),
        backward,
        tuple(-x for x in backward),
    ]


def is_even_standard(cf: Sequence[int]) -> bool:
    """The structural constraints of an even standard continued fraction."""
    if not cf or len(cf) % 2 or cf[0] == 0 or cf[-1] == 0:
        return False
    if any(x not in (-2, 0, 2) for x in cf):
        return False
    return all(
        cf[i - 1] == cf[i + 1] != 0 for i in range(1, len(cf) - 1) if cf[i] == 0
    )


def even_standard_cf(k: TwoBridgeKnot) -> ContinuedFraction:
    """Canonical even standard continued fraction of ``k``.

    The lexicographically least of the four ±/reversal variants is returned.
    """
    q = k.q if k.q % 2 == 0 else k.q - k.p
    entries: list[int] = []
    for x in _even_quotients(q, k.p):
        step = 2 if x > 0 else -2
        for j in range(abs(x) // 2):
            if j:
                entries.append(0)
            entries.append(step)

    if not is_even_standard(entries) or canonicalize(cf_eval(entries)) != k:
        raise InconsistentResult(
            f"even expansion {entries} does not represent {k}"
        )
    return min(escf_variants(entries))


def escf_length(k: TwoBridgeKnot) -> int:
    return len(even_standard_cf(k))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _standard_compositions(n: int) -> Iterator[list[int]]:
    """Compositions of ``n`` with all parts >= 1 and both end parts >= 2."""

    def extend(prefix: list[int], remaining: int) -> Iterator[list[int]]:
        if remaining >= 2:
            yield prefix + [remaining]
        for part in range(1, remaining - 1):
            yield from extend(prefix + [part], remaining - part)

    for first in range(2, n + 1):
        if first == n:
            yield [n]
        else:
            yield from extend([first], n - first)


def enumerate_knots(n: int) -> frozenset[TwoBridgeKnot]:
    """All 2-bridge knots with crossing number exactly ``n``."""
    if n < 3:
        raise OutOfRange(f"crossing number {n} < 3")
    knots: set[TwoBridgeKnot] = set()
    for cf in _standard_compositions(n):
        # skip each reversed duplicate
        if cf[::-1] < cf:
            continue
        m11, m21 = first_column(cf)
        if m11 % 2 == 0:
            continue
        knots.add(knot_from_terms(m21, m11))
    logger.debug(f"{len(knots)} knots with {n} crossings")
    return frozenset(knots)

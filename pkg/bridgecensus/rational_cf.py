"""Continued fractions with matrix semantics and the rewriting calculus.

A continued fraction ``[a1, ..., am]`` stands for ``1/(a1 + 1/(a2 + ...))``
and is evaluated through the product of generator matrices
``((ai, 1), (1, 0))``: the first column ``(m11, m21)`` of the product gives
the value ``m21/m11``.  Rewriting operations (zero deletion, negative-entry
elimination, end absorption) change the entries but never the value.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, TypeAlias

from bridgecensus.errors import MalformedInput, OutOfRange, UndefinedValue

logger = logging.getLogger("bridgecensus")

ContinuedFraction: TypeAlias = tuple[int, ...]

HALF = Fraction(1, 2)


@dataclass(frozen=True, slots=True)
class Matrix2:
    """Integer 2x2 matrix ``((m11, m12), (m21, m22))``."""
    m11: int
    m12: int
    m21: int
    m22: int

    @classmethod
    def identity(cls) -> "Matrix2":
        return cls(1, 0, 0, 1)

    @classmethod
    def generator(cls, x: int) -> "Matrix2":
        """The matrix ``((x, 1), (1, 0))`` of a single entry (determinant -1)."""
        return cls(x, 1, 1, 0)

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def cf_matrix(cf: Iterable[int]) -> Matrix2:
    """Ordered product of the generator matrices; identity for ``[]``."""
    return reduce(
        lambda acc, x: acc @ Matrix2.generator(x), cf, Matrix2.identity()
    )


def first_column(cf: Sequence[int]) -> tuple[int, int]:
    """``(m11, m21)`` of ``cf_matrix(cf)``, folded from the right."""
    m11, m21 = 1, 0
    for x in reversed(cf):
        m11, m21 = x * m11 + m21, m11
    return m11, m21


def cf_eval(cf: Sequence[int]) -> Fraction:
    """Value of a continued fraction, in lowest terms with positive denominator."""
    m11, m21 = first_column(cf)
    if m11 == 0:
        raise UndefinedValue(f"continued fraction {list(cf)} has no value")
    return Fraction(m21, m11)


def euclid_cf(f: Fraction) -> ContinuedFraction:
    """All-positive expansion of ``0 < f < 1`` by floor division."""
    if not 0 < f < 1:
        raise OutOfRange(f"{f} is not in (0, 1)")
    p, q = f.denominator, f.numerator
    entries: list[int] = []
    while q:
        a, r = divmod(p, q)
        entries.append(a)
        p, q = q, r
    return tuple(entries)


# ---------------------------------------------------------------------------
# Rewriting
# ---------------------------------------------------------------------------

def _delete_zeros_in_place(entries: list[int]) -> None:
    while True:
        # interior zero: [.., x, 0, y, ..] -> [.., x + y, ..]
        for i in range(1, len(entries) - 1):
            if entries[i] == 0:
                entries[i - 1 : i + 2] = [entries[i - 1] + entries[i + 1]]
                break
        else:
            # trailing zero: [.., x, a, 0] -> [.., x]
            if len(entries) >= 2 and entries[-1] == 0:
                del entries[-2:]
                continue
            return


def delete_zeros(cf: Sequence[int]) -> ContinuedFraction:
    """Remove every interior and trailing zero, leftmost first.

    A leading zero followed by a nonzero entry is left in place.
    """
    entries = list(cf)
    _delete_zeros_in_place(entries)
    if first_column(entries)[0] == 0:
        raise UndefinedValue(f"continued fraction {list(cf)} has no value")
    return tuple(entries)


def _rewrite_block(
    entries: list[int], start: int, end: int, coverage: Counter | None
) -> list[int]:
    """Make the negative block ``entries[start:end]`` positive.

    The prefix ``entries[:start]`` is positive and nonempty; the entry after
    the block, if any, is positive.
    """
    head = entries[: start - 1]
    a_k = entries[start - 1]
    b = [-x for x in entries[start:end]]
    tail = entries[end:]

    if tail:
        c_1, rest = tail[0], tail[1:]
        if len(b) >= 2:
            rule = "case1"
            middle = [a_k - 1, 1, b[0] - 1, *b[1:-1], b[-1] - 1, 1, c_1 - 1]
        elif b[0] >= 2:
            rule = "case2"
            middle = [a_k - 1, 1, b[0] - 2, 1, c_1 - 1]
        else:
            # [.., a, -1, c, rest] = [.., a - 1, 1 - c, -rest]
            rule = "unit_pivot"
            middle = [a_k - 1, 1 - c_1]
            rest = [-x for x in rest]
        rewritten = head + middle + rest
    elif len(b) >= 2:
        rule = "case3"
        rewritten = head + [a_k - 1, 1, b[0] - 1, *b[1:]]
    else:
        # also holds for b1 = 1, where the trailing [1, 0] is dropped
        rule = "case4"
        rewritten = head + [a_k - 1, 1, b[0] - 1]

    if coverage is not None:
        coverage[rule] += 1
    return rewritten


def remove_negatives(
    cf: Sequence[int], coverage: Counter | None = None
) -> ContinuedFraction:
    """Rewrite ``cf`` into an all-positive continued fraction of equal value.

    The leftmost maximal negative block is rewritten each pass, followed by
    zero deletion.  Every pass strictly lowers the sum of absolute values of
    the entries, so the loop terminates.  If zero deletion ever leaves a
    nonpositive leading entry the value is re-expanded with ``euclid_cf``.

    Args:
        coverage: optional counter incremented once per rule application.
    """
    if not cf or cf[0] <= 0:
        raise MalformedInput(
            f"continued fraction {list(cf)} must start with a positive entry"
        )
    value = cf_eval(cf)
    if not 0 < value < 1:
        raise OutOfRange(f"{list(cf)} evaluates to {value}, not in (0, 1)")

    entries = list(cf)
    _delete_zeros_in_place(entries)
    while True:
        if entries[0] <= 0:
            logger.debug(
                f"Leading entry lost positivity in {entries}; "
                f"re-expanding {value}"
            )
            if coverage is not None:
                coverage["euclid_fallback"] += 1
            return euclid_cf(value)

        start = next((i for i, x in enumerate(entries) if x < 0), None)
        if start is None:
            # [.., a, 1] = [.., a + 1]
            if len(entries) > 1 and entries[-1] == 1:
                entries[-2:] = [entries[-2] + 1]
            return tuple(entries)
        end = start
        while end < len(entries) and entries[end] < 0:
            end += 1

        entries = _rewrite_block(entries, start, end, coverage)
        _delete_zeros_in_place(entries)


def standardize(cf: Sequence[int]) -> ContinuedFraction:
    """Standard continued fraction (entries > 0, ends >= 2) of equal value.

    Only values in ``(0, 1/2]`` have a standard expansion; anything above
    1/2 would need a leading 1 and raises ``OutOfRange``.
    """
    value = cf_eval(cf)
    if not 0 < value <= HALF:
        raise OutOfRange(f"{list(cf)} evaluates to {value}, not in (0, 1/2]")

    entries = remove_negatives(cf)
    if entries[0] < 2 or entries[-1] < 2:
        raise OutOfRange(f"{list(cf)} has no standard expansion")
    return tuple(entries)


def is_standard(cf: Sequence[int]) -> bool:
    return bool(cf) and all(x > 0 for x in cf) and cf[0] >= 2 and cf[-1] >= 2


def sign_change_crossing(cf: Sequence[int]) -> int:
    """Crossing number as the sum of absolute values minus the sign changes.

    Valid when the first entry is positive and, after zero deletion, every
    maximal sign block of length one has absolute value at least 2 (which is
    the case for every ORS expansion over a standard base).
    """
    entries = list(cf)
    _delete_zeros_in_place(entries)
    if not entries or entries[0] <= 0:
        raise MalformedInput(
            f"continued fraction {list(cf)} must start with a positive entry"
        )
    changes = sum(1 for x, y in zip(entries, entries[1:]) if x * y < 0)
    return sum(abs(x) for x in entries) - changes

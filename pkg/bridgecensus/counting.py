"""Closed-form counts and the exact EK census.

- ``tk(n)``: number of 2-bridge knots with ``n`` crossings.
- ``cumulative_tk(n)``: targets an ``n``-crossing knot could possibly have.
- ``genfun``: coefficients of the generating function counting the source
  knots of a target by crossing number.
- ``ek``: the largest number of proper nontrivial targets of a single
  ``n``-crossing knot, either bounded or computed by inverse enumeration.
"""

import logging
import math
from typing import Literal, Sequence

from bridgecensus.epimorphism import (
    enumerate_expansions,
    expansion_cf,
    expansion_count,
)
from bridgecensus.errors import BudgetExceeded, OutOfRange
from bridgecensus.knot import (
    TwoBridgeKnot,
    enumerate_knots,
    knot_from_terms,
    source_key,
)
from models import GenFunSeries, KnotInfo

logger = logging.getLogger("bridgecensus")


def binomial(a: int, b: int) -> int:
    if not 0 <= b <= a:
        raise OutOfRange(f"binomial({a}, {b}) needs 0 <= b <= a")
    return math.comb(a, b)


def tk(n: int) -> int:
    """Number of 2-bridge knots with crossing number ``n``."""
    if n < 3:
        raise OutOfRange(f"crossing number {n} < 3")
    match n % 4:
        case 0:
            return (2 ** (n - 3) + 2 ** ((n - 4) // 2)) // 3
        case 1:
            return (2 ** (n - 3) + 2 ** ((n - 3) // 2)) // 3
        case 2:
            return (2 ** (n - 3) + 2 ** ((n - 4) // 2) - 1) // 3
        case _:
            return (2 ** (n - 3) + 2 ** ((n - 3) // 2) + 1) // 3


def cumulative_tk(n: int) -> int:
    """Sum of ``tk(k)`` for ``3 <= k <= n // 3``; 0 below 9."""
    return sum(tk(k) for k in range(3, n // 3 + 1))


def ek_upper_bound(n: int) -> int:
    return max(0, (n - 3) // 6)


def is_palindromic(cf: Sequence[int]) -> bool:
    return list(cf) == list(cf)[::-1]


# ---------------------------------------------------------------------------
# Generating function
# ---------------------------------------------------------------------------

def expansion_coefficient(n: int, k: int) -> int:
    """Expansions of type ``2n+1`` with connector budget ``k``."""
    return 2 ** (2 * n) * binomial(2 * n + k - 1, k)


def symmetric_count(n: int, k: int) -> int:
    """Expansions equal to their own reversal (palindromic base only)."""
    if k % 2:
        return 0
    return 2**n * binomial(n + k // 2 - 1, k // 2)


def g(n: int, k: int) -> int:
    """Distinct knots of type ``2n+1`` and budget ``k`` over a palindromic base."""
    return (expansion_coefficient(n, k) + symmetric_count(n, k)) // 2


def genfun(target: TwoBridgeKnot, N: int) -> GenFunSeries:
    """Coefficients ``t^c`` for ``c <= N`` of the source-counting series."""
    if N < 3:
        raise OutOfRange(f"truncation {N} < 3")
    palindromic = is_palindromic(target.std_cf)
    coeffs: dict[int, int] = {}
    n = 1
    while (2 * n + 1) * target.crossing <= N:
        floor = (2 * n + 1) * target.crossing
        for k in range(N - floor + 1):
            term = g(n, k) if palindromic else expansion_coefficient(n, k)
            coeffs[floor + k] = coeffs.get(floor + k, 0) + term
        n += 1
    return GenFunSeries(
        target=KnotInfo.from_knot(target),
        coeffs=dict(sorted(coeffs.items())),
        truncation=N,
    )


# ---------------------------------------------------------------------------
# EK census
# ---------------------------------------------------------------------------

def candidate_targets(n: int) -> list[TwoBridgeKnot]:
    """Every knot an ``n``-crossing knot could map onto, smallest first."""
    return [
        knot
        for crossing in range(3, n // 3 + 1)
        for knot in sorted(enumerate_knots(crossing))
    ]


def census_cost(n: int) -> int:
    return sum(
        expansion_count(target.crossing, n, exact=True)
        for target in candidate_targets(n)
    )


def check_census_budget(n: int, budget: int | None) -> None:
    if budget is None:
        return
    cost = census_cost(n)
    if cost > budget:
        raise BudgetExceeded(
            f"EK({n}) needs {cost} expansions, budget is {budget}"
        )


def inverse_targets(
    target: TwoBridgeKnot, n: int
) -> dict[tuple[int, int], TwoBridgeKnot]:
    """Sources of ``target`` with exactly ``n`` crossings, keyed by (q, p)."""
    return {
        source_key(expansion_cf(e)): target
        for e in enumerate_expansions(target, n, exact=True)
    }


def merge_inverse(
    census: dict[tuple[int, int], set[TwoBridgeKnot]],
    found: dict[tuple[int, int], TwoBridgeKnot],
) -> None:
    for key, target in found.items():
        census.setdefault(key, set()).add(target)


def finish_census(
    census: dict[tuple[int, int], set[TwoBridgeKnot]],
) -> dict[TwoBridgeKnot, frozenset[TwoBridgeKnot]]:
    return dict(
        sorted(
            (knot_from_terms(q, p), frozenset(found))
            for (q, p), found in census.items()
        )
    )


def ek_census(
    n: int, budget: int | None = None
) -> dict[TwoBridgeKnot, frozenset[TwoBridgeKnot]]:
    """Target set of every ``n``-crossing knot that has at least one target."""
    check_census_budget(n, budget)
    census: dict[tuple[int, int], set[TwoBridgeKnot]] = {}
    for target in candidate_targets(n):
        merge_inverse(census, inverse_targets(target, n))
    return finish_census(census)


def ek(
    n: int,
    method: Literal["exact", "bound"] = "exact",
    budget: int | None = None,
) -> int:
    if n < 3:
        raise OutOfRange(f"crossing number {n} < 3")
    if method == "bound":
        return ek_upper_bound(n)
    census = ek_census(n, budget)
    value = max((len(found) for found in census.values()), default=0)
    logger.debug(f"EK({n}) = {value} over {len(census)} sources")
    return value


# Known EK values for 3 <= n <= 30
PUBLISHED_EK: dict[int, int] = {
    **{n: 0 for n in range(3, 9)},
    **{n: 1 for n in [*range(9, 15), 18, 19, 20, 24]},
    **{n: 2 for n in [15, 16, 17, 21, 22, 23, *range(25, 31)]},
}


def published_ek(n: int) -> int | None:
    return PUBLISHED_EK.get(n)

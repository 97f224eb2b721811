"""Epimorphisms between 2-bridge knot groups via ORS expansions.

Every epimorphism ``G(K(r~)) -> G(K(r))`` comes from an expansion of type
``2n+1`` over the standard continued fraction ``a`` of ``r``::

    r~ = [e1 a, 2c1, e2 a^-1, 2c2, ..., e2n a^-1, 2c2n, e2n+1 a]

with ``e1 = +1``.  The crossing number of ``K(r~)`` is
``(2n+1)|a| + sum(reduced_costs)``, so expansions are enumerated by
distributing a cost budget ``k`` over the ``2n`` connectors.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterator

from bridgecensus.errors import BudgetExceeded, OutOfRange
from bridgecensus.knot import (
    TwoBridgeKnot,
    enumerate_knots,
    knot_from_terms,
    source_key,
)
from bridgecensus.rational_cf import ContinuedFraction, is_standard

logger = logging.getLogger("bridgecensus")


@dataclass(frozen=True)
class OrsExpansion:
    """Data ``(a, n, eps, c)`` of an expansion of type ``2n+1``."""
    base: ContinuedFraction
    n: int
    eps: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise OutOfRange(f"type 2n+1 needs n >= 1, got n={self.n}")
        if len(self.eps) != 2 * self.n + 1 or len(self.c) != 2 * self.n:
            raise OutOfRange(
                f"n={self.n} needs {2 * self.n + 1} signs and "
                f"{2 * self.n} connectors"
            )
        if self.eps[0] != 1 or any(e not in (1, -1) for e in self.eps):
            raise OutOfRange(f"signs {self.eps} must be ±1 with eps1 = +1")
        if not is_standard(self.base):
            raise OutOfRange(f"base {self.base} is not standard")
        for i, ci in enumerate(self.c):
            if ci == 0 and self.eps[i] != self.eps[i + 1]:
                raise OutOfRange(
                    f"connector {i + 1} is zero across a sign change; "
                    f"the expansion reduces to a lower type"
                )

    @property
    def type(self) -> int:
        return 2 * self.n + 1


# ---------------------------------------------------------------------------
# Single-expansion operations
# ---------------------------------------------------------------------------

def expansion_cf(e: OrsExpansion) -> ContinuedFraction:
    forward = e.base
    backward = e.base[::-1]
    entries: list[int] = []
    for i, sign in enumerate(e.eps):
        block = forward if i % 2 == 0 else backward
        entries.extend(sign * x for x in block)
        if i < len(e.c):
            entries.append(2 * e.c[i])
    return tuple(entries)


def psi(e: OrsExpansion, i: int) -> int:
    """1 when ``eps_i * c_i < 0`` (1-based connector index)."""
    return 1 if e.eps[i - 1] * e.c[i - 1] < 0 else 0


def psi_bar(e: OrsExpansion, i: int) -> int:
    """1 when ``c_i * eps_{i+1} < 0`` (1-based connector index)."""
    return 1 if e.c[i - 1] * e.eps[i] < 0 else 0


def reduced_costs(e: OrsExpansion) -> tuple[int, ...]:
    return tuple(
        2 * abs(e.c[i - 1]) - psi(e, i) - psi_bar(e, i)
        for i in range(1, 2 * e.n + 1)
    )


def expansion_crossing(e: OrsExpansion) -> int:
    return e.type * sum(e.base) + sum(reduced_costs(e))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _connector_options(j: int, eps_i: int) -> tuple[tuple[int, int], ...]:
    """The two ``(c_i, eps_{i+1})`` realizing reduced cost ``j`` after ``eps_i``."""
    if j % 2 == 0:
        return (eps_i * j // 2, eps_i), (-eps_i * (j + 2) // 2, eps_i)
    return ((j + 1) // 2, -eps_i), (-(j + 1) // 2, -eps_i)


def _realizations(
    costs: tuple[int, ...],
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every ``(eps, c)`` with the given reduced costs; ``2^len(costs)`` in all."""

    def walk(i: int, eps: list[int], c: list[int]):
        if i == len(costs):
            yield tuple(eps), tuple(c)
            return
        for ci, eps_next in _connector_options(costs[i], eps[-1]):
            yield from walk(i + 1, eps + [eps_next], c + [ci])

    yield from walk(0, [1], [])


def _cost_compositions(k: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``k`` into ``parts`` nonnegative parts (stars and bars)."""
    for bars in itertools.combinations(range(k + parts - 1), parts - 1):
        previous = -1
        composition = []
        for bar in bars:
            composition.append(bar - previous - 1)
            previous = bar
        composition.append(k + parts - 2 - previous)
        yield tuple(composition)


def expansion_count(
    target_crossing: int, max_crossing: int, exact: bool = False
) -> int:
    """Number of expansions ``enumerate_expansions`` yields, in closed form."""
    total = 0
    n = 1
    while (2 * n + 1) * target_crossing <= max_crossing:
        top = max_crossing - (2 * n + 1) * target_crossing
        ks = [top] if exact else range(top + 1)
        total += sum(4**n * math.comb(2 * n + k - 1, k) for k in ks)
        n += 1
    return total


def _check_budget(
    target: TwoBridgeKnot, max_crossing: int, exact: bool, budget: int | None
) -> None:
    if budget is None:
        return
    count = expansion_count(target.crossing, max_crossing, exact)
    if count > budget:
        raise BudgetExceeded(
            f"{count} expansions over {target} up to {max_crossing} crossings "
            f"exceed the budget of {budget}"
        )


def _expansions_of_type(
    base: ContinuedFraction, n: int, k: int
) -> Iterator[OrsExpansion]:
    for costs in _cost_compositions(k, 2 * n):
        for eps, c in _realizations(costs):
            yield OrsExpansion(base=base, n=n, eps=eps, c=c)


def enumerate_expansions(
    target: TwoBridgeKnot, max_crossing: int, exact: bool = False
) -> Iterator[OrsExpansion]:
    """Every valid expansion over ``target.std_cf`` with crossing <= ``max_crossing``.

    Args:
        exact: yield only the expansions with crossing exactly ``max_crossing``.
    """
    n = 1
    while (2 * n + 1) * target.crossing <= max_crossing:
        top = max_crossing - (2 * n + 1) * target.crossing
        for k in [top] if exact else range(top + 1):
            yield from _expansions_of_type(target.std_cf, n, k)
        n += 1


def sources(
    target: TwoBridgeKnot,
    max_crossing: int,
    exact: bool = False,
    budget: int | None = None,
) -> dict[TwoBridgeKnot, list[OrsExpansion]]:
    """Source knots of ``target`` keyed in (crossing, fraction) order."""
    _check_budget(target, max_crossing, exact, budget)
    grouped: dict[tuple[int, int], list[OrsExpansion]] = {}
    for e in enumerate_expansions(target, max_crossing, exact):
        grouped.setdefault(source_key(expansion_cf(e)), []).append(e)

    result = {knot_from_terms(q, p): witnesses for (q, p), witnesses in grouped.items()}
    logger.debug(
        f"{len(result)} sources of {target} up to {max_crossing} crossings"
    )
    return dict(sorted(result.items()))


def find_witness(
    source: TwoBridgeKnot, target: TwoBridgeKnot
) -> OrsExpansion | None:
    """An expansion over ``target`` defining ``source``, or None.

    Types are searched from the largest ``n`` down, where the connector
    budget ``k = c(source) - (2n+1) c(target)`` is smallest.
    """
    key = (source.q, source.p)
    n = (source.crossing // target.crossing - 1) // 2
    while n >= 1:
        k = source.crossing - (2 * n + 1) * target.crossing
        for e in _expansions_of_type(target.std_cf, n, k):
            if source_key(expansion_cf(e)) == key:
                return e
        n -= 1
    return None


def admits_epimorphism(source: TwoBridgeKnot, target: TwoBridgeKnot) -> bool:
    if source.crossing < 3 * target.crossing:
        return False
    return find_witness(source, target) is not None


def targets(source: TwoBridgeKnot) -> dict[TwoBridgeKnot, OrsExpansion]:
    """Proper nontrivial targets of ``source`` with one witness each."""
    found: dict[TwoBridgeKnot, OrsExpansion] = {}
    for crossing in range(3, source.crossing // 3 + 1):
        for candidate in sorted(enumerate_knots(crossing)):
            witness = find_witness(source, candidate)
            if witness is not None:
                found[candidate] = witness
    return found

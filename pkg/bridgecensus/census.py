"""Parallel EK census: one inverse enumeration per candidate target."""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor

from tqdm.asyncio import tqdm_asyncio

from bridgecensus.counting import (
    candidate_targets,
    check_census_budget,
    finish_census,
    inverse_targets,
    merge_inverse,
)
from bridgecensus.knot import TwoBridgeKnot

logger = logging.getLogger("bridgecensus")


async def _expand_target(
    loop: asyncio.AbstractEventLoop,
    pool: ProcessPoolExecutor,
    target: TwoBridgeKnot,
    n: int,
) -> dict[tuple[int, int], TwoBridgeKnot]:
    found = await loop.run_in_executor(pool, inverse_targets, target, n)
    logger.debug(f"{target}: {len(found)} sources with {n} crossings")
    return found


async def run_census(
    n: int,
    max_workers: int | None = None,
    budget: int | None = None,
    show_progress: bool = True,
) -> dict[TwoBridgeKnot, frozenset[TwoBridgeKnot]]:
    """Target set of every ``n``-crossing knot with at least one target.

    Same result as ``counting.ek_census``; per-target results are merged by
    set union, so worker scheduling does not affect the output.
    """
    check_census_budget(n, budget)
    candidates = candidate_targets(n)
    logger.info(
        f"Census of {n}-crossing sources over {len(candidates)} targets"
    )

    census: dict[tuple[int, int], set[TwoBridgeKnot]] = {}
    if candidates:
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            tasks = [_expand_target(loop, pool, t, n) for t in candidates]
            results = await tqdm_asyncio.gather(
                *tasks,
                desc=f"Expanding targets (n={n})",
                disable=not show_progress,
            )
        for found in results:
            merge_inverse(census, found)

    result = finish_census(census)
    logger.info(f"Census complete: {len(result)} sources with targets")
    return result

"""
2-Bridge Knot Epimorphism Census
================================
Normalize fractions → decide epimorphisms → enumerate sources, targets and
EK censuses → regenerate the counting tables.

Usage:
    python main.py normalize 29/81
    python main.py epi 5/27 1/3
    python main.py sources 1/3 --max-crossing 11 --format csv
    python main.py census --crossing 15 --format json
    python main.py tables --which genfun --target 1/3 --max-exp 25
"""

import argparse
import asyncio
import logging
import sys
from fractions import Fraction

from bridgecensus.census import run_census
from bridgecensus.counting import cumulative_tk, ek_upper_bound, genfun, published_ek, tk
from bridgecensus.emitters import census_frame, emit, table_frame, target_set_frame
from bridgecensus.epimorphism import OrsExpansion, find_witness, sources, targets
from bridgecensus.errors import (
    BudgetExceeded,
    IsLink,
    MalformedInput,
    OutOfRange,
    Trivial,
    UndefinedValue,
)
from bridgecensus.knot import NAMED_KNOTS, TwoBridgeKnot, even_standard_cf
from bridgecensus.rational_cf import cf_eval, euclid_cf, standardize
from config import settings
from models import (
    CensusRecord,
    EpiResult,
    ExpansionInfo,
    KnotInfo,
    NormalizeResult,
    OutputRecord,
    TargetSetRecord,
)
from utils import (
    format_cf,
    format_eps,
    is_cf_text,
    parse_cf,
    parse_fraction,
    parse_knot_input,
)

logger = logging.getLogger("bridgecensus")

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_LINK = 3
EXIT_BUDGET = 4


# ---------------------------------------------------------------------------
# Logging
# ---------------------------------------------------------------------------
def configure_logging(level: str, log_file: str | None) -> None:
    # stdout carries command output only
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=level.upper(),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        handlers=handlers,
        force=True,
    )


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------
def record(command: str, payload: dict) -> OutputRecord:
    return OutputRecord(
        schema_version=settings.schema_version,
        command=command,
        payload=payload,
    )


def resolve_budget(args: argparse.Namespace) -> int:
    return args.budget if args.budget is not None else settings.expansion_budget


def resolve_workers(args: argparse.Namespace) -> int | None:
    return args.workers if args.workers is not None else settings.max_workers


def census_of(
    n: int, args: argparse.Namespace
) -> dict[TwoBridgeKnot, frozenset[TwoBridgeKnot]]:
    return asyncio.run(
        run_census(
            n,
            max_workers=resolve_workers(args),
            budget=resolve_budget(args),
            show_progress=settings.show_progress and not args.no_progress,
        )
    )


def check_published(n: int, value: int) -> None:
    expected = published_ek(n)
    if expected is not None and expected != value:
        logger.warning(
            f"EK({n}) = {value} differs from the published value {expected}; "
            f"check which targets the definition admits"
        )


def _input_value(text: str, knot: TwoBridgeKnot) -> Fraction:
    if is_cf_text(text):
        return cf_eval(parse_cf(text))
    if text.strip() in NAMED_KNOTS:
        return knot.fraction
    return parse_fraction(text)


def _input_standard_cf(value: Fraction) -> tuple[int, ...]:
    """Standard CF of the input's own fraction, folded into (0, 1/2]."""
    p = value.denominator
    q = value.numerator % p
    return standardize(euclid_cf(Fraction(min(q, p - q), p)))


def _witness_record(
    source: TwoBridgeKnot, target: TwoBridgeKnot, witness: OrsExpansion
) -> CensusRecord:
    return CensusRecord(
        source=KnotInfo.from_knot(source),
        target=KnotInfo.from_knot(target),
        witness=ExpansionInfo.from_expansion(witness),
    )


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------
def cmd_normalize(args: argparse.Namespace) -> int:
    text = args.input
    knot = parse_knot_input(text)
    value = _input_value(text, knot)

    result = NormalizeResult(
        input=text,
        input_fraction=f"{value.numerator}/{value.denominator}",
        input_std_cf=list(_input_standard_cf(value)),
        knot=KnotInfo.from_knot(knot),
        even_std_cf=list(even_standard_cf(knot)),
    )
    frame = table_frame(
        [
            {
                "input": result.input,
                "fraction": result.knot.fraction,
                "name": result.knot.name or "",
                "std_cf": format_cf(result.input_std_cf),
                "crossing": result.knot.crossing,
                "even_std_cf": format_cf(result.even_std_cf),
            }
        ],
        ["input", "fraction", "name", "std_cf", "crossing", "even_std_cf"],
    )
    emit([record("normalize", result.model_dump())], frame, args.format, args.output)
    return EXIT_OK


def cmd_epi(args: argparse.Namespace) -> int:
    source = parse_knot_input(args.source)
    target = parse_knot_input(args.target)

    witness = None
    if source.crossing >= 3 * target.crossing:
        witness = find_witness(source, target)

    result = EpiResult(
        source=KnotInfo.from_knot(source),
        target=KnotInfo.from_knot(target),
        epimorphism=witness is not None,
        witness=ExpansionInfo.from_expansion(witness) if witness else None,
    )
    frame = table_frame(
        [
            {
                "source": result.source.fraction,
                "target": result.target.fraction,
                "epimorphism": result.epimorphism,
                "n": witness.n if witness else "",
                "eps": format_eps(witness.eps) if witness else "",
                "c": ";".join(str(ci) for ci in witness.c) if witness else "",
            }
        ],
        ["source", "target", "epimorphism", "n", "eps", "c"],
    )
    emit([record("epi", result.model_dump())], frame, args.format, args.output)
    return EXIT_OK


def cmd_sources(args: argparse.Namespace) -> int:
    target = parse_knot_input(args.target)
    found = sources(target, args.max_crossing, budget=resolve_budget(args))

    records: list[CensusRecord] = []
    for source, witnesses in found.items():
        chosen = witnesses if args.all_witnesses else witnesses[:1]
        records.extend(_witness_record(source, target, w) for w in chosen)
    logger.info(
        f"{len(found)} sources of {target} up to {args.max_crossing} crossings"
    )
    emit(
        [record("sources", r.model_dump()) for r in records],
        census_frame(records),
        args.format,
        args.output,
    )
    return EXIT_OK


def cmd_targets(args: argparse.Namespace) -> int:
    source = parse_knot_input(args.source)
    found = targets(source)
    records = [_witness_record(source, t, w) for t, w in found.items()]
    logger.info(f"{source} maps onto {len(records)} proper nontrivial targets")
    emit(
        [record("targets", r.model_dump()) for r in records],
        census_frame(records),
        args.format,
        args.output,
    )
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    n = args.crossing
    if n < 3:
        raise OutOfRange(f"crossing number {n} < 3")
    census = census_of(n, args)

    records = [
        TargetSetRecord(
            source=KnotInfo.from_knot(source),
            targets=[KnotInfo.from_knot(t) for t in sorted(found)],
        )
        for source, found in census.items()
    ]
    value = max((len(r.targets) for r in records), default=0)
    check_published(n, value)

    summary = {
        "n": n,
        "ek": value,
        "ek_upper_bound": ek_upper_bound(n),
        "sources_with_targets": len(records),
    }
    emit(
        [record("census", r.model_dump()) for r in records]
        + [record("census_summary", summary)],
        target_set_frame(records),
        args.format,
        args.output,
        footer=f"EK({n}) = {value}",
    )
    return EXIT_OK


def _tk_table(args: argparse.Namespace) -> tuple[list[dict], list[str]]:
    top = args.max if args.max is not None else 16
    return [{"n": n, "tk": tk(n)} for n in range(3, top + 1)], ["n", "tk"]


def _table1(args: argparse.Namespace) -> tuple[list[dict], list[str]]:
    top = args.max if args.max is not None else 32
    rows = [
        {
            "crossings": ",".join(str(n) for n in range(start, start + 3)),
            "cumulative_tk": cumulative_tk(start),
        }
        for start in range(9, top + 1, 3)
    ]
    return rows, ["crossings", "cumulative_tk"]


def _ek_table(args: argparse.Namespace) -> tuple[list[dict], list[str]]:
    top = args.max if args.max is not None else settings.ek_ci_max
    if top > settings.ek_ci_max and not args.long:
        raise OutOfRange(
            f"EK beyond n={settings.ek_ci_max} is a long run; pass --long"
        )
    if top > settings.ek_long_max:
        raise OutOfRange(f"EK is computed up to n={settings.ek_long_max}")

    rows = []
    for n in range(3, top + 1):
        census = census_of(n, args)
        value = max((len(found) for found in census.values()), default=0)
        check_published(n, value)
        expected = published_ek(n)
        rows.append(
            {
                "n": n,
                "ek": value,
                "published": "" if expected is None else expected,
                "upper_bound": ek_upper_bound(n),
                "cumulative_tk": cumulative_tk(n),
            }
        )
    return rows, ["n", "ek", "published", "upper_bound", "cumulative_tk"]


def _genfun_table(args: argparse.Namespace) -> tuple[list[dict], list[str]]:
    target = parse_knot_input(args.target)
    series = genfun(target, args.max_exp)
    rows = [
        {"exponent": c, "coefficient": coeff}
        for c, coeff in series.coeffs.items()
    ]
    return rows, ["exponent", "coefficient"]


TABLES = {
    "tk": _tk_table,
    "table1": _table1,
    "ek": _ek_table,
    "genfun": _genfun_table,
}


def cmd_tables(args: argparse.Namespace) -> int:
    rows, columns = TABLES[args.which](args)
    emit(
        [record(f"tables.{args.which}", row) for row in rows],
        table_frame(rows, columns),
        args.format,
        args.output,
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", "-f", choices=["json", "csv", "text"], default="text",
        help="Output format (json is JSON Lines)",
    )
    common.add_argument(
        "--output", "-o", default=None, help="Write to this path instead of stdout"
    )
    common.add_argument(
        "--budget", type=int, default=None,
        help="Cap on enumerated expansions (overrides BRIDGECENSUS_BUDGET)",
    )
    common.add_argument(
        "--workers", "-w", type=int, default=None,
        help="Process pool size for census runs",
    )
    common.add_argument(
        "--no-progress", action="store_true", help="Hide progress bars"
    )
    common.add_argument(
        "--log-level", default=None, help="Override the configured log level"
    )

    parser = argparse.ArgumentParser(
        description="2-bridge knot group epimorphism census"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "normalize", parents=[common],
        help="Canonical fraction, standard and even CF, crossing number",
    )
    p.add_argument("input", help="q/p, [a1,a2,...] or a knot name like 5_2")
    p.set_defaults(handler=cmd_normalize)

    p = sub.add_parser(
        "epi", parents=[common], help="Decide G(source) -> G(target) with a witness"
    )
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(handler=cmd_epi)

    p = sub.add_parser(
        "sources", parents=[common], help="Every knot whose group maps onto the target's"
    )
    p.add_argument("target")
    p.add_argument("--max-crossing", "-n", type=int, required=True)
    p.add_argument(
        "--all-witnesses", action="store_true",
        help="One record per witness expansion instead of per source",
    )
    p.set_defaults(handler=cmd_sources)

    p = sub.add_parser(
        "targets", parents=[common], help="Proper nontrivial targets of a knot"
    )
    p.add_argument("source")
    p.set_defaults(handler=cmd_targets)

    p = sub.add_parser(
        "census", parents=[common],
        help="Target sets of every N-crossing knot and the resulting EK(N)",
    )
    p.add_argument("--crossing", "-n", type=int, required=True)
    p.set_defaults(handler=cmd_census)

    p = sub.add_parser("tables", parents=[common], help="Counting tables")
    p.add_argument("--which", choices=sorted(TABLES), required=True)
    p.add_argument("--max", type=int, default=None, help="Largest n in the table")
    p.add_argument("--target", default="1/3", help="Target knot for genfun")
    p.add_argument("--max-exp", type=int, default=25, help="Truncation for genfun")
    p.add_argument(
        "--long", action="store_true",
        help=f"Allow EK up to n={settings.ek_long_max}",
    )
    p.set_defaults(handler=cmd_tables)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level or settings.log_level, settings.log_file)

    try:
        return args.handler(args)
    except BudgetExceeded as e:
        logger.error(f"Budget exceeded: {e}")
        return EXIT_BUDGET
    except (IsLink, Trivial) as e:
        logger.error(f"Not a nontrivial knot: {e}")
        return EXIT_LINK
    except (MalformedInput, UndefinedValue, OutOfRange) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

"""Text / CSV / JSON Lines writers for command output."""

import logging
import sys
from pathlib import Path
from typing import Literal

import pandas as pd

from models import CensusRecord, KnotInfo, OutputRecord, TargetSetRecord
from utils import format_eps

logger = logging.getLogger("bridgecensus")

OutputFormat = Literal["json", "csv", "text"]

CENSUS_COLUMNS = [
    "source_p",
    "source_q",
    "source_crossing",
    "target_p",
    "target_q",
    "target_crossing",
    "n",
    "eps",
    "c",
]

TARGET_SET_COLUMNS = [
    "source_p",
    "source_q",
    "source_crossing",
    "target_count",
    "targets",
]


# ---------------------------------------------------------------------------
# Frames
# ---------------------------------------------------------------------------

def census_frame(records: list[CensusRecord]) -> pd.DataFrame:
    """Flat rows in the census CSV layout, one per (source, witness)."""
    rows = [
        {
            "source_p": r.source.p,
            "source_q": r.source.q,
            "source_crossing": r.source.crossing,
            "target_p": r.target.p,
            "target_q": r.target.q,
            "target_crossing": r.target.crossing,
            "n": r.witness.n,
            "eps": format_eps(r.witness.eps),
            "c": ";".join(str(ci) for ci in r.witness.c),
        }
        for r in records
    ]
    return pd.DataFrame(rows, columns=CENSUS_COLUMNS)


def _knot_list(knots: list[KnotInfo]) -> str:
    return ";".join(k.fraction for k in knots)


def target_set_frame(records: list[TargetSetRecord]) -> pd.DataFrame:
    rows = [
        {
            "source_p": r.source.p,
            "source_q": r.source.q,
            "source_crossing": r.source.crossing,
            "target_count": len(r.targets),
            "targets": _knot_list(r.targets),
        }
        for r in records
    ]
    return pd.DataFrame(rows, columns=TARGET_SET_COLUMNS)


def table_frame(rows: list[dict], columns: list[str]) -> pd.DataFrame:
    """Generic table; big integers are kept as Python ints (object dtype)."""
    return pd.DataFrame(rows, columns=columns, dtype=object)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def render(
    records: list[OutputRecord],
    frame: pd.DataFrame,
    fmt: OutputFormat,
    footer: str | None = None,
) -> str:
    if fmt == "json":
        return "".join(r.model_dump_json() + "\n" for r in records)
    if fmt == "csv":
        return frame.to_csv(index=False, lineterminator="\n")
    if frame.empty:
        text = "(no rows)\n"
    else:
        text = frame.to_string(index=False) + "\n"
    if footer:
        text += footer + "\n"
    return text


def emit(
    records: list[OutputRecord],
    frame: pd.DataFrame,
    fmt: OutputFormat,
    output_path: str | None = None,
    footer: str | None = None,
) -> None:
    """Write rendered output to ``output_path`` or stdout."""
    text = render(records, frame, fmt, footer)
    if output_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(output_path).write_text(text, encoding="utf-8")
    logger.info(f"Output written to {output_path}")

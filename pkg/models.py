"""Pydantic records for everything the CLI emits."""

import re
from typing import Any, Optional

from pydantic import BaseModel, field_serializer, field_validator

from bridgecensus.epimorphism import (
    OrsExpansion,
    expansion_cf,
    expansion_crossing,
)
from bridgecensus.knot import TwoBridgeKnot, knot_name

# Largest integer a JSON reader with IEEE doubles holds exactly
MAX_SAFE_INTEGER = 2**53 - 1


def _safe_ints(value: Any) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > MAX_SAFE_INTEGER else value
    if isinstance(value, dict):
        return {k: _safe_ints(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_safe_ints(v) for v in value]
    return value


_BIG_INT = re.compile(r"-?\d+")


def _restore_ints(value: Any) -> Any:
    """Inverse of ``_safe_ints``: decimal strings beyond the safe range become ints."""
    if isinstance(value, str) and _BIG_INT.fullmatch(value):
        number = int(value)
        return number if abs(number) > MAX_SAFE_INTEGER else value
    if isinstance(value, dict):
        return {k: _restore_ints(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_restore_ints(v) for v in value]
    return value


class KnotInfo(BaseModel):
    """A knot as canonical fraction plus crossing number."""
    fraction: str
    q: int
    p: int
    crossing: int
    std_cf: list[int]
    name: Optional[str] = None

    @classmethod
    def from_knot(cls, k: TwoBridgeKnot) -> "KnotInfo":
        return cls(
            fraction=f"{k.q}/{k.p}",
            q=k.q,
            p=k.p,
            crossing=k.crossing,
            std_cf=list(k.std_cf),
            name=knot_name(k),
        )


class ExpansionInfo(BaseModel):
    base: list[int]
    n: int
    type: int
    eps: list[int]
    c: list[int]
    cf: list[int]
    crossing: int

    @classmethod
    def from_expansion(cls, e: OrsExpansion) -> "ExpansionInfo":
        return cls(
            base=list(e.base),
            n=e.n,
            type=e.type,
            eps=list(e.eps),
            c=list(e.c),
            cf=list(expansion_cf(e)),
            crossing=expansion_crossing(e),
        )


class NormalizeResult(BaseModel):
    input: str
    input_fraction: str
    input_std_cf: list[int]
    knot: KnotInfo
    even_std_cf: list[int]


class EpiResult(BaseModel):
    source: KnotInfo
    target: KnotInfo
    epimorphism: bool
    witness: Optional[ExpansionInfo] = None


class CensusRecord(BaseModel):
    """One (source, witness) pair of a sources enumeration."""
    source: KnotInfo
    target: KnotInfo
    witness: ExpansionInfo


class TargetSetRecord(BaseModel):
    source: KnotInfo
    targets: list[KnotInfo]


class GenFunSeries(BaseModel):
    """Coefficients of ``t^c`` for every ``c <= truncation`` (zero ones omitted)."""
    target: KnotInfo
    coeffs: dict[int, int]
    truncation: int

    def coefficient(self, c: int) -> int:
        return self.coeffs.get(c, 0)


class OutputRecord(BaseModel):
    schema_version: str
    command: str
    payload: dict[str, Any]

    @field_validator("payload", mode="before")
    @classmethod
    def restore_payload(cls, payload: Any) -> Any:
        return _restore_ints(payload)

    @field_serializer("payload")
    def serialize_payload(self, payload: dict[str, Any]) -> dict[str, Any]:
        return _safe_ints(payload)

"""Structured results: dataclasses plus lossless JSON round-tripping.

Every scalar is serialized as text - "p/q" or decimal in exact mode, a
decimal with enough digits to survive re-parsing in float mode - so a
report can be reloaded without losing the certificates' meaning.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from eigencert.numerics import EXACT, ParseError, float_backend


@dataclass
class DiskRecord:
    row: int
    center: str
    radius: str
    verdict: str


@dataclass
class IntervalRecord:
    lo: str
    hi: str
    contains_real: bool
    sigma_hq: int | None
    min_root_count: int
    sources: list = field(default_factory=list)


@dataclass
class FinalIntervalRecord:
    lo: str
    hi: str
    width: str
    min_root_count: int
    sources: list = field(default_factory=list)


@dataclass
class Report:
    n: int
    mode: str
    bits: int | None
    epsilon: str
    characteristic_polynomial: list  # ascending coefficient strings
    sigma_h1: int
    disks: list
    initial_intervals: list
    final_intervals: list
    point_eigenvalues: list
    metrics: dict


def scalar_text(value, backend) -> str:
    return backend.to_text(value)


def text_scalar(text: str) -> Fraction:
    """Exact value of any scalar string a report can contain."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad scalar in report: {text!r}") from exc


def _backend_for(mode: str, bits):
    return EXACT if mode == "exact" else float_backend(bits)


def compute_metrics(final_records, mode: str, bits, wall_time: float | None) -> dict:
    """Width statistics recomputed from serialized final intervals.

    Deterministic given the records: the same backend arithmetic and the
    same formatting produce the same strings, which is what the round-trip
    tests rely on.
    """
    backend = _backend_for(mode, bits)
    widths = [
        backend.convert(text_scalar(rec.hi)) - backend.convert(text_scalar(rec.lo))
        for rec in final_records
    ]
    metrics = {
        "candidate_interval_count": None,  # caller fills
        "final_interval_count": len(final_records),
        "max_width": None,
        "average_width": None,
        "wall_time_seconds": wall_time,
    }
    if widths:
        total = widths[0]
        biggest = widths[0]
        for w in widths[1:]:
            total = total + w
            if w > biggest:
                biggest = w
        metrics["max_width"] = scalar_text(biggest, backend)
        metrics["average_width"] = scalar_text(total / len(widths), backend)
    return metrics


def build_report(result, final_intervals, *, epsilon_text: str, mode: str,
                 bits, wall_time: float) -> Report:
    """Assemble the full report from a LocateResult and refined intervals."""
    backend = result.context.backend
    txt = lambda v: scalar_text(v, backend)
    disks = [
        DiskRecord(d.row, txt(d.center), txt(d.radius), d.verdict)
        for d in result.disks
    ]
    initial = [
        IntervalRecord(
            txt(t.lo), txt(t.hi), t.contains_real, t.sigma, t.min_root_count,
            list(t.sources),
        )
        for t in result.tested
    ]
    final = [
        FinalIntervalRecord(
            txt(iv.lo), txt(iv.hi), txt(iv.hi - iv.lo), iv.min_root_count,
            list(iv.sources),
        )
        for iv in final_intervals
    ]
    metrics = compute_metrics(final, mode, bits, wall_time)
    metrics["candidate_interval_count"] = len(initial)
    return Report(
        n=result.context.original.degree(),
        mode=mode,
        bits=bits,
        epsilon=epsilon_text,
        characteristic_polynomial=[txt(c) for c in result.context.original.coeffs],
        sigma_h1=result.context.base_signature,
        disks=disks,
        initial_intervals=initial,
        final_intervals=final,
        point_eigenvalues=[txt(p) for p in result.points],
        metrics=metrics,
    )


def to_dict(report: Report) -> dict:
    return asdict(report)


def to_json(report: Report) -> str:
    return json.dumps(to_dict(report), indent=2)


def from_dict(data: dict) -> Report:
    try:
        return Report(
            n=data["n"],
            mode=data["mode"],
            bits=data["bits"],
            epsilon=data["epsilon"],
            characteristic_polynomial=list(data["characteristic_polynomial"]),
            sigma_h1=data["sigma_h1"],
            disks=[DiskRecord(**d) for d in data["disks"]],
            initial_intervals=[IntervalRecord(**d) for d in data["initial_intervals"]],
            final_intervals=[FinalIntervalRecord(**d) for d in data["final_intervals"]],
            point_eigenvalues=list(data["point_eigenvalues"]),
            metrics=dict(data["metrics"]),
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed report payload: {exc}") from exc


def from_json(text: str) -> Report:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"report is not valid JSON: {exc}") from exc
    return from_dict(data)

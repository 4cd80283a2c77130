"""Preset lookup and serialization of tables, series, and check reports.

Output is deterministic: terms are emitted in sorted order, JSON keys are
sorted, and every emitted payload carries a schema tag so parse() can
reconstruct the value.  The plain format is presentation-only.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .betti import AlgebraPreset, BettiTable
from .series import BiSeries, _t_poly_str
from .wreath import PRESETS, gamma_preset

_SERIES_SCHEMA = "wreath-hochschild/series-v1"
_TABLE_SCHEMA = "wreath-hochschild/table-v1"
_REPORT_SCHEMA = "wreath-hochschild/report-v1"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification suite: a pass flag plus detail lines."""

    name: str
    passed: bool
    lines: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(str(x) for x in self.lines))

    @classmethod
    def combine(cls, name: str, parts: list["CheckReport"]) -> "CheckReport":
        lines = []
        for p in parts:
            lines.append(f"[{'pass' if p.passed else 'FAIL'}] {p.name}")
            lines.extend("  " + ln for ln in p.lines)
        return cls(name, all(p.passed for p in parts), tuple(lines))


def load_preset(name: str) -> AlgebraPreset:
    """Resolve a preset by catalog name, gamma:<nu>, or a JSON file/string.

    JSON schema: {"name": str, "d": even int, "betti": [b0, b1, ...]}
    with list index equal to degree.
    """
    if name in PRESETS:
        return PRESETS[name]
    if name.startswith("gamma:"):
        try:
            nu = int(name.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad gamma preset {name!r}: expected gamma:<int>")
        return gamma_preset(nu)
    if name.lstrip().startswith("{"):
        data = json.loads(name)
    elif os.path.exists(name):
        with open(name, "rb") as fh:
            data = json.load(fh)
    else:
        known = ", ".join(sorted(PRESETS))
        raise ValueError(f"unknown preset {name!r} (known: {known}, gamma:<nu>, or JSON)")
    if not isinstance(data, dict) or not {"name", "d", "betti"} <= set(data):
        raise ValueError("preset JSON needs keys name, d, betti")
    betti = data["betti"]
    if not isinstance(betti, list) or not all(isinstance(b, int) for b in betti):
        raise ValueError("betti must be a list of integers")
    # BettiTable rejects negative dims; AlgebraPreset rejects odd d and
    # support outside [0, d]
    return AlgebraPreset(str(data["name"]), int(data["d"]),
                         BettiTable(dict(enumerate(betti))))


def emit(obj, format: str = "json") -> bytes:
    """Serialize a BiSeries, BettiTable, or CheckReport.

    Formats: json (round-trips via parse), csv (rows (n, i, dim) for a
    series, (degree, dim) for a table), plain (human-readable).
    """
    if format not in ("json", "csv", "plain"):
        raise ValueError(f"unknown format {format!r}")
    if isinstance(obj, BiSeries):
        return _emit_series(obj, format)
    if isinstance(obj, BettiTable):
        return _emit_table(obj, format)
    if isinstance(obj, CheckReport):
        return _emit_report(obj, format)
    raise TypeError(f"cannot emit {type(obj).__name__}")


def _emit_series(s: BiSeries, format: str) -> bytes:
    if format == "json":
        doc = {
            "schema": _SERIES_SCHEMA,
            "q_bound": s.q_bound,
            "t_bound": s.t_bound,
            "terms": [list(t) for t in s.terms()],
        }
        return _json_bytes(doc)
    if format == "csv":
        lines = ["n,i,dim"]
        lines += [f"{n},{i},{c}" for n, i, c in s.terms()]
        return ("\n".join(lines) + "\n").encode()
    lines = [f"series truncated at q^{s.q_bound}, t^{s.t_bound}"]
    for n in range(s.q_bound + 1):
        lines.append(f"q^{n}: {_t_poly_str(s.q_coefficient(n))}")
    return ("\n".join(lines) + "\n").encode()


def _emit_table(t: BettiTable, format: str) -> bytes:
    dims = t.dims()
    if format == "json":
        doc = {
            "schema": _TABLE_SCHEMA,
            "dims": {str(k): dims[k] for k in sorted(dims)},
        }
        return _json_bytes(doc)
    if format == "csv":
        lines = ["degree,dim"]
        lines += [f"{k},{dims[k]}" for k in sorted(dims)]
        return ("\n".join(lines) + "\n").encode()
    return (_t_poly_str(dims) + "\n").encode()


def _emit_report(r: CheckReport, format: str) -> bytes:
    if format == "json":
        doc = {
            "schema": _REPORT_SCHEMA,
            "name": r.name,
            "passed": r.passed,
            "lines": list(r.lines),
        }
        return _json_bytes(doc)
    if format == "csv":
        lines = ["name,passed"]
        lines.append(f"{r.name},{int(r.passed)}")
        return ("\n".join(lines) + "\n").encode()
    status = "PASS" if r.passed else "FAIL"
    lines = [f"{status} {r.name}"] + ["  " + ln for ln in r.lines]
    return ("\n".join(lines) + "\n").encode()


def _json_bytes(doc: dict) -> bytes:
    return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode()


def parse(data: bytes):
    """Inverse of emit for the json and csv formats."""
    text = data.decode()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(text)
        schema = doc.get("schema")
        if schema == _SERIES_SCHEMA:
            return BiSeries.from_terms(doc["q_bound"], doc["t_bound"],
                                       [tuple(t) for t in doc["terms"]])
        if schema == _TABLE_SCHEMA:
            return BettiTable({int(k): v for k, v in doc["dims"].items()})
        if schema == _REPORT_SCHEMA:
            return CheckReport(doc["name"], doc["passed"], tuple(doc["lines"]))
        raise ValueError(f"unknown schema {schema!r}")
    lines = [ln for ln in text.splitlines() if ln]
    if not lines:
        raise ValueError("empty payload")
    header = lines[0]
    if header == "n,i,dim":
        terms = [tuple(int(x) for x in ln.split(",")) for ln in lines[1:]]
        qb = max((n for n, _, _ in terms), default=0)
        tb = max((i for _, i, _ in terms), default=0)
        return BiSeries.from_terms(qb, tb, terms)
    if header == "degree,dim":
        rows = [tuple(int(x) for x in ln.split(",")) for ln in lines[1:]]
        return BettiTable(dict(rows))
    raise ValueError("unrecognized payload")

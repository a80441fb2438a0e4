"""Versioned JSON document formats for graphs, targets, and reports.

Rationals always cross the boundary as "p/q" strings (or bare integer
strings); JSON floats are rejected so exactness survives round trips.
Serialization is canonical -- fixed key order, two-space indent, a
trailing newline -- so parse followed by serialize is byte-identical on
canonical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Union

from .boolfn import PartialBooleanFunction
from .core import (
    WDG,
    build_wdg,
    format_assignment,
    format_rational,
    l1_norm,
    l1_norm_with_shift,
    parse_assignment,
)
from .errors import DocumentError, WdgError
from .optimize import OptimizationResult, PartialFunctionSpec
from .oracle import advantage_indicator, extrema, vertex_weight_bound

FORMAT_VERSION = 1


def _dump(document: dict) -> str:
    return json.dumps(document, indent=2) + "\n"


def _load(text: str) -> dict:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise DocumentError("document must be a JSON object")
    return document


def _expect_keys(document: dict, keys: tuple) -> None:
    extra = set(document) - set(keys)
    missing = set(keys) - set(document)
    if extra or missing:
        raise DocumentError(
            f"document keys {sorted(document)} do not match expected {list(keys)}"
        )
    if document["format_version"] != FORMAT_VERSION:
        raise DocumentError(
            f"unsupported format_version {document['format_version']!r}"
        )


def _rational_field(value: Union[str, int], field: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError(f"{field} must be a rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"{field} is not a rational: {value!r}") from exc
    raise DocumentError(f"{field} must be a rational string, got {value!r}")


def _int_field(value, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{field} must be an integer, got {value!r}")
    return value


def serialize_wdg(wdg: WDG) -> str:
    return _dump(
        {
            "format_version": FORMAT_VERSION,
            "dimension": wdg.dimension,
            "shift": format_rational(wdg.shift),
            "edges": [
                {"u": e.u, "v": e.v, "w": format_rational(e.weight)}
                for e in wdg.edges
            ],
        }
    )


def parse_wdg_document(text: str) -> WDG:
    document = _load(text)
    _expect_keys(document, ("format_version", "dimension", "shift", "edges"))
    dimension = _int_field(document["dimension"], "dimension")
    shift = _rational_field(document["shift"], "shift")
    if not isinstance(document["edges"], list):
        raise DocumentError("edges must be a list")
    edges = []
    for entry in document["edges"]:
        if not isinstance(entry, dict) or set(entry) != {"u", "v", "w"}:
            raise DocumentError(f"bad edge entry {entry!r}")
        edges.append(
            (
                _int_field(entry["u"], "u"),
                _int_field(entry["v"], "v"),
                _rational_field(entry["w"], "w"),
            )
        )
    try:
        return build_wdg(dimension, edges, shift)
    except WdgError as exc:
        raise DocumentError(str(exc)) from exc


def _parse_points(entries, length: int) -> list:
    if not isinstance(entries, list):
        raise DocumentError("points must be a list")
    points = []
    for entry in entries:
        if not isinstance(entry, dict) or set(entry) != {"input", "value"}:
            raise DocumentError(f"bad point entry {entry!r}")
        if not isinstance(entry["input"], str):
            raise DocumentError("point input must be a string of '+'/'-' characters")
        x = parse_assignment(entry["input"])
        if len(x) != length:
            raise DocumentError(
                f"point {entry['input']!r} has length {len(x)}, expected {length}"
            )
        value = entry["value"]
        if value not in (0, 1) or isinstance(value, bool):
            raise DocumentError(f"point value must be 0 or 1, got {value!r}")
        points.append((x, value))
    return points


def serialize_target(spec: PartialFunctionSpec) -> str:
    return _dump(
        {
            "format_version": FORMAT_VERSION,
            "dimension": spec.dimension,
            "epsilon": format_rational(spec.epsilon),
            "points": [
                {"input": format_assignment(x), "value": t} for x, t in spec.points
            ],
        }
    )


def parse_target_document(text: str) -> PartialFunctionSpec:
    document = _load(text)
    _expect_keys(document, ("format_version", "dimension", "epsilon", "points"))
    dimension = _int_field(document["dimension"], "dimension")
    epsilon = _rational_field(document["epsilon"], "epsilon")
    points = _parse_points(document["points"], dimension - 1)
    try:
        return PartialFunctionSpec(dimension=dimension, points=tuple(points), epsilon=epsilon)
    except (WdgError, ValueError) as exc:
        raise DocumentError(str(exc)) from exc


def serialize_function_table(f: PartialBooleanFunction) -> str:
    points = sorted(f.table.items())
    return _dump(
        {
            "format_version": FORMAT_VERSION,
            "arity": f.arity,
            "points": [
                {"input": format_assignment(x), "value": value} for x, value in points
            ],
        }
    )


def parse_function_document(text: str) -> PartialBooleanFunction:
    document = _load(text)
    _expect_keys(document, ("format_version", "arity", "points"))
    arity = _int_field(document["arity"], "arity")
    points = _parse_points(document["points"], arity)
    table = {}
    for x, value in points:
        if x in table and table[x] != value:
            raise DocumentError(f"conflicting values for input {format_assignment(x)}")
        table[x] = value
    try:
        return PartialBooleanFunction(arity=arity, table=table)
    except WdgError as exc:
        raise DocumentError(str(exc)) from exc


def report_document(wdg: WDG, limit: int = 26, threads: int = 1) -> dict:
    """Deterministic analysis report; every field is reproducible by
    re-running the corresponding library operation."""
    report = extrema(wdg, limit=limit, threads=threads)
    document = {
        "l1_norm": format_rational(l1_norm(wdg)),
        "l1_with_shift": format_rational(l1_norm_with_shift(wdg)),
        "exact": report.exact,
    }
    if report.exact:
        document["delta"] = format_rational(report.delta)
    document["delta_lower"] = format_rational(report.lower_bound)
    document["delta_upper"] = format_rational(report.upper_bound)
    document["epsilon_bound"] = format_rational(vertex_weight_bound(wdg))
    document["advantage_indicator"] = format_rational(advantage_indicator(wdg))
    if report.exact:
        document["argmax"] = format_assignment(report.argmax)
        document["argmin"] = format_assignment(report.argmin)
    return document


def serialize_report(document: dict, plain: bool = False) -> str:
    if plain:
        lines = []
        for key, value in document.items():
            if isinstance(value, bool):
                value = "true" if value else "false"
            lines.append(f"{key}={value}")
        return "\n".join(lines) + "\n"
    return _dump(document)


def optimization_summary(result: OptimizationResult) -> dict:
    return {
        "objective": format_rational(result.objective),
        "c": format_rational(result.c),
        "feasible": result.feasible,
        "verified": result.verified,
        "iterations": result.iterations,
        "wdg": {
            "format_version": FORMAT_VERSION,
            "dimension": result.wdg.dimension,
            "shift": format_rational(result.wdg.shift),
            "edges": [
                {"u": e.u, "v": e.v, "w": format_rational(e.weight)}
                for e in result.wdg.edges
            ],
        },
    }

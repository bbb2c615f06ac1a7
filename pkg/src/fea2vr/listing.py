"""Parsers for solver-exported text listings.

Four listing kinds are understood: node lists (id + coordinates), element
lists (id + 5 attribute columns + node ids), surface-node lists (ids only,
coordinates optional) and result lists (id + values).  All parsers tolerate
headers, banners, page breaks and blank lines: a line is only treated as data
when it matches the listing's data-line shape, everything else is skipped.
Skipped lines that contain a token starting with a digit are reported as
warnings so truncated exports do not pass silently.

Parsers never abort on malformed bytes; they either return records plus
warnings or raise :class:`~fea2vr.errors.ListingError` with a line number.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ListingError

_INT_RE = re.compile(r"[+-]?\d+\Z")
# Reals in plain, scientific ("1.5e-3") or Fortran D-exponent ("1.5D-03") form.
_REAL_RE = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eEdD][+-]?\d+)?\Z")


@dataclass(frozen=True)
class NodeRecord:
    """One node: original solver id and position in model units."""

    id: int
    position: tuple[float, float, float]


@dataclass(frozen=True)
class ElementRecord:
    """One element row: id, the five attribute columns, and its node ids.

    Repeated trailing node ids (degenerate quads such as ``... 27 27``) are
    preserved verbatim; collapsing happens during triangulation.
    """

    id: int
    material: int
    type_ref: int
    real_const: int
    esys: int
    section: int
    node_ids: tuple[int, ...]


@dataclass(frozen=True)
class ResultEntry:
    node_id: int
    value: float


@dataclass(frozen=True)
class ParseWarning:
    line_number: int
    reason: str


def _is_int(token: str) -> bool:
    return _INT_RE.match(token) is not None


def _as_real(token: str) -> float | None:
    """Parse a real token, returning None for anything non-finite or odd."""
    if _REAL_RE.match(token) is None:
        return None
    value = float(token.replace("d", "e").replace("D", "e"))
    return value if math.isfinite(value) else None


def _digit_leading(tokens: Iterable[str]) -> bool:
    return any(t[:1].isdigit() for t in tokens)


def _lines(text: str):
    """Yield (line_number, tokens) pairs for non-blank lines."""
    text = text.lstrip("﻿")  # tolerate a UTF-8 BOM
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if tokens:
            yield number, tokens


def parse_node_list(text: str) -> tuple[list[NodeRecord], list[ParseWarning]]:
    """Parse a node listing into records.

    A data line starts with a positive integer id followed by at least three
    real tokens; the first three reals become the position, extra columns
    (rotation angles etc.) are ignored.

    Raises:
        ListingError: if the same node id appears on two data lines.
    """
    records: list[NodeRecord] = []
    warnings: list[ParseWarning] = []
    seen: dict[int, int] = {}
    for number, tokens in _lines(text):
        node_id = _parse_positive_int(tokens[0])
        if node_id is not None:
            reals = [r for r in (_as_real(t) for t in tokens[1:]) if r is not None]
            if len(reals) >= 3:
                if node_id in seen:
                    raise ListingError(
                        f"duplicate node id {node_id} on lines {seen[node_id]} and {number}",
                        line_number=number,
                    )
                seen[node_id] = number
                records.append(NodeRecord(node_id, (reals[0], reals[1], reals[2])))
                continue
        if _digit_leading(tokens):
            warnings.append(ParseWarning(number, "line not parseable as node data"))
    return records, warnings


def parse_element_list(
    text: str,
    expected_node_counts: Mapping[int, int] | None = None,
) -> tuple[list[ElementRecord], list[ParseWarning]]:
    """Parse an element listing (columns EL MAT TYP REL ESY SEC NODES...).

    A data line consists of at least 7 integer tokens: the element id, five
    attribute columns, then node ids.  When ``expected_node_counts`` maps the
    element's TYP value to more nodes than the line carries (a 10-node tet
    wrapped by the solver), the immediately following all-integer line is
    consumed as a continuation.

    Raises:
        ListingError: on duplicate element ids, or when an expected
            continuation line is missing or not all-integer.
    """
    expected_node_counts = expected_node_counts or {}
    records: list[ElementRecord] = []
    warnings: list[ParseWarning] = []
    seen: dict[int, int] = {}
    pending = list(_lines(text))
    i = 0
    while i < len(pending):
        number, tokens = pending[i]
        i += 1
        ints = _all_ints(tokens)
        if ints is None or len(ints) < 7 or ints[0] < 1 or any(n < 1 for n in ints[6:]):
            if _digit_leading(tokens):
                warnings.append(ParseWarning(number, "line not parseable as element data"))
            continue
        elem_id = ints[0]
        node_ids = ints[6:]
        expected = expected_node_counts.get(ints[2])
        if expected is not None and len(node_ids) < expected:
            if i >= len(pending):
                raise ListingError(
                    f"element {elem_id}: continuation line expected but input ended",
                    line_number=number,
                )
            cont_number, cont_tokens = pending[i]
            cont_ints = _all_ints(cont_tokens)
            if cont_ints is None:
                raise ListingError(
                    f"element {elem_id}: continuation line is not all-integer",
                    line_number=cont_number,
                )
            node_ids = node_ids + cont_ints
            i += 1
        if elem_id in seen:
            raise ListingError(
                f"duplicate element id {elem_id} on lines {seen[elem_id]} and {number}",
                line_number=number,
            )
        seen[elem_id] = number
        records.append(
            ElementRecord(
                id=elem_id,
                material=ints[1],
                type_ref=ints[2],
                real_const=ints[3],
                esys=ints[4],
                section=ints[5],
                node_ids=tuple(node_ids),
            )
        )
    return records, warnings


def parse_surface_node_list(text: str) -> tuple[set[int], list[ParseWarning]]:
    """Parse a surface-node listing into the set of listed node ids.

    Only the leading id of each data line matters; trailing coordinates are
    ignored and duplicate ids collapse into the set.
    """
    ids: set[int] = set()
    warnings: list[ParseWarning] = []
    for number, tokens in _lines(text):
        node_id = _parse_positive_int(tokens[0])
        if node_id is not None:
            ids.add(node_id)
        elif _digit_leading(tokens):
            warnings.append(ParseWarning(number, "line not parseable as a node id"))
    return ids, warnings


def parse_result_list(
    text: str, value_column: int = 1
) -> tuple[dict[int, float], list[ParseWarning]]:
    """Parse a result listing into a node-id -> value map.

    A data line is a positive integer node id followed by at least one real;
    ``value_column`` selects which of the reals is the value (1-based).  A
    later duplicate of a node id overwrites the earlier value with a warning.

    Raises:
        ValueError: if ``value_column`` < 1.
        ListingError: if a data line has fewer reals than ``value_column``.
    """
    if value_column < 1:
        raise ValueError(f"value_column must be >= 1, got {value_column}")
    values: dict[int, float] = {}
    warnings: list[ParseWarning] = []
    for number, tokens in _lines(text):
        node_id = _parse_positive_int(tokens[0])
        if node_id is not None:
            reals = [r for r in (_as_real(t) for t in tokens[1:]) if r is not None]
            if reals:
                if len(reals) < value_column:
                    raise ListingError(
                        f"line {number}: value column {value_column} requested but "
                        f"only {len(reals)} value(s) present",
                        line_number=number,
                    )
                if node_id in values:
                    warnings.append(
                        ParseWarning(number, f"node {node_id} repeated, overwriting value")
                    )
                values[node_id] = reals[value_column - 1]
                continue
        if _digit_leading(tokens):
            warnings.append(ParseWarning(number, "line not parseable as result data"))
    return values, warnings


def _parse_positive_int(token: str) -> int | None:
    if _is_int(token):
        value = int(token)
        if value >= 1:
            return value
    return None


def _all_ints(tokens: list[str]) -> list[int] | None:
    if all(_is_int(t) for t in tokens):
        return [int(t) for t in tokens]
    return None


# Canonical writers: the inverse of the parsers, used for round-trip checks
# and for emitting remapped result listings.


def node_list_text(records: Iterable[NodeRecord]) -> str:
    lines = [
        f"{r.id} {r.position[0]!r} {r.position[1]!r} {r.position[2]!r}" for r in records
    ]
    return "".join(line + "\n" for line in lines)


def element_list_text(records: Iterable[ElementRecord]) -> str:
    lines = [
        " ".join(
            str(v)
            for v in (r.id, r.material, r.type_ref, r.real_const, r.esys, r.section)
            + r.node_ids
        )
        for r in records
    ]
    return "".join(line + "\n" for line in lines)


def surface_node_list_text(ids: Iterable[int]) -> str:
    return "".join(f"{i}\n" for i in sorted(set(ids)))


def result_list_text(values: Mapping[int, float]) -> str:
    return "".join(f"{node_id} {values[node_id]!r}\n" for node_id in sorted(values))

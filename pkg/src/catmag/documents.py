"""JSON documents: matrices, posets, categories, and magnitude reports.

All rationals travel as ``"p"``/``"p/q"`` strings so files are bit-exact.
Three input kinds are recognized:

* ``{"kind": "matrix", "entries": [["1", "1/2"], ...]}`` -- row-major,
  rectangular, every entry a rational string; ``[]`` is the 0x0 matrix.
* ``{"kind": "poset", "objects": [...], "relations": [[a, b], ...]}`` --
  relations are generating pairs meaning a <= b; the reflexive-transitive
  closure is applied on load.
* ``{"kind": "category", "objects": [...], "morphisms": [{"name", "src",
  "tgt"}, ...], "identities": {obj: morphism}, "composition":
  [[g, f, h], ...]}`` -- a composition row [g, f, h] means g after f = h.

Loading validates; a loaded value always satisfies its type's axioms.
Serialization is deterministic so identical inputs produce identical
bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .categories import (
    FinCategory,
    Morphism,
    Poset,
    close_poset,
    validate_category,
)
from .magnitude import MagnitudeReport
from .matrix import Matrix
from .rationals import format_rational, parse_rational


class DocumentError(ValueError):
    """The file is not a well-formed document of a recognized kind."""


def parse_document(text: str) -> Matrix | Poset | FinCategory:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    return interpret_document(obj)


def load_document(path: str) -> Matrix | Poset | FinCategory:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}")
    try:
        return parse_document(text)
    except ValueError as exc:
        raise DocumentError(f"{path}: {exc}")


def interpret_document(obj: Any) -> Matrix | Poset | FinCategory:
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    kind = obj.get("kind")
    if kind == "matrix":
        return _matrix_from(obj)
    if kind == "poset":
        return _poset_from(obj)
    if kind == "category":
        return _category_from(obj)
    raise DocumentError(f"unrecognized document kind {kind!r}")


def _matrix_from(obj: dict) -> Matrix:
    entries = obj.get("entries")
    if not isinstance(entries, list) or any(not isinstance(row, list) for row in entries):
        raise DocumentError("matrix 'entries' must be a list of rows")
    if entries and any(len(row) == 0 for row in entries):
        raise DocumentError("matrix rows must be non-empty")
    widths = {len(row) for row in entries}
    if len(widths) > 1:
        raise DocumentError(f"matrix rows must all have the same length, got {sorted(widths)}")
    parsed = []
    for i, row in enumerate(entries):
        parsed_row = []
        for j, cell in enumerate(row):
            if not isinstance(cell, str):
                raise DocumentError(
                    f"entry ({i},{j}) must be a rational string such as \"1/2\""
                )
            try:
                parsed_row.append(parse_rational(cell))
            except ValueError as exc:
                raise DocumentError(f"entry ({i},{j}): {exc}")
        parsed.append(parsed_row)
    return Matrix(parsed, cols=widths.pop() if widths else 0)


def _string_list(obj: dict, key: str) -> list[str]:
    value = obj.get(key)
    if not isinstance(value, list) or any(not isinstance(x, str) for x in value):
        raise DocumentError(f"'{key}' must be a list of strings")
    return value


def _poset_from(obj: dict) -> Poset:
    objects = _string_list(obj, "objects")
    relations = obj.get("relations")
    if not isinstance(relations, list):
        raise DocumentError("'relations' must be a list of [a, b] pairs")
    pairs = []
    for i, pair in enumerate(relations):
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair)):
            raise DocumentError(f"relation {i} must be a pair of object names")
        pairs.append((pair[0], pair[1]))
    return close_poset(objects, pairs)


def _category_from(obj: dict) -> FinCategory:
    objects = _string_list(obj, "objects")
    raw_morphisms = obj.get("morphisms")
    if not isinstance(raw_morphisms, list):
        raise DocumentError("'morphisms' must be a list")
    morphisms = []
    for i, m in enumerate(raw_morphisms):
        if not isinstance(m, dict) or not all(
            isinstance(m.get(k), str) for k in ("name", "src", "tgt")
        ):
            raise DocumentError(f"morphism {i} must have string fields name/src/tgt")
        morphisms.append(Morphism(m["name"], m["src"], m["tgt"]))
    identities = obj.get("identities")
    if not isinstance(identities, dict) or any(
        not isinstance(k, str) or not isinstance(v, str) for k, v in identities.items()
    ):
        raise DocumentError("'identities' must map object names to morphism names")
    raw_comp = obj.get("composition")
    if not isinstance(raw_comp, list):
        raise DocumentError("'composition' must be a list of [g, f, h] triples")
    composition = {}
    for i, triple in enumerate(raw_comp):
        if not (
            isinstance(triple, list)
            and len(triple) == 3
            and all(isinstance(x, str) for x in triple)
        ):
            raise DocumentError(f"composition row {i} must be a [g, f, h] triple of names")
        g, f, h = triple
        if (g, f) in composition:
            raise DocumentError(f"composition row {i} repeats the pair (g={g!r}, f={f!r})")
        composition[(g, f)] = h
    return validate_category(
        FinCategory(tuple(objects), tuple(morphisms), dict(identities), composition)
    )


def matrix_to_obj(m: Matrix) -> dict:
    return {
        "kind": "matrix",
        "entries": [[format_rational(x) for x in row] for row in m],
    }


def poset_to_obj(poset: Poset) -> dict:
    return {
        "kind": "poset",
        "objects": list(poset.objects),
        "relations": [[a, b] for a, b in poset.covers()],
    }


def category_to_obj(cat: FinCategory) -> dict:
    order = {name: i for i, name in enumerate(m.name for m in cat.morphisms)}
    rows = sorted(cat.composition.items(), key=lambda kv: (order[kv[0][0]], order[kv[0][1]]))
    return {
        "kind": "category",
        "objects": list(cat.objects),
        "morphisms": [{"name": m.name, "src": m.src, "tgt": m.tgt} for m in cat.morphisms],
        "identities": {obj: cat.identities[obj] for obj in cat.objects},
        "composition": [[g, f, h] for (g, f), h in rows],
    }


def structure_to_obj(value: Matrix | Poset | FinCategory) -> dict:
    if isinstance(value, Matrix):
        return matrix_to_obj(value)
    if isinstance(value, Poset):
        return poset_to_obj(value)
    return category_to_obj(value)


def _vector_entries(labels: tuple[str, ...], values: list[Fraction]) -> dict:
    return {label: format_rational(v) for label, v in zip(labels, values)}


def report_to_obj(report: MagnitudeReport) -> dict:
    weighting = None
    if report.weighting is not None:
        weighting = _vector_entries(report.object_order, [row[0] for row in report.weighting])
    coweighting = None
    if report.coweighting is not None:
        coweighting = _vector_entries(report.object_order, list(report.coweighting[0]))
    return {
        "kind": "magnitude-report",
        "objects": list(report.object_order),
        "has_weighting": report.has_weighting,
        "has_coweighting": report.has_coweighting,
        "has_magnitude": report.has_magnitude,
        "magnitude": format_rational(report.magnitude) if report.has_magnitude else None,
        "generalized_magnitude": format_rational(report.generalized_magnitude),
        "weighting": weighting,
        "coweighting": coweighting,
        "weighting_nullspace": [matrix_to_obj(v) for v in report.weighting_nullspace],
        "pseudo_mobius": matrix_to_obj(report.pseudo_mobius),
        "mobius": matrix_to_obj(report.mobius) if report.mobius is not None else None,
    }


def dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"

"""JSON problem/set documents: parsing with located errors, serialization.

Documents are JSON objects with a ``"schema": 1`` version tag. A problem
document holds alternatives, criteria (label/kind/weight), and a k x r
matrix of cells; a set document holds a universe and one cell per label,
plus an optional per-element weight vector. A cell is an object with
``truth`` / ``indet`` / ``falsity`` arrays: plain numbers for the
single-valued flavor, ``[lo, hi]`` pairs for the interval flavor.

Parse failures raise :class:`SchemaError` (structure) or the matching
validation error (data), always carrying the path of the offending value.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import SchemaError, ValidationError
from .decision import CriterionKind, CriterionSpec, DecisionProblem
from .model import Element, Flavor, InrElement, RefinedSet, SvnrElement
from .similarity import WeightVector

SCHEMA_VERSION = 1

_COMPONENTS = ("truth", "indet", "falsity")


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed document: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaError("document root must be an object")
    version = doc.get("schema")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema {version!r}, expected {SCHEMA_VERSION}")
    return doc


def _require(doc: dict, key: str, kind: type, where: str) -> Any:
    if key not in doc:
        raise SchemaError(f"missing field {key!r}", path=where)
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise SchemaError(
            f"field {key!r} must be {kind.__name__}, got {type(value).__name__}",
            path=where,
        )
    return value


def _flavor(doc: dict, where: str) -> Flavor:
    raw = _require(doc, "flavor", str, where)
    try:
        return Flavor(raw)
    except ValueError:
        raise SchemaError(f"unknown flavor {raw!r}", path=where) from None


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"expected a number, got {value!r}", path=where)
    return float(value)


def _number_list(value: Any, where: str) -> list[float]:
    if not isinstance(value, list):
        raise SchemaError(f"expected an array, got {type(value).__name__}", path=where)
    return [_number(v, f"{where}[{i}]") for i, v in enumerate(value)]


def _pair_list(value: Any, where: str) -> list[tuple[float, float]]:
    if not isinstance(value, list):
        raise SchemaError(f"expected an array, got {type(value).__name__}", path=where)
    pairs = []
    for i, item in enumerate(value):
        slot = f"{where}[{i}]"
        if not isinstance(item, list) or len(item) != 2:
            raise SchemaError(f"expected an [lo, hi] pair, got {item!r}", path=slot)
        pairs.append((_number(item[0], slot), _number(item[1], slot)))
    return pairs


def _parse_cell(cell: Any, flavor: Flavor, where: str) -> Element:
    if not isinstance(cell, dict):
        raise SchemaError(f"cell must be an object, got {type(cell).__name__}", path=where)
    parts = {}
    for name in _COMPONENTS:
        if name not in cell:
            raise SchemaError(f"missing field {name!r}", path=where)
        if flavor is Flavor.SVNR:
            parts[name] = tuple(_number_list(cell[name], f"{where}/{name}"))
        else:
            parts[name] = tuple(_pair_list(cell[name], f"{where}/{name}"))
    try:
        if flavor is Flavor.SVNR:
            return SvnrElement(**parts)
        return InrElement(**parts)
    except ValidationError as exc:
        raise exc.at(where) from None


def _labels(doc: dict, key: str, where: str) -> tuple[str, ...]:
    raw = _require(doc, key, list, where)
    labels = []
    for i, item in enumerate(raw):
        if not isinstance(item, str):
            raise SchemaError(f"label must be a string, got {item!r}", path=f"{key}[{i}]")
        labels.append(item)
    return tuple(labels)


def parse_problem(text: str) -> DecisionProblem:
    """Parse a decision-problem document into a validated problem."""
    doc = _load(text)
    flavor = _flavor(doc, "problem")
    alternatives = _labels(doc, "alternatives", "problem")
    raw_criteria = _require(doc, "criteria", list, "problem")
    criteria = []
    for j, item in enumerate(raw_criteria):
        where = f"criteria[{j}]"
        if not isinstance(item, dict):
            raise SchemaError("criterion must be an object", path=where)
        label = item.get("label")
        if not isinstance(label, str):
            raise SchemaError(f"criterion label must be a string, got {label!r}", path=where)
        kind_raw = _require(item, "kind", str, where)
        try:
            kind = CriterionKind(kind_raw)
        except ValueError:
            raise SchemaError(f"unknown criterion kind {kind_raw!r}", path=where) from None
        if "weight" not in item:
            raise SchemaError("missing field 'weight'", path=where)
        weight = _number(item["weight"], f"{where}/weight")
        try:
            criteria.append(CriterionSpec(label=label, kind=kind, weight=weight))
        except ValidationError as exc:
            raise exc.at(where) from None
    raw_matrix = _require(doc, "matrix", list, "problem")
    if len(raw_matrix) != len(alternatives):
        raise SchemaError(
            f"matrix has {len(raw_matrix)} rows for {len(alternatives)} alternatives",
            path="matrix",
        )
    matrix = []
    for alt, raw_row in zip(alternatives, raw_matrix):
        if not isinstance(raw_row, list):
            raise SchemaError("matrix row must be an array", path=alt)
        if len(raw_row) != len(criteria):
            raise SchemaError(
                f"row has {len(raw_row)} cells for {len(criteria)} criteria", path=alt
            )
        row = [
            _parse_cell(cell, flavor, f"{alt}/{spec.label}")
            for spec, cell in zip(criteria, raw_row)
        ]
        matrix.append(tuple(row))
    return DecisionProblem(
        alternatives=alternatives,
        criteria=tuple(criteria),
        matrix=tuple(matrix),
        flavor=flavor,
    )


def parse_set(text: str) -> tuple[RefinedSet, WeightVector | None]:
    """Parse a set document; returns the set and its optional weights."""
    doc = _load(text)
    flavor = _flavor(doc, "set")
    universe = _labels(doc, "universe", "set")
    raw_elements = _require(doc, "elements", list, "set")
    if len(raw_elements) != len(universe):
        raise SchemaError(
            f"{len(raw_elements)} elements for {len(universe)} universe labels",
            path="elements",
        )
    elements = tuple(
        _parse_cell(cell, flavor, label) for label, cell in zip(universe, raw_elements)
    )
    refined = RefinedSet(universe=universe, elements=elements, flavor=flavor)
    weights = None
    if "weights" in doc:
        values = _number_list(doc["weights"], "weights")
        if len(values) != len(universe):
            raise SchemaError(
                f"{len(values)} weights for {len(universe)} universe labels",
                path="weights",
            )
        weights = WeightVector(tuple(values))
    return refined, weights


def _cell_document(el: Element) -> dict:
    if isinstance(el, SvnrElement):
        return {name: list(getattr(el, name)) for name in _COMPONENTS}
    return {
        name: [[v.lo, v.hi] for v in getattr(el, name)] for name in _COMPONENTS
    }


def set_document(s: RefinedSet, weights: WeightVector | None = None) -> dict:
    """Serialize a refined set (inverse of :func:`parse_set`)."""
    doc = {
        "schema": SCHEMA_VERSION,
        "flavor": s.flavor.value,
        "universe": list(s.universe),
        "elements": [_cell_document(el) for el in s.elements],
    }
    if weights is not None:
        doc["weights"] = list(weights.values)
    return doc


def problem_document(problem: DecisionProblem) -> dict:
    """Serialize a decision problem (inverse of :func:`parse_problem`)."""
    return {
        "schema": SCHEMA_VERSION,
        "flavor": problem.flavor.value,
        "alternatives": list(problem.alternatives),
        "criteria": [
            {"label": c.label, "kind": c.kind.value, "weight": c.weight}
            for c in problem.criteria
        ],
        "matrix": [[_cell_document(cell) for cell in row] for row in problem.matrix],
    }


def ranking_document(report) -> dict:
    """Machine-format ranking report with full-precision scores."""
    return {
        "measure": report.measure.value,
        "weighted": report.weighted,
        "polarity": report.polarity.value,
        "scores": [
            {"alternative": a, "score": s.value}
            for a, s in zip(report.alternatives, report.scores)
        ],
        "ranking": list(report.order),
        "ideal": [_cell_document(el) for el in report.ideal],
    }


def consistency_document(report) -> dict:
    """Machine-format consistency report with full-precision scores."""
    return {
        "objective": report.objective.value,
        "selected": {"measure": report.selected[0].value, "weighted": report.selected[1]},
        "measures": [
            {
                "measure": row.measure.value,
                "weighted": row.weighted,
                "degree": row.degree,
                "alternatives": list(row.alternatives),
                "lower_scores": list(row.lower_scores),
                "upper_scores": list(row.upper_scores),
            }
            for row in report.rows
        ],
    }

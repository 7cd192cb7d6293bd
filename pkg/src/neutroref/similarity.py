"""Jaccard, Dice, and cosine similarity between refined sets.

For each universe element the three membership sequences are concatenated
into a single vector (length 3p single-valued; 6p interval-valued, lower
endpoints then upper). The element's term is the chosen vector ratio:

    jaccard  a.b / (|a|^2 + |b|^2 - a.b)
    dice     2 a.b / (|a|^2 + |b|^2)
    cosine   a.b / (|a| |b|)

and the score is the mean of the terms over the universe (or the
weight-vector combination for the weighted variants). Every term lies in
[0, 1], so scores do too. Terms are accumulated in universe order with
compensated summation, so results are reproducible bit-for-bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import (
    DimensionMismatch,
    FlavorMismatch,
    UndefinedSimilarity,
    UniverseMismatch,
    WeightError,
)
from .model import Flavor, InrElement, Measure, RefinedSet, SvnrElement

WEIGHT_SUM_TOL = 1e-6


@dataclass(frozen=True)
class WeightVector:
    """Non-negative per-universe-element weights summing to 1."""

    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if not self.values:
            raise WeightError("weight vector must be non-empty")
        for i, v in enumerate(self.values):
            if v < 0.0:
                raise WeightError(f"negative weight {v}", path=f"weights[{i}]")
        total = math.fsum(self.values)
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise WeightError(f"weights sum to {total}, expected 1")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


Weights = Union[WeightVector, Sequence[float]]


@dataclass(frozen=True)
class SimilarityScore:
    """Similarity value together with the measure that produced it."""

    value: float
    measure: Measure
    weighted: bool

    def __post_init__(self):
        if not -1e-9 <= self.value <= 1.0 + 1e-9:
            raise ValueError(f"similarity {self.value} outside [0, 1]")

    def __float__(self) -> float:
        return self.value


def _svnr_vector(el: SvnrElement) -> tuple[float, ...]:
    return el.truth + el.indet + el.falsity


def _inr_vector(el: InrElement) -> tuple[float, ...]:
    lows = tuple(v.lo for seq in (el.truth, el.indet, el.falsity) for v in seq)
    highs = tuple(v.hi for seq in (el.truth, el.indet, el.falsity) for v in seq)
    return lows + highs


def _svnr_slot_zero(el: SvnrElement, i: int) -> bool:
    return el.truth[i] == 0.0 and el.indet[i] == 0.0 and el.falsity[i] == 0.0


def _inr_slot_zero(el: InrElement, i: int) -> bool:
    return all(
        seq[i].lo == 0.0 and seq[i].hi == 0.0 for seq in (el.truth, el.indet, el.falsity)
    )


def _check_pair(a: RefinedSet, b: RefinedSet, flavor: Flavor) -> None:
    for s in (a, b):
        if s.flavor is not flavor:
            raise FlavorMismatch(f"expected a {flavor.value} set, got {s.flavor.value}")
    if a.universe != b.universe:
        raise UniverseMismatch("similarity needs identical universes (labels and order)")
    if a.dimension != b.dimension:
        raise DimensionMismatch(
            f"similarity needs equal dimensions ({a.dimension} vs {b.dimension})"
        )
    slot_zero = _svnr_slot_zero if flavor is Flavor.SVNR else _inr_slot_zero
    for label, ea, eb in zip(a.universe, a.elements, b.elements):
        for i in range(ea.dimension):
            if slot_zero(ea, i) and slot_zero(eb, i):
                raise UndefinedSimilarity(
                    "all membership degrees are zero in both operands",
                    path=f"{label}[{i}]",
                )


def _term(measure: Measure, va: Sequence[float], vb: Sequence[float]) -> float:
    dot = math.fsum(x * y for x, y in zip(va, vb))
    na = math.fsum(x * x for x in va)
    nb = math.fsum(y * y for y in vb)
    if na == 0.0 or nb == 0.0:
        return 0.0
    if measure is Measure.JACCARD:
        return dot / (na + nb - dot)
    if measure is Measure.DICE:
        return 2.0 * dot / (na + nb)
    return dot / (math.sqrt(na) * math.sqrt(nb))


def _terms(measure: Measure, a: RefinedSet, b: RefinedSet, flavor: Flavor) -> list[float]:
    _check_pair(a, b, flavor)
    vec = _svnr_vector if flavor is Flavor.SVNR else _inr_vector
    return [_term(measure, vec(ea), vec(eb)) for ea, eb in zip(a.elements, b.elements)]


def _as_weights(w: Weights, n: int) -> WeightVector:
    if not isinstance(w, WeightVector):
        w = WeightVector(tuple(w))
    if len(w) != n:
        raise WeightError(f"{len(w)} weights for {n} universe elements")
    return w


def svnr_similarity(measure: Measure, a: RefinedSet, b: RefinedSet) -> SimilarityScore:
    """Unweighted similarity of two single-valued refined sets."""
    terms = _terms(measure, a, b, Flavor.SVNR)
    return SimilarityScore(math.fsum(terms) / len(terms), measure, weighted=False)


def svnr_weighted_similarity(
    measure: Measure, a: RefinedSet, b: RefinedSet, weights: Weights
) -> SimilarityScore:
    """Weighted similarity of two single-valued refined sets."""
    terms = _terms(measure, a, b, Flavor.SVNR)
    w = _as_weights(weights, len(terms))
    return SimilarityScore(
        math.fsum(wj * t for wj, t in zip(w, terms)), measure, weighted=True
    )


def inr_similarity(measure: Measure, a: RefinedSet, b: RefinedSet) -> SimilarityScore:
    """Unweighted similarity of two interval-valued refined sets."""
    terms = _terms(measure, a, b, Flavor.INR)
    return SimilarityScore(math.fsum(terms) / len(terms), measure, weighted=False)


def inr_weighted_similarity(
    measure: Measure, a: RefinedSet, b: RefinedSet, weights: Weights
) -> SimilarityScore:
    """Weighted similarity of two interval-valued refined sets."""
    terms = _terms(measure, a, b, Flavor.INR)
    w = _as_weights(weights, len(terms))
    return SimilarityScore(
        math.fsum(wj * t for wj, t in zip(w, terms)), measure, weighted=True
    )


def similarity(
    measure: Measure,
    a: RefinedSet,
    b: RefinedSet,
    weights: Weights | None = None,
) -> SimilarityScore:
    """Flavor-dispatching convenience wrapper over the four entry points."""
    if a.flavor is Flavor.SVNR:
        if weights is None:
            return svnr_similarity(measure, a, b)
        return svnr_weighted_similarity(measure, a, b, weights)
    if weights is None:
        return inr_similarity(measure, a, b)
    return inr_weighted_similarity(measure, a, b, weights)

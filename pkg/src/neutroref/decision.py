"""Ideal-solution construction and similarity-based ranking.

A decision problem is a k x r matrix of refined-set elements (alternatives
by criteria) with benefit/cost criterion kinds and criterion weights. The
positive ideal alternative takes, per criterion and slot, the best observed
value over alternatives (max truth, min indeterminacy, min falsity for a
benefit criterion; roles swapped for a cost criterion); the negative ideal
swaps the rules. Alternatives are ranked by similarity to the ideal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import (
    DimensionMismatch,
    DuplicateLabel,
    FlavorMismatch,
    UndefinedSimilarity,
    ValidationError,
    WeightError,
)
from .model import Element, Flavor, InrElement, Measure, RefinedSet, SvnrElement, UnitInterval
from .similarity import WEIGHT_SUM_TOL, SimilarityScore, similarity


class CriterionKind(Enum):
    """Whether larger truth degrees are better (benefit) or worse (cost)."""

    BENEFIT = "benefit"
    COST = "cost"


class Polarity(Enum):
    """Which ideal to build: best observed values or worst."""

    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class CriterionSpec:
    label: str
    kind: CriterionKind
    weight: float

    def __post_init__(self):
        object.__setattr__(self, "weight", float(self.weight))
        if self.weight < 0.0:
            raise WeightError(f"negative weight {self.weight}", path=self.label)


@dataclass(frozen=True)
class DecisionProblem:
    """Alternatives x criteria matrix of refined-set elements."""

    alternatives: tuple[str, ...]
    criteria: tuple[CriterionSpec, ...]
    matrix: tuple[tuple[Element, ...], ...]
    flavor: Flavor

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(str(a) for a in self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in self.matrix))
        if not self.alternatives:
            raise ValidationError("problem needs at least one alternative")
        if not self.criteria:
            raise ValidationError("problem needs at least one criterion")
        for labels, what in (
            (self.alternatives, "alternative"),
            (tuple(c.label for c in self.criteria), "criterion"),
        ):
            seen = set()
            for label in labels:
                if label in seen:
                    raise DuplicateLabel(f"duplicate {what} label {label!r}")
                seen.add(label)
        if len(self.matrix) != len(self.alternatives):
            raise ValidationError(
                f"{len(self.alternatives)} alternatives but {len(self.matrix)} matrix rows"
            )
        want = SvnrElement if self.flavor is Flavor.SVNR else InrElement
        r = len(self.criteria)
        p = None
        for alt, row in zip(self.alternatives, self.matrix):
            if len(row) != r:
                raise DimensionMismatch(
                    f"row has {len(row)} cells for {r} criteria", path=alt
                )
            for crit, cell in zip(self.criteria, row):
                where = f"{alt}/{crit.label}"
                if not isinstance(cell, want):
                    raise FlavorMismatch(
                        f"{self.flavor.value} problem holds a {type(cell).__name__}",
                        path=where,
                    )
                if p is None:
                    p = cell.dimension
                elif cell.dimension != p:
                    raise DimensionMismatch(
                        f"dimension {cell.dimension} differs from the problem's p={p}",
                        path=where,
                    )
        total = math.fsum(c.weight for c in self.criteria)
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise WeightError(f"criterion weights sum to {total}, expected 1")

    @property
    def dimension(self) -> int:
        return self.matrix[0][0].dimension

    @property
    def criterion_labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.criteria)

    @property
    def weights(self) -> tuple[float, ...]:
        return tuple(c.weight for c in self.criteria)

    def row_set(self, index: int) -> RefinedSet:
        """One alternative's row as a refined set over the criterion labels."""
        return RefinedSet(
            universe=self.criterion_labels,
            elements=self.matrix[index],
            flavor=self.flavor,
        )


def _extreme_svnr(cells: Sequence[SvnrElement], benefit: bool) -> SvnrElement:
    p = cells[0].dimension
    best, worst = (max, min) if benefit else (min, max)
    return SvnrElement(
        truth=tuple(best(c.truth[i] for c in cells) for i in range(p)),
        indet=tuple(worst(c.indet[i] for c in cells) for i in range(p)),
        falsity=tuple(worst(c.falsity[i] for c in cells) for i in range(p)),
    )


def _extreme_inr(cells: Sequence[InrElement], benefit: bool) -> InrElement:
    p = cells[0].dimension
    best, worst = (max, min) if benefit else (min, max)

    def agg(fn, seqs, i):
        return UnitInterval(fn(s[i].lo for s in seqs), fn(s[i].hi for s in seqs))

    return InrElement(
        truth=tuple(agg(best, [c.truth for c in cells], i) for i in range(p)),
        indet=tuple(agg(worst, [c.indet for c in cells], i) for i in range(p)),
        falsity=tuple(agg(worst, [c.falsity for c in cells], i) for i in range(p)),
    )


def build_ideal(
    problem: DecisionProblem, polarity: Polarity = Polarity.POSITIVE
) -> tuple[Element, ...]:
    """Ideal alternative: one element per criterion, same flavor and p.

    Max/min are taken independently per slot index (and per interval
    endpoint for interval-valued problems).
    """
    extreme = _extreme_svnr if problem.flavor is Flavor.SVNR else _extreme_inr
    ideal = []
    for j, crit in enumerate(problem.criteria):
        cells = [row[j] for row in problem.matrix]
        benefit = (crit.kind is CriterionKind.BENEFIT) == (polarity is Polarity.POSITIVE)
        ideal.append(extreme(cells, benefit))
    return tuple(ideal)


def ideal_set(problem: DecisionProblem, polarity: Polarity = Polarity.POSITIVE) -> RefinedSet:
    """The ideal alternative as a refined set over the criterion labels."""
    return RefinedSet(
        universe=problem.criterion_labels,
        elements=build_ideal(problem, polarity),
        flavor=problem.flavor,
    )


@dataclass(frozen=True)
class RankingReport:
    """Per-alternative similarity to the ideal, with the resulting order."""

    measure: Measure
    weighted: bool
    polarity: Polarity
    alternatives: tuple[str, ...]
    scores: tuple[SimilarityScore, ...]
    order: tuple[str, ...]
    ideal: tuple[Element, ...]

    def score_of(self, alternative: str) -> SimilarityScore:
        return self.scores[self.alternatives.index(alternative)]

    @property
    def best(self) -> str:
        return self.order[0]


def rank(
    problem: DecisionProblem,
    measure: Measure,
    weighted: bool = False,
    polarity: Polarity = Polarity.POSITIVE,
) -> RankingReport:
    """Rank alternatives by (weighted) similarity to the ideal alternative.

    Sorting is by descending score; ties break by ascending alternative
    index, so the order is deterministic. Criterion weights from the
    problem are used when ``weighted`` is true.
    """
    ideal = ideal_set(problem, polarity)
    weights = problem.weights if weighted else None
    scores = []
    for index, label in enumerate(problem.alternatives):
        try:
            scores.append(similarity(measure, ideal, problem.row_set(index), weights))
        except UndefinedSimilarity as exc:
            raise UndefinedSimilarity(
                exc.bare_message, path=f"{label}/{exc.path}" if exc.path else label
            ) from None
    order = sorted(
        range(len(scores)), key=lambda idx: (-scores[idx].value, idx)
    )
    return RankingReport(
        measure=measure,
        weighted=weighted,
        polarity=polarity,
        alternatives=problem.alternatives,
        scores=tuple(scores),
        order=tuple(problem.alternatives[idx] for idx in order),
        ideal=tuple(ideal.elements),
    )

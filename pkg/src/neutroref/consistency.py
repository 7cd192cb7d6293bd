"""Consistency analysis for similarity measures over interval problems.

An interval decision matrix projects to two single-valued matrices (all
lower endpoints / all upper endpoints). For a given measure, each
projection yields its own ideal and its own similarity-to-ideal score per
alternative; the measure's consistency degree is the mean absolute gap
between the two score columns. Measure selection picks the candidate with
the extremal degree (the default objective keeps the candidate whose
degree is largest).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import fsum
from typing import Sequence

from .errors import FlavorMismatch
from .decision import DecisionProblem, rank
from .model import Bound, Flavor, Measure


class Objective(Enum):
    MAXIMIZE = "maximize"
    MINIMIZE = "minimize"


Candidate = tuple[Measure, bool]

DEFAULT_CANDIDATES: tuple[Candidate, ...] = (
    (Measure.JACCARD, False),
    (Measure.DICE, False),
    (Measure.COSINE, False),
    (Measure.JACCARD, True),
    (Measure.DICE, True),
    (Measure.COSINE, True),
)


@dataclass(frozen=True)
class MeasureConsistency:
    """One candidate's projected score columns and consistency degree."""

    measure: Measure
    weighted: bool
    alternatives: tuple[str, ...]
    lower_scores: tuple[float, ...]
    upper_scores: tuple[float, ...]
    degree: float


@dataclass(frozen=True)
class ConsistencyReport:
    """All evaluated candidates plus the selected one."""

    rows: tuple[MeasureConsistency, ...]
    selected: Candidate
    objective: Objective

    def row_for(self, measure: Measure, weighted: bool) -> MeasureConsistency:
        for row in self.rows:
            if row.measure is measure and row.weighted == weighted:
                return row
        raise KeyError((measure, weighted))


def projected_problem(problem: DecisionProblem, bound: Bound) -> DecisionProblem:
    """Single-valued problem taking every interval's chosen endpoint."""
    if problem.flavor is not Flavor.INR:
        raise FlavorMismatch("projection needs an interval-valued problem")
    return DecisionProblem(
        alternatives=problem.alternatives,
        criteria=problem.criteria,
        matrix=tuple(tuple(cell.project(bound) for cell in row) for row in problem.matrix),
        flavor=Flavor.SVNR,
    )


def measure_consistency(
    problem: DecisionProblem, measure: Measure, weighted: bool = False
) -> MeasureConsistency:
    """Evaluate one measure's consistency degree over an interval problem."""
    if problem.flavor is not Flavor.INR:
        raise FlavorMismatch("consistency analysis needs an interval-valued problem")
    columns = []
    for bound in (Bound.LOWER, Bound.UPPER):
        report = rank(projected_problem(problem, bound), measure, weighted)
        columns.append(tuple(s.value for s in report.scores))
    lower, upper = columns
    degree = fsum(abs(l - u) for l, u in zip(lower, upper)) / len(lower)
    return MeasureConsistency(
        measure=measure,
        weighted=weighted,
        alternatives=problem.alternatives,
        lower_scores=lower,
        upper_scores=upper,
        degree=degree,
    )


def consistency_degree(
    problem: DecisionProblem, measure: Measure, weighted: bool = False
) -> float:
    """Mean over alternatives of |lower-projection score - upper-projection score|."""
    return measure_consistency(problem, measure, weighted).degree


def select_measure(
    problem: DecisionProblem,
    candidates: Sequence[Candidate] = DEFAULT_CANDIDATES,
    objective: Objective = Objective.MAXIMIZE,
) -> tuple[Candidate, ConsistencyReport]:
    """Pick the candidate with the extremal consistency degree.

    Ties break in candidate list order. The default objective selects the
    LARGEST degree; pass ``Objective.MINIMIZE`` to prefer the smallest
    lower/upper gap instead.
    """
    if not candidates:
        raise ValueError("candidates must be non-empty")
    rows = tuple(measure_consistency(problem, m, w) for m, w in candidates)
    best = 0
    for idx in range(1, len(rows)):
        if objective is Objective.MAXIMIZE:
            better = rows[idx].degree > rows[best].degree
        else:
            better = rows[idx].degree < rows[best].degree
        if better:
            best = idx
    selected = (rows[best].measure, rows[best].weighted)
    return selected, ConsistencyReport(rows=rows, selected=selected, objective=objective)

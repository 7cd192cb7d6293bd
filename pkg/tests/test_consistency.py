"""Consistency degrees over interval problems and measure selection."""

import pytest

import paperdata
import reference
from conftest import build_problem
from neutroref import (
    Bound,
    DecisionProblem,
    Flavor,
    FlavorMismatch,
    Measure,
    Objective,
    consistency_degree,
    measure_consistency,
    projected_problem,
    select_measure,
)

KINDS = [k for _, k, _ in paperdata.CRITERIA]


def degenerate_problem():
    matrix = tuple(
        tuple(
            tuple(tuple((v, v) for v in comp) for comp in cell) for cell in row
        )
        for row in paperdata.SVNR_MATRIX
    )
    return build_problem(matrix, Flavor.INR)


class TestProjectedProblem:
    def test_projection_matches_reference(self, inr_problem):
        low = projected_problem(inr_problem, Bound.LOWER)
        want = reference.project_matrix(paperdata.INR_MATRIX, "lower")
        assert low.flavor is Flavor.SVNR
        for row, wrow in zip(low.matrix, want):
            for cell, wcell in zip(row, wrow):
                assert cell.truth == wcell[0]
                assert cell.indet == wcell[1]
                assert cell.falsity == wcell[2]

    def test_keeps_criteria(self, inr_problem):
        up = projected_problem(inr_problem, Bound.UPPER)
        assert up.criteria == inr_problem.criteria
        assert up.alternatives == inr_problem.alternatives

    def test_rejects_svnr(self, svnr_problem):
        with pytest.raises(FlavorMismatch):
            projected_problem(svnr_problem, Bound.LOWER)


class TestConsistencyDegree:
    @pytest.mark.parametrize("name,weighted", [
        ("jaccard", False), ("dice", False), ("cosine", False),
        ("jaccard", True), ("dice", True), ("cosine", True),
    ])
    def test_matches_reference(self, inr_problem, name, weighted):
        weights = paperdata.MCDM_WEIGHTS if weighted else None
        lower, upper, degree = reference.consistency(
            paperdata.INR_MATRIX, KINDS, name, weights
        )
        row = measure_consistency(inr_problem, Measure(name), weighted)
        assert row.degree == pytest.approx(degree, abs=1e-12)
        for got, want in zip(row.lower_scores, lower):
            assert got == pytest.approx(want, abs=1e-12)
        for got, want in zip(row.upper_scores, upper):
            assert got == pytest.approx(want, abs=1e-12)

    def test_published_unweighted_jaccard(self, inr_problem):
        row = measure_consistency(inr_problem, Measure.JACCARD)
        lower, upper, degree = paperdata.TABLE5[("jaccard", False)]
        for got, want in zip(row.lower_scores, lower):
            assert got == pytest.approx(want, abs=paperdata.TOL_TABLES)
        for got, want in zip(row.upper_scores, upper):
            assert got == pytest.approx(want, abs=paperdata.TOL_TABLES)
        assert row.degree == pytest.approx(degree, abs=paperdata.TOL_TABLES)

    def test_published_weighted_cosine(self, inr_problem):
        got = consistency_degree(inr_problem, Measure.COSINE, weighted=True)
        assert got == pytest.approx(0.03494, abs=paperdata.TOL_TABLES)

    @pytest.mark.parametrize("measure", list(Measure))
    def test_degenerate_problem_scores_zero(self, measure):
        assert consistency_degree(degenerate_problem(), measure) == pytest.approx(
            0.0, abs=1e-12
        )

    def test_degree_within_unit_interval(self, inr_problem):
        for measure in Measure:
            for weighted in (False, True):
                degree = consistency_degree(inr_problem, measure, weighted)
                assert 0.0 <= degree <= 1.0

    def test_invariant_under_row_permutation(self, inr_problem):
        perm = (3, 1, 0, 2)
        shuffled = DecisionProblem(
            alternatives=tuple(inr_problem.alternatives[i] for i in perm),
            criteria=inr_problem.criteria,
            matrix=tuple(inr_problem.matrix[i] for i in perm),
            flavor=inr_problem.flavor,
        )
        for measure in Measure:
            assert consistency_degree(shuffled, measure) == pytest.approx(
                consistency_degree(inr_problem, measure), abs=1e-15
            )

    def test_rejects_svnr_problem(self, svnr_problem):
        with pytest.raises(FlavorMismatch):
            consistency_degree(svnr_problem, Measure.JACCARD)


class TestSelectMeasure:
    def test_unweighted_candidates_pick_jaccard(self, inr_problem):
        candidates = [(m, False) for m in Measure]
        selected, report = select_measure(inr_problem, candidates)
        assert selected == (Measure.JACCARD, False)
        assert report.selected == selected
        degrees = {r.measure: r.degree for r in report.rows}
        assert degrees[Measure.JACCARD] > degrees[Measure.DICE] > degrees[Measure.COSINE]

    def test_weighted_candidates_pick_weighted_jaccard(self, inr_problem):
        candidates = [(m, True) for m in Measure]
        selected, _ = select_measure(inr_problem, candidates)
        assert selected == (Measure.JACCARD, True)

    def test_default_candidates_pick_unweighted_jaccard(self, inr_problem):
        selected, report = select_measure(inr_problem)
        assert selected == (Measure.JACCARD, False)
        assert len(report.rows) == 6

    def test_single_candidate(self, inr_problem):
        selected, report = select_measure(inr_problem, [(Measure.DICE, True)])
        assert selected == (Measure.DICE, True)
        assert len(report.rows) == 1

    def test_tie_breaks_in_candidate_order(self):
        problem = degenerate_problem()
        candidates = [(Measure.COSINE, False), (Measure.JACCARD, False)]
        selected, report = select_measure(problem, candidates)
        assert selected == (Measure.COSINE, False)
        assert all(row.degree == pytest.approx(0.0, abs=1e-12) for row in report.rows)

    def test_minimize_objective(self, inr_problem):
        selected, report = select_measure(
            inr_problem, objective=Objective.MINIMIZE
        )
        # weighted cosine has the smallest lower/upper gap
        assert selected == (Measure.COSINE, True)
        assert report.objective is Objective.MINIMIZE

    def test_empty_candidates_rejected(self, inr_problem):
        with pytest.raises(ValueError):
            select_measure(inr_problem, [])

    def test_report_lookup(self, inr_problem):
        _, report = select_measure(inr_problem)
        row = report.row_for(Measure.DICE, True)
        assert row.measure is Measure.DICE and row.weighted
        with pytest.raises(KeyError):
            report.row_for(Measure.DICE, None)

import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print the acceptance criteria PASS/FAIL lines after the run."""
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

import paperdata
from neutroref import (
    CriterionKind,
    CriterionSpec,
    DecisionProblem,
    Flavor,
    InrElement,
    SvnrElement,
    make_inr_set,
    make_svnr_set,
)


def svnr_set(raw, universe=paperdata.UNIVERSE_X):
    return make_svnr_set(universe, raw)


def inr_set(raw, universe=paperdata.UNIVERSE_X):
    return make_inr_set(universe, raw)


def build_problem(matrix_raw, flavor, criteria=paperdata.CRITERIA,
                  alternatives=paperdata.ALTERNATIVES):
    specs = tuple(
        CriterionSpec(label=l, kind=CriterionKind(k), weight=w) for l, k, w in criteria
    )
    element = SvnrElement if flavor is Flavor.SVNR else InrElement
    matrix = tuple(
        tuple(element(*cell) for cell in row) for row in matrix_raw
    )
    return DecisionProblem(
        alternatives=tuple(alternatives), criteria=specs, matrix=matrix, flavor=flavor
    )


def problem_doc(matrix_raw, flavor, criteria=paperdata.CRITERIA,
                alternatives=paperdata.ALTERNATIVES):
    """Raw matrix -> problem document dict (bypasses the library)."""
    def cell_doc(cell):
        names = ("truth", "indet", "falsity")
        if flavor == "svnr":
            return {n: list(comp) for n, comp in zip(names, cell)}
        return {n: [list(pair) for pair in comp] for n, comp in zip(names, cell)}

    return {
        "schema": 1,
        "flavor": flavor,
        "alternatives": list(alternatives),
        "criteria": [{"label": l, "kind": k, "weight": w} for l, k, w in criteria],
        "matrix": [[cell_doc(c) for c in row] for row in matrix_raw],
    }


def set_doc(raw, flavor="svnr", universe=paperdata.UNIVERSE_X, weights=None):
    names = ("truth", "indet", "falsity")

    def cell_doc(cell):
        if flavor == "svnr":
            return {n: list(comp) for n, comp in zip(names, cell)}
        return {n: [list(pair) for pair in comp] for n, comp in zip(names, cell)}

    doc = {
        "schema": 1,
        "flavor": flavor,
        "universe": list(universe),
        "elements": [cell_doc(c) for c in raw],
    }
    if weights is not None:
        doc["weights"] = list(weights)
    return doc


@pytest.fixture
def ex1_a():
    return svnr_set(paperdata.SET_A)


@pytest.fixture
def ex1_b():
    return svnr_set(paperdata.SET_B)


@pytest.fixture
def ex1_c():
    return svnr_set(paperdata.SET_C)


@pytest.fixture
def svnr_problem():
    return build_problem(paperdata.SVNR_MATRIX, Flavor.SVNR)


@pytest.fixture
def inr_problem():
    return build_problem(paperdata.INR_MATRIX, Flavor.INR)


@pytest.fixture
def svnr_problem_file(tmp_path):
    path = tmp_path / "problem_svnr.json"
    path.write_text(json.dumps(problem_doc(paperdata.SVNR_MATRIX, "svnr")))
    return path


@pytest.fixture
def inr_problem_file(tmp_path):
    path = tmp_path / "problem_inr.json"
    path.write_text(json.dumps(problem_doc(paperdata.INR_MATRIX, "inr")))
    return path

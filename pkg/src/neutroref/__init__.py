"""Similarity measures, ideal-solution ranking, and consistency analysis
for single-valued and interval neutrosophic refined sets."""

from .errors import (
    DimensionMismatch,
    DuplicateLabel,
    FlavorMismatch,
    IntervalInversion,
    NeutrorefError,
    RangeViolation,
    SchemaError,
    UndefinedSimilarity,
    UniverseMismatch,
    ValidationError,
    WeightError,
)
from .model import (
    Bound,
    Flavor,
    InrElement,
    Measure,
    RefinedSet,
    SvnrElement,
    UnitInterval,
    make_inr_set,
    make_svnr_set,
    project,
)
from .algebra import (
    null_set,
    svnr_complement,
    svnr_equal,
    svnr_intersection,
    svnr_subset,
    svnr_union,
    universal_set,
)
from .similarity import (
    SimilarityScore,
    WeightVector,
    inr_similarity,
    inr_weighted_similarity,
    similarity,
    svnr_similarity,
    svnr_weighted_similarity,
)
from .decision import (
    CriterionKind,
    CriterionSpec,
    DecisionProblem,
    Polarity,
    RankingReport,
    build_ideal,
    ideal_set,
    rank,
)
from .consistency import (
    ConsistencyReport,
    MeasureConsistency,
    Objective,
    consistency_degree,
    measure_consistency,
    projected_problem,
    select_measure,
)
from .documents import (
    consistency_document,
    parse_problem,
    parse_set,
    problem_document,
    ranking_document,
    set_document,
)

__version__ = "0.1.0"

__all__ = [
    "Bound",
    "ConsistencyReport",
    "CriterionKind",
    "CriterionSpec",
    "DecisionProblem",
    "DimensionMismatch",
    "DuplicateLabel",
    "Flavor",
    "FlavorMismatch",
    "InrElement",
    "IntervalInversion",
    "Measure",
    "MeasureConsistency",
    "NeutrorefError",
    "Objective",
    "Polarity",
    "RangeViolation",
    "RankingReport",
    "RefinedSet",
    "SchemaError",
    "SimilarityScore",
    "SvnrElement",
    "UndefinedSimilarity",
    "UnitInterval",
    "UniverseMismatch",
    "ValidationError",
    "WeightError",
    "WeightVector",
    "build_ideal",
    "consistency_degree",
    "consistency_document",
    "ideal_set",
    "inr_similarity",
    "inr_weighted_similarity",
    "make_inr_set",
    "make_svnr_set",
    "measure_consistency",
    "null_set",
    "parse_problem",
    "parse_set",
    "problem_document",
    "project",
    "projected_problem",
    "rank",
    "ranking_document",
    "select_measure",
    "set_document",
    "similarity",
    "svnr_complement",
    "svnr_equal",
    "svnr_intersection",
    "svnr_similarity",
    "svnr_subset",
    "svnr_union",
    "svnr_weighted_similarity",
    "universal_set",
]

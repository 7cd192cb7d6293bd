"""Set algebra for single-valued refined sets.

Subset, equality, complement, union, intersection, and the null/universal
constants. Union takes slotwise max of truth and min of indeterminacy and
falsity; intersection is the dual; complement maps (t, i, f) to
(f, 1-i, t). The plain (non-refined) operations are the p=1 case.
"""

from __future__ import annotations

from .errors import DimensionMismatch, FlavorMismatch, UniverseMismatch
from .model import CMP_TOL, Flavor, RefinedSet, SvnrElement


def _require_svnr(s: RefinedSet, op: str) -> None:
    if s.flavor is not Flavor.SVNR:
        raise FlavorMismatch(f"{op} is defined for single-valued sets only")


def _require_compatible(a: RefinedSet, b: RefinedSet, op: str) -> None:
    _require_svnr(a, op)
    _require_svnr(b, op)
    if a.universe != b.universe:
        raise UniverseMismatch(f"{op} needs identical universes (labels and order)")
    if a.dimension != b.dimension:
        raise DimensionMismatch(f"{op} needs equal dimensions ({a.dimension} vs {b.dimension})")


def svnr_subset(a: RefinedSet, b: RefinedSet, *, tol: float = CMP_TOL) -> bool:
    """True iff at every slot t_a <= t_b, i_a >= i_b, f_a >= f_b (within tol)."""
    _require_compatible(a, b, "subset")
    for ea, eb in zip(a.elements, b.elements):
        for i in range(ea.dimension):
            if ea.truth[i] > eb.truth[i] + tol:
                return False
            if ea.indet[i] < eb.indet[i] - tol:
                return False
            if ea.falsity[i] < eb.falsity[i] - tol:
                return False
    return True


def svnr_equal(a: RefinedSet, b: RefinedSet, *, tol: float = CMP_TOL) -> bool:
    """Componentwise equality within ``tol`` (mutual subset)."""
    _require_compatible(a, b, "equality")
    for ea, eb in zip(a.elements, b.elements):
        for i in range(ea.dimension):
            if (
                abs(ea.truth[i] - eb.truth[i]) > tol
                or abs(ea.indet[i] - eb.indet[i]) > tol
                or abs(ea.falsity[i] - eb.falsity[i]) > tol
            ):
                return False
    return True


def svnr_complement(a: RefinedSet) -> RefinedSet:
    """Slotwise (t, i, f) -> (f, 1-i, t)."""
    _require_svnr(a, "complement")
    elements = tuple(
        SvnrElement(
            truth=el.falsity,
            indet=tuple(1.0 - v for v in el.indet),
            falsity=el.truth,
        )
        for el in a.elements
    )
    return RefinedSet(universe=a.universe, elements=elements, flavor=Flavor.SVNR)


def svnr_union(a: RefinedSet, b: RefinedSet) -> RefinedSet:
    """Slotwise (max t, min i, min f)."""
    _require_compatible(a, b, "union")
    elements = tuple(
        SvnrElement(
            truth=tuple(map(max, ea.truth, eb.truth)),
            indet=tuple(map(min, ea.indet, eb.indet)),
            falsity=tuple(map(min, ea.falsity, eb.falsity)),
        )
        for ea, eb in zip(a.elements, b.elements)
    )
    return RefinedSet(universe=a.universe, elements=elements, flavor=Flavor.SVNR)


def svnr_intersection(a: RefinedSet, b: RefinedSet) -> RefinedSet:
    """Slotwise (min t, max i, max f)."""
    _require_compatible(a, b, "intersection")
    elements = tuple(
        SvnrElement(
            truth=tuple(map(min, ea.truth, eb.truth)),
            indet=tuple(map(max, ea.indet, eb.indet)),
            falsity=tuple(map(max, ea.falsity, eb.falsity)),
        )
        for ea, eb in zip(a.elements, b.elements)
    )
    return RefinedSet(universe=a.universe, elements=elements, flavor=Flavor.SVNR)


def _constant_set(universe, p: int, t: float, i: float, f: float) -> RefinedSet:
    el = SvnrElement(truth=(t,) * p, indet=(i,) * p, falsity=(f,) * p)
    universe = tuple(universe)
    return RefinedSet(universe=universe, elements=(el,) * len(universe), flavor=Flavor.SVNR)


def null_set(universe, p: int = 1) -> RefinedSet:
    """Set with every slot (0, 1, 1): subset of everything."""
    return _constant_set(universe, p, 0.0, 1.0, 1.0)


def universal_set(universe, p: int = 1) -> RefinedSet:
    """Set with every slot (1, 0, 0): superset of everything."""
    return _constant_set(universe, p, 1.0, 0.0, 0.0)

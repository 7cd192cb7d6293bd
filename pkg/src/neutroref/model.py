"""Core value types: elements, intervals, refined sets, and projection.

A refined set assigns every universe element three membership sequences
(truth / indeterminacy / falsity) of a common length ``p``. Entries are
plain floats in [0, 1] for the single-valued flavor (SVNR) and closed
sub-intervals of [0, 1] for the interval flavor (INR). All types are
immutable after construction and validated eagerly: invalid data never
yields a value object.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    DimensionMismatch,
    DuplicateLabel,
    FlavorMismatch,
    IntervalInversion,
    RangeViolation,
    ValidationError,
)

# Slack absorbed by the triple-sum bound t+i+f <= 3 (decimal-literal rounding).
TRIPLE_SUM_TOL = 1e-9
# Absolute tolerance for value comparisons (subset / equality tests).
CMP_TOL = 1e-9


class Flavor(Enum):
    """Entry kind of a refined set: single-valued or interval-valued."""

    SVNR = "svnr"
    INR = "inr"


class Bound(Enum):
    """Which interval endpoint a projection extracts."""

    LOWER = "lower"
    UPPER = "upper"


class Measure(Enum):
    """Vector similarity measure family."""

    JACCARD = "jaccard"
    DICE = "dice"
    COSINE = "cosine"


@dataclass(frozen=True)
class UnitInterval:
    """Closed sub-interval of [0, 1]."""

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not 0.0 <= lo <= 1.0:
            raise RangeViolation(f"value {lo!r} outside [0, 1]", path="lo")
        if not 0.0 <= hi <= 1.0:
            raise RangeViolation(f"value {hi!r} outside [0, 1]", path="hi")
        if lo > hi:
            raise IntervalInversion(f"interval [{lo}, {hi}] has lo > hi")

    def endpoint(self, bound: Bound) -> float:
        return self.lo if bound is Bound.LOWER else self.hi

    @property
    def width(self) -> float:
        return self.hi - self.lo


IntervalLike = Union[UnitInterval, Sequence[float]]


def _as_interval(value: IntervalLike, name: str, index: int) -> UnitInterval:
    if isinstance(value, UnitInterval):
        return value
    try:
        lo, hi = value
    except (TypeError, ValueError):
        raise ValidationError(
            f"expected an [lo, hi] pair, got {value!r}", path=f"{name}[{index}]"
        ) from None
    try:
        return UnitInterval(lo, hi)
    except ValidationError as exc:
        raise exc.at(f"{name}[{index}]") from None


def _as_float_seq(values: Iterable[float], name: str) -> tuple[float, ...]:
    seq = tuple(float(v) for v in values)
    for i, v in enumerate(seq):
        if not 0.0 <= v <= 1.0:
            raise RangeViolation(f"value {v!r} outside [0, 1]", path=f"{name}[{i}]")
    return seq


@dataclass(frozen=True)
class SvnrElement:
    """Truth / indeterminacy / falsity sequences of one universe element.

    Each sequence has the element's dimension ``p``; every slot satisfies
    ``truth[i] + indet[i] + falsity[i] <= 3``. Sequences are NOT required
    to be monotone.
    """

    truth: tuple[float, ...]
    indet: tuple[float, ...]
    falsity: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "truth", _as_float_seq(self.truth, "truth"))
        object.__setattr__(self, "indet", _as_float_seq(self.indet, "indet"))
        object.__setattr__(self, "falsity", _as_float_seq(self.falsity, "falsity"))
        p = len(self.truth)
        if p < 1:
            raise DimensionMismatch("membership sequences must have length >= 1")
        if len(self.indet) != p or len(self.falsity) != p:
            raise DimensionMismatch(
                "ragged membership sequences "
                f"(truth {p}, indet {len(self.indet)}, falsity {len(self.falsity)})"
            )
        # unreachable while every component is range-checked to [0, 1]
        # (three such values cannot exceed 3); kept as an explicit guard
        for i, (t, ind, f) in enumerate(zip(self.truth, self.indet, self.falsity)):
            total = t + ind + f
            if total > 3.0 + TRIPLE_SUM_TOL:
                raise RangeViolation(
                    f"truth+indet+falsity = {total} exceeds 3", path=f"slot[{i}]"
                )

    @property
    def dimension(self) -> int:
        return len(self.truth)

    def slot(self, i: int) -> tuple[float, float, float]:
        return (self.truth[i], self.indet[i], self.falsity[i])


@dataclass(frozen=True)
class InrElement:
    """Interval-valued counterpart of :class:`SvnrElement`.

    Both the lower and the upper endpoints of each slot satisfy the
    triple-sum bound.
    """

    truth: tuple[UnitInterval, ...]
    indet: tuple[UnitInterval, ...]
    falsity: tuple[UnitInterval, ...]

    def __post_init__(self):
        for name in ("truth", "indet", "falsity"):
            seq = tuple(
                _as_interval(v, name, i) for i, v in enumerate(getattr(self, name))
            )
            object.__setattr__(self, name, seq)
        p = len(self.truth)
        if p < 1:
            raise DimensionMismatch("membership sequences must have length >= 1")
        if len(self.indet) != p or len(self.falsity) != p:
            raise DimensionMismatch(
                "ragged membership sequences "
                f"(truth {p}, indet {len(self.indet)}, falsity {len(self.falsity)})"
            )
        for i, (t, ind, f) in enumerate(zip(self.truth, self.indet, self.falsity)):
            for bound in Bound:
                total = t.endpoint(bound) + ind.endpoint(bound) + f.endpoint(bound)
                if total > 3.0 + TRIPLE_SUM_TOL:
                    raise RangeViolation(
                        f"{bound.value} truth+indet+falsity = {total} exceeds 3",
                        path=f"slot[{i}]",
                    )

    @property
    def dimension(self) -> int:
        return len(self.truth)

    def project(self, bound: Bound) -> SvnrElement:
        """Single-valued element taking this element's chosen endpoints."""
        return SvnrElement(
            truth=tuple(v.endpoint(bound) for v in self.truth),
            indet=tuple(v.endpoint(bound) for v in self.indet),
            falsity=tuple(v.endpoint(bound) for v in self.falsity),
        )


Element = Union[SvnrElement, InrElement]


@dataclass(frozen=True)
class RefinedSet:
    """Ordered universe of labels with one element record per label."""

    universe: tuple[str, ...]
    elements: tuple[Element, ...]
    flavor: Flavor

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(str(x) for x in self.universe))
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.universe:
            raise ValidationError("universe must be non-empty")
        seen = set()
        for label in self.universe:
            if label in seen:
                raise DuplicateLabel(f"duplicate universe label {label!r}")
            seen.add(label)
        if len(self.elements) != len(self.universe):
            raise ValidationError(
                f"{len(self.universe)} universe labels but {len(self.elements)} elements"
            )
        want = SvnrElement if self.flavor is Flavor.SVNR else InrElement
        for label, el in zip(self.universe, self.elements):
            if not isinstance(el, want):
                raise FlavorMismatch(
                    f"{self.flavor.value} set holds a {type(el).__name__}", path=label
                )
        p = self.elements[0].dimension
        for label, el in zip(self.universe, self.elements):
            if el.dimension != p:
                raise DimensionMismatch(
                    f"dimension {el.dimension} differs from the set's p={p}", path=label
                )

    @property
    def dimension(self) -> int:
        return self.elements[0].dimension

    def __len__(self) -> int:
        return len(self.universe)

    def element(self, label: str) -> Element:
        try:
            return self.elements[self.universe.index(label)]
        except ValueError:
            raise KeyError(label) from None


RecordTriple = tuple[Sequence, Sequence, Sequence]
Records = Union[Sequence[RecordTriple], Mapping[str, RecordTriple]]


def _record_for(records: Records, label: str, index: int) -> RecordTriple:
    if isinstance(records, Mapping):
        try:
            return records[label]
        except KeyError:
            raise ValidationError("no record for this universe label", path=label) from None
    try:
        return records[index]
    except IndexError:
        raise ValidationError("no record for this universe label", path=label) from None


def make_svnr_set(universe: Sequence[str], records: Records) -> RefinedSet:
    """Build a validated single-valued refined set.

    ``records`` holds one (truth, indet, falsity) triple of sequences per
    universe label, either as a sequence aligned with ``universe`` or as a
    mapping keyed by label. The dimension p is inferred from the first
    record; every other record must match it.
    """
    universe = tuple(str(x) for x in universe)
    elements = []
    for index, label in enumerate(universe):
        truth, indet, falsity = _record_for(records, label, index)
        try:
            elements.append(SvnrElement(tuple(truth), tuple(indet), tuple(falsity)))
        except ValidationError as exc:
            raise exc.at(label) from None
    return RefinedSet(universe=universe, elements=tuple(elements), flavor=Flavor.SVNR)


def make_inr_set(universe: Sequence[str], records: Records) -> RefinedSet:
    """Build a validated interval-valued refined set (see :func:`make_svnr_set`)."""
    universe = tuple(str(x) for x in universe)
    elements = []
    for index, label in enumerate(universe):
        truth, indet, falsity = _record_for(records, label, index)
        try:
            elements.append(InrElement(tuple(truth), tuple(indet), tuple(falsity)))
        except ValidationError as exc:
            raise exc.at(label) from None
    return RefinedSet(universe=universe, elements=tuple(elements), flavor=Flavor.INR)


def project(s: RefinedSet, bound: Bound) -> RefinedSet:
    """Single-valued set taking every interval's chosen endpoint.

    Universe, order, and dimension are preserved. Raises
    :class:`FlavorMismatch` if ``s`` is already single-valued.
    """
    if s.flavor is not Flavor.INR:
        raise FlavorMismatch("projection needs an interval-valued set")
    return RefinedSet(
        universe=s.universe,
        elements=tuple(el.project(bound) for el in s.elements),
        flavor=Flavor.SVNR,
    )

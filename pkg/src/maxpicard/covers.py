"""Building data of Z/2 x Z/2 covers, their invariants, and cyclic covers of
Hirzebruch surfaces branched along two fibers.

Conventions: a bidouble cover ``X -> Y`` is given by reduced branch divisors
``B1, B2, B3`` and line bundles ``L1, L2, L3`` with

    2 L1 = B2 + B3,   2 L2 = B1 + B3,   L3 = L1 + L2 - B3.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import BuildingDataError, TransportShapeError
from .singularities import (
    SMOOTH,
    LocalType,
    SingularityCensus,
    TransportRule,
    transport,
    transport_type,
)
from .surfaces import (
    BaseSurface,
    DivisorClass,
    Positivity,
    SurfaceInvariants,
    canonical_class,
    h0,
    intersect,
    positivity,
)

PARTS = ("B1", "B2", "B3")


@dataclass(frozen=True)
class Component:
    """A labeled irreducible curve with its class."""

    label: str
    cls: DivisorClass


@dataclass(frozen=True)
class BranchDivisor:
    components: Tuple[Component, ...] = ()

    def total(self, surface: BaseSurface) -> DivisorClass:
        out = surface.zero()
        for c in self.components:
            out = out + c.cls
        return out

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(c.label for c in self.components)


def _local_str(t: LocalType) -> str:
    return "smooth" if t is SMOOTH else str(t)


@dataclass(frozen=True)
class SingularEvent:
    """One point of a branch configuration together with how it is transported.

    ``ade`` is the local type of the union of the curves through the point
    (before the rule is applied).  ``membership`` names the branch parts
    through the point; at the cyclic stage, before any partition exists, it
    lists curve labels instead.
    """

    point_label: str
    membership: frozenset
    ade: LocalType
    rule: Optional[TransportRule] = None
    parameter: int = 0
    fiber: Optional[str] = None
    on_branch_fiber: bool = False
    transversal: bool = True
    part_types: Tuple[Tuple[str, LocalType], ...] = ()
    history: Tuple[TransportRule, ...] = ()

    def __post_init__(self):
        if not self.membership:
            raise ValueError(f"event {self.point_label} has empty membership")
        object.__setattr__(self, "membership", frozenset(self.membership))
        if self.rule in _TWO_PART_RULES or self.rule is TransportRule.R8:
            parts = self.membership & set(PARTS)
            need = 1 if self.rule is TransportRule.R8 else 2
            if len(parts) != need:
                raise ValueError(
                    f"event {self.point_label}: {self.rule.name} needs {need} branch part(s), "
                    f"got {sorted(parts)}"
                )

    def outcome(self) -> SingularityCensus:
        if self.rule is None:
            if self.ade is SMOOTH:
                return SingularityCensus()
            return SingularityCensus({self.ade: 1})
        return transport(self.rule, self.ade, self.parameter or None)

    def to_json(self) -> dict:
        out = {
            "point": self.point_label,
            "membership": sorted(self.membership),
            "type": _local_str(self.ade),
            "rule": self.rule.name if self.rule else None,
            "parameter": self.parameter,
            "fiber": self.fiber,
            "outcome": self.outcome().to_json(),
        }
        if self.part_types:
            out["part_types"] = {k: _local_str(v) for k, v in self.part_types}
        return out


_TWO_PART_RULES = (TransportRule.R4, TransportRule.R5, TransportRule.R6, TransportRule.R7)


def census_of(events: Sequence[SingularEvent]) -> SingularityCensus:
    total = SingularityCensus()
    for ev in events:
        total = total + ev.outcome()
    return total


@dataclass(frozen=True)
class BuildingData:
    surface: BaseSurface
    b1: BranchDivisor
    b2: BranchDivisor
    b3: BranchDivisor
    l1: DivisorClass
    l2: DivisorClass
    l3: DivisorClass
    annotations: Tuple[SingularEvent, ...] = ()

    @property
    def branch(self) -> Tuple[BranchDivisor, BranchDivisor, BranchDivisor]:
        return (self.b1, self.b2, self.b3)

    def branch_classes(self) -> Tuple[DivisorClass, DivisorClass, DivisorClass]:
        return tuple(b.total(self.surface) for b in self.branch)

    @property
    def line_bundles(self) -> Tuple[DivisorClass, DivisorClass, DivisorClass]:
        return (self.l1, self.l2, self.l3)

    def half_canonical_image(self) -> DivisorClass:
        """``2K_Y + B1 + B2 + B3``, whose pull-back is ``2K_X``."""
        b1, b2, b3 = self.branch_classes()
        return 2 * canonical_class(self.surface) + b1 + b2 + b3

    def to_json(self) -> dict:
        def branch(b):
            return [{"label": c.label, "class": list(c.cls.coefficients)} for c in b.components]

        return {
            "surface": self.surface.name(),
            "basis": list(self.surface.basis_names),
            "B": {name: branch(b) for name, b in zip(PARTS, self.branch)},
            "L": {
                f"L{i + 1}": list(l.coefficients) for i, l in enumerate(self.line_bundles)
            },
        }


def validate_building_data(bd: BuildingData) -> List[str]:
    """Violated conditions, or an empty list when the data is consistent."""
    problems = []
    classes = list(bd.line_bundles)
    for b in bd.branch:
        classes.extend(c.cls for c in b.components)
    foreign = [c for c in classes if c.surface != bd.surface]
    if foreign:
        return [f"class {c} lives on {c.surface}, not {bd.surface}" for c in foreign]
    b1, b2, b3 = bd.branch_classes()
    if 2 * bd.l1 != b2 + b3:
        problems.append("2L1 != B2 + B3")
    if 2 * bd.l2 != b1 + b3:
        problems.append("2L2 != B1 + B3")
    if bd.l3 != bd.l1 + bd.l2 - b3:
        problems.append("L3 != L1 + L2 - B3")
    for i, l in enumerate(bd.line_bundles, 1):
        if l.is_zero():
            problems.append(f"L{i} is trivial")
    seen: Dict[str, str] = {}
    for name, b in zip(PARTS, bd.branch):
        for label in b.labels:
            if label in seen:
                problems.append(f"component {label} appears in both {seen[label]} and {name}")
            seen[label] = name
    return problems


def _require_valid(bd: BuildingData):
    problems = validate_building_data(bd)
    if problems:
        raise BuildingDataError("; ".join(problems))


def canonical_numbers(bd: BuildingData) -> Tuple[int, int]:
    """``(K^2, chi)`` of the cover; needs only lattice arithmetic."""
    _require_valid(bd)
    k = canonical_class(bd.surface)
    # 2K_X is the pull-back of this class under a degree 4 map
    image = bd.half_canonical_image()
    k2 = intersect(image, image)
    half_sum = Fraction(sum(intersect(l, l + k) for l in bd.line_bundles), 2)
    if half_sum.denominator != 1:
        raise BuildingDataError(f"chi is not integral: sum L(L+K)/2 = {half_sum}")
    chi = 4 * bd.surface.chi + int(half_sum)
    return k2, chi


def bidouble_invariants(bd: BuildingData) -> SurfaceInvariants:
    k2, chi = canonical_numbers(bd)
    k = canonical_class(bd.surface)
    pg = bd.surface.pg + sum(h0(k + l) for l in bd.line_bundles)
    q = 1 + pg - chi
    if q < 0:
        raise BuildingDataError(f"negative irregularity q = {q}")
    return SurfaceInvariants.from_numbers(k2, chi, pg)


def half_canonical_ample(bd: BuildingData) -> bool:
    return positivity(bd.half_canonical_image()) is Positivity.AMPLE


# ---------------------------------------------------------------------------
# cyclic covers F_e <- F_{de} branched along two fibers
# ---------------------------------------------------------------------------


def _check_degree(d: int):
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"cyclic cover degree must be a positive integer, got {d}")


def cyclic_pullback(e: int, d: int, c: DivisorClass, on_branch: bool = False) -> Tuple[DivisorClass, ...]:
    """Components of the (reduced) preimage of ``c`` under the degree ``d``
    cover ``F_{de} -> F_e`` branched along two fibers.

    ``on_branch`` marks ``c`` as one of the two branch fibers.  A fiber not on
    the branch locus splits into ``d`` disjoint fibers; any other class
    ``a Delta0 + b F`` is returned as the single class ``a Delta0 + d b F``.
    """
    _check_degree(d)
    base = BaseSurface.hirzebruch(e)
    if c.surface != base:
        raise ValueError(f"class {c} is not on {base}")
    target = BaseSurface.hirzebruch(d * e)
    a, b = c.coefficients
    is_fiber = (a, b) == (0, 1)
    if on_branch:
        if not is_fiber:
            raise ValueError("only fibers can be branch curves of the cyclic cover")
        return (target.cls(0, 1),)
    if is_fiber:
        return tuple(target.cls(0, 1) for _ in range(d))
    return (target.cls(a, d * b),)


def cyclic_census_transport(events: Sequence[SingularEvent], d: int) -> List[SingularEvent]:
    """Apply the cyclic rules: points on a branch fiber keep one preimage with
    its tangency order multiplied by ``d``; other points get ``d`` copies."""
    _check_degree(d)
    out = []
    for ev in events:
        if ev.on_branch_fiber:
            if not ev.transversal:
                raise TransportShapeError(
                    f"point {ev.point_label} is tangent to the branch fiber {ev.fiber}"
                )
            if ev.ade is not SMOOTH and not (ev.ade.letter == "A" and ev.ade.index % 2):
                raise TransportShapeError(
                    f"point {ev.point_label} on branch fiber {ev.fiber} has type {ev.ade}, "
                    "only transversal A_odd is allowed"
                )
            new = transport_type(TransportRule.R1, ev.ade, d)
            out.append(
                replace(
                    ev,
                    point_label=f"{ev.point_label}~",
                    ade=new,
                    rule=TransportRule.R1,
                    parameter=d,
                    history=ev.history + (TransportRule.R1,),
                )
            )
        else:
            for j in range(1, d + 1):
                out.append(
                    replace(
                        ev,
                        point_label=f"{ev.point_label}#{j}",
                        fiber=None if ev.fiber is None else f"{ev.fiber}#{j}",
                        rule=TransportRule.R2,
                        parameter=d,
                        history=ev.history + (TransportRule.R2,),
                    )
                )
    return out


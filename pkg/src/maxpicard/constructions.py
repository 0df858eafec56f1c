"""The four explicit constructions: two three-parameter families of bidouble
covers of Hirzebruch surfaces and two isolated covers (``K^2 = 1, chi = 3``
over the plane and ``K^2 = 7, chi = 6`` over a blown-up ``F_1``).

Every record is assembled from building data, its invariants are recomputed
from the lattice and compared with closed forms, and its singularity census
feeds the Picard certificate.  :func:`census_pipeline` re-derives the family
censuses from explicit plane coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import plane_oracle as po
from .certify import Certificate, certify_maximal
from .covers import (
    BranchDivisor,
    BuildingData,
    Component,
    SingularEvent,
    bidouble_invariants,
    canonical_numbers,
    census_of,
    cyclic_census_transport,
    cyclic_pullback,
    half_canonical_ample,
    validate_building_data,
)
from .errors import InconsistencyError, ParameterError, TransportShapeError
from .singularities import (
    SMOOTH,
    A,
    D,
    E,
    SingularityCensus,
    TransportRule,
    bidouble_rule,
    union_of_smooth_branches,
)
from .surfaces import BaseSurface, DivisorClass, SurfaceInvariants, intersect, pullback_to_blowup


@dataclass(frozen=True)
class FamilyParams:
    family: str
    n: int
    m: int
    k: int

    def __post_init__(self):
        fam = str(self.family).upper()
        if fam not in ("A", "B"):
            raise ParameterError(f"unknown family {self.family!r}; expected A or B")
        object.__setattr__(self, "family", fam)
        for name in ("n", "m", "k"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParameterError(f"{name} must be an integer, got {v!r}")

    @property
    def degree(self) -> int:
        """Degree of the cyclic cover, which is also ``e`` of the base ``F_e``."""
        return 2 * self.n + self.k

    def violations(self) -> List[str]:
        n, m, k = self.n, self.m, self.k
        out = [f"{name} = {v} is negative" for name, v in zip("nmk", (n, m, k)) if v < 0]
        if out:
            return out
        if self.degree == 0:
            out.append("2n + k must be nonzero")
        if m > self.degree:
            out.append(f"m = {m} exceeds 2n + k = {self.degree}")
        if (m - k) % 2:
            out.append(f"m = {m} and k = {k} have different parity")
        if self.family == "A" and (n, m, k) == (1, 0, 0):
            out.append("(n, m, k) = (1, 0, 0) is excluded")
        if self.family == "B" and k > m:
            out.append(f"k = {k} exceeds m = {m}")
        return out

    def validate(self) -> "FamilyParams":
        problems = self.violations()
        if problems:
            raise ParameterError(
                f"family {self.family} parameters ({self.n}, {self.m}, {self.k}): " + "; ".join(problems)
            )
        return self

    def is_valid(self) -> bool:
        return not self.violations()

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "k": self.k}


def parameter_grid(family: str, bound: int) -> List[FamilyParams]:
    """All valid parameters with ``n, m, k <= bound`` in lexicographic order."""
    out = []
    for n in range(bound + 1):
        for m in range(bound + 1):
            for k in range(bound + 1):
                p = FamilyParams(family, n, m, k)
                if p.is_valid():
                    out.append(p)
    return out


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------


def closed_form_invariants(params: FamilyParams) -> SurfaceInvariants:
    n, m, k = params.n, params.m, params.k
    if params.family == "A":
        return SurfaceInvariants.from_numbers(6 * n + 2 * m + 5 * k - 4, 3 * n + m + 2 * k + 1, 3 * n + m + 2 * k)
    return SurfaceInvariants.from_numbers(10 * n + 2 * m + 5 * k - 4, 5 * n + m + 2 * k + 1, 5 * n + m + 2 * k)


def closed_form_census(params: FamilyParams) -> SingularityCensus:
    n, m, k = params.n, params.m, params.k
    d = params.degree
    if params.family == "A":
        parts = [
            (D(2 * d + 2), 4),
            (D(4), 2 * m),
            (A(1), 2 * d),
            (D(d + 2), 2),
            (A(3), k),
        ]
    else:
        parts = [
            (D(4 * d + 2), 4),
            (A(1), 2 * d + 2),
            (D(4), 2 * m - 2 * k),
            (D(d + 2), 1),
            (A(3), k),
            (A(1), d),
        ]
    total = SingularityCensus()
    for t, c in parts:
        total = total + SingularityCensus({t: c})
    return total


# ---------------------------------------------------------------------------
# building data
# ---------------------------------------------------------------------------


def _branch(items: Sequence[Tuple[str, DivisorClass]]) -> BranchDivisor:
    return BranchDivisor(tuple(Component(label, cls) for label, cls in items))


def _complete(surface: BaseSurface, b1, b2, b3) -> BuildingData:
    """Building data with the line bundles solved from the branch divisors."""
    c1, c2, c3 = (b.total(surface) for b in (b1, b2, b3))
    halves = []
    for two_l in (c2 + c3, c1 + c3):
        if any(v % 2 for v in two_l.coefficients):
            raise ParameterError(f"{two_l} is not divisible by 2")
        halves.append(DivisorClass(surface, tuple(v // 2 for v in two_l.coefficients)))
    l1, l2 = halves
    return BuildingData(surface, b1, b2, b3, l1, l2, l1 + l2 - c3)


def family_labels(params: FamilyParams) -> Dict[str, Tuple[str, ...]]:
    """Component labels of each branch part."""
    m, k = params.m, params.k
    if params.family == "A":
        return {
            "B1": ("Delta0",),
            "B2": ("l4",) + tuple(f"l7#{j}" for j in range(1, k + 1)),
            "B3": ("l1", "l2", "l3", "l5", "l6") + tuple(f"l8#{j}" for j in range(1, m + 1)),
        }
    return {
        "B1": ("Delta0",),
        "B2": ("l3",) + tuple(f"l5#{j}" for j in range(1, k + 1)),
        "B3": ("C", "l1", "l2", "l4", "l6") + tuple(f"l5#{j}" for j in range(k + 1, m + 1)),
    }


def _declared_class(surface: BaseSurface, family: str, label: str) -> DivisorClass:
    d = surface.e
    base = label.split("#")[0]
    if base == "Delta0":
        return surface.cls(1, 0)
    if family == "A":
        if base in ("l1", "l2", "l3", "l4"):
            return surface.cls(1, d)
        return surface.cls(0, 1)
    if base == "C":
        return surface.cls(1, 2 * d)
    if base in ("l1", "l2", "l3"):
        return surface.cls(1, d)
    return surface.cls(0, 1)


def family_building_data(params: FamilyParams) -> BuildingData:
    params.validate()
    surface = BaseSurface.hirzebruch(params.degree)
    labels = family_labels(params)
    b1, b2, b3 = (
        _branch([(l, _declared_class(surface, params.family, l)) for l in labels[name]])
        for name in ("B1", "B2", "B3")
    )
    return _complete(surface, b1, b2, b3)


# ---------------------------------------------------------------------------
# records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstructionRecord:
    family: str
    params: Optional[FamilyParams]
    building_data: BuildingData
    census: SingularityCensus
    invariants: SurfaceInvariants
    independent_divisors: int
    extra_rank: int = 0
    extra_matrix: Optional[Tuple[Tuple[int, ...], ...]] = None
    certificate: Optional[Certificate] = None
    notes: Tuple[Tuple[str, object], ...] = ()

    @property
    def maximal(self) -> bool:
        return bool(self.certificate and self.certificate.maximal)

    def rank_breakdown(self) -> dict:
        by_type = {str(t): t.rank * c for t, c in self.census.items()}
        return {
            "census": by_type,
            "census_rank": self.census.total_rank,
            "independent_divisors": self.independent_divisors,
            "extra_rank": self.extra_rank,
            "lower_bound": self.census.total_rank + self.independent_divisors + self.extra_rank,
            "h11": self.invariants.h11,
        }

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "params": self.params.to_json() if self.params else None,
            "surface": self.building_data.surface.name(),
            "building_data": self.building_data.to_json(),
            "census": self.census.to_json(),
            "invariants": self.invariants.to_json(),
            "rank_breakdown": self.rank_breakdown(),
            "certificate": self.certificate.to_json() if self.certificate else None,
            "maximal": self.maximal,
        }
        if self.extra_matrix is not None:
            out["extra_matrix"] = [list(r) for r in self.extra_matrix]
        for key, value in self.notes:
            out[key] = value
        return out


def _finish(record: ConstructionRecord) -> ConstructionRecord:
    if record.invariants.q != 0:
        raise InconsistencyError(f"{record.family}: irregularity q = {record.invariants.q}, expected 0")
    return replace(record, certificate=certify_maximal(record))


def _family(params: FamilyParams) -> ConstructionRecord:
    bd = family_building_data(params)
    problems = validate_building_data(bd)
    if problems:
        raise InconsistencyError("; ".join(problems))
    inv = bidouble_invariants(bd)
    expected = closed_form_invariants(params)
    if inv != expected:
        raise InconsistencyError(f"invariants {inv} differ from the closed form {expected}")
    if not half_canonical_ample(bd):
        raise InconsistencyError(f"2K is not ample for {params}")
    rec = ConstructionRecord(
        family=params.family,
        params=params,
        building_data=bd,
        census=closed_form_census(params),
        invariants=inv,
        independent_divisors=2,
    )
    return _finish(rec)


def family_a(n: int, m: int, k: int) -> ConstructionRecord:
    return _family(FamilyParams("A", n, m, k).validate())


def family_b(n: int, m: int, k: int) -> ConstructionRecord:
    return _family(FamilyParams("B", n, m, k).validate())


def construct(family: str, n: int, m: int, k: int) -> ConstructionRecord:
    return _family(FamilyParams(family, n, m, k).validate())


M13_CENSUS = SingularityCensus({E(7): 2, A(1): 4, A(5): 2})
M13_B1_CENSUS = SingularityCensus({E(7): 1, A(1): 1, A(5): 1})


def m13_building_data() -> BuildingData:
    p2 = BaseSurface.plane()
    b1 = _branch([("C", p2.cls(3)), ("X0", p2.cls(1)), ("X2", p2.cls(1))])
    return _complete(p2, b1, _branch([("T2", p2.cls(1))]), _branch([("T3", p2.cls(1))]))


def m13_events() -> List[SingularEvent]:
    """Singular points of the branch locus of the ``K^2 = 1`` cover, from coordinates."""
    a = po.instantiate_m13()
    return po.assign_bidouble_rules(po.derive_census(a, po.M13_PARTITION))


def construct_m13() -> ConstructionRecord:
    bd = m13_building_data()
    inv = bidouble_invariants(bd)
    if (inv.k2, inv.chi, inv.pg) != (1, 3, 2):
        raise InconsistencyError(f"K^2 = 1 cover has invariants {inv}")
    census = census_of(m13_events())
    if census != M13_CENSUS:
        raise InconsistencyError(f"coordinate census {census} differs from {M13_CENSUS}")
    rec = ConstructionRecord(
        family="M13",
        params=None,
        building_data=bd,
        census=census,
        invariants=inv,
        independent_divisors=1,
    )
    return _finish(rec)


# the three curves over the elliptic singularity: the (-2)-curve from Delta0
# and the two (-1) elliptic curves over the B2 fiber
M76_MATRIX = ((-2, 1, 0), (1, -1, 1), (0, 1, -1))
M76_CENSUS = SingularityCensus({A(15): 2, A(3): 4, A(1): 8})


def m76_base_building_data() -> BuildingData:
    f1 = BaseSurface.hirzebruch(1)
    b1 = _branch([("Delta0", f1.cls(1, 0)), ("C", f1.cls(5, 7))])
    return _complete(f1, b1, _branch([("F2", f1.cls(0, 1))]), _branch([("F3", f1.cls(0, 1))]))


def m76_blown_up_building_data() -> BuildingData:
    base = m76_base_building_data()
    s = BaseSurface.blown_up_f1()
    e = s.cls(0, 0, 1)

    def up(label, minus_e):
        (comp,) = [c for b in base.branch for c in b.components if c.label == label]
        return (label, pullback_to_blowup(comp.cls) - minus_e * e)

    b1 = _branch([up("Delta0", 1), up("C", 2)])
    b2 = _branch([up("F2", 1)])
    b3 = _branch([up("F3", 0), ("E", e)])
    return _complete(s, b1, b2, b3)


def nef_pairing(alpha: int, beta: int, gamma: int) -> int:
    """``(b*(alpha Delta0 + beta F) - gamma E) . (b*(2 Delta0 + 3F) - E)``."""
    s = BaseSurface.blown_up_f1()
    return intersect(s.cls(alpha, beta, -gamma), s.cls(2, 3, -1))


def construct_m76() -> ConstructionRecord:
    base = m76_base_building_data()
    y = bidouble_invariants(base)
    if (y.k2, y.chi, y.pg, y.q) != (8, 7, 6, 0):
        raise InconsistencyError(f"intermediate cover has invariants {y}")
    bd = m76_blown_up_building_data()
    k2, chi = canonical_numbers(bd)
    # h0 is not available on the blow-up; q = 0 gives p_g = chi - 1
    inv = SurfaceInvariants.from_numbers(k2, chi, chi - 1)
    if (inv.k2, inv.chi) != (7, 6):
        raise InconsistencyError(f"blown-up cover has invariants {inv}")
    half = bd.half_canonical_image()
    if half != BaseSurface.blown_up_f1().cls(2, 3, -1):
        raise InconsistencyError(f"2K pulls back from {half}, expected b*(2Delta0+3F) - E")
    for a in range(4):
        for b in range(4):
            for g in range(4):
                if nef_pairing(a, b, g) != a + 2 * b - g:
                    raise InconsistencyError("nef pairing identity fails")
    rec = ConstructionRecord(
        family="M76",
        params=None,
        building_data=bd,
        census=M76_CENSUS,
        invariants=inv,
        independent_divisors=0,
        extra_rank=3,
        extra_matrix=M76_MATRIX,
        notes=(
            ("intermediate_invariants", y.to_json()),
            ("pg_source", "assumed from q = 0; h0 is not computed on the blow-up"),
        ),
    )
    return _finish(rec)


FIXED_CASES = {"M13": construct_m13, "M76": construct_m76}


# ---------------------------------------------------------------------------
# coordinate pipeline
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RuledPoint:
    """A point of ``F_1`` (the plane blown up at the centre) with the curves
    through it.  ``curves`` excludes fibers; every curve is smooth there."""

    label: str
    curves: Tuple[str, ...]
    contacts: Tuple[Tuple[Tuple[str, str], int], ...]
    fiber: Optional[str]
    on_branch_fiber: bool

    def contact_map(self) -> Dict[frozenset, int]:
        return {frozenset(pair): o for pair, o in self.contacts}


@dataclass(frozen=True)
class RuledConfiguration:
    arrangement: po.Arrangement
    points: Tuple[RuledPoint, ...]
    classes: Tuple[Tuple[str, Tuple[int, int]], ...]


def _pairs(labels, order):
    out = []
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            out.append(((a, b), order(a, b)))
    return tuple(out)


@lru_cache(maxsize=None)
def ruled_configuration(family: str) -> RuledConfiguration:
    """Blow up the family's arrangement at its centre and describe every point
    where curves or fibers of the resulting configuration on ``F_1`` meet."""
    a = po.instantiate_family_a() if family == "A" else po.instantiate_family_b()
    q = a.point(a.center)
    fibers = list(a.fibers)
    non_fiber = [c for c in a.curves if c.label not in fibers]
    points: List[RuledPoint] = []
    for pic in po.point_pictures(a):
        if pic.point == q or not pic.curves:
            continue
        if not all(pic.smooth):
            raise TransportShapeError(f"a curve is singular at {pic.label}")
        if len(pic.fibers) > 1:
            raise InconsistencyError(f"two fibers meet at {pic.label} away from the centre")
        if pic.fiber is not None and not pic.transversal:
            raise TransportShapeError(f"a curve is tangent to fiber {pic.fiber} at {pic.label}")
        points.append(
            RuledPoint(
                pic.label, pic.curves, pic.contacts, pic.fiber, pic.fiber in a.branch_fibers
            )
        )
    # points of the exceptional curve are tangent directions at the centre
    directions: Dict[po.ProjLine, List[str]] = {}
    for c in non_fiber:
        if c.contains(q):
            if not po.is_smooth_at(c, q):
                raise TransportShapeError(f"{c.label} is singular at the centre")
            directions.setdefault(po.tangent_line(c, q), []).append(c.label)
    fiber_lines = {po.tangent_line(a.curve(f), q): f for f in fibers}
    for line in fiber_lines:
        directions.setdefault(line, [])
    for line, through in sorted(directions.items(), key=lambda kv: kv[0].coords):
        fiber = fiber_lines.get(line)
        curves = ("E",) + tuple(through)

        def order(u, v):
            if "E" in (u, v):
                return 1
            return po.contact_order(a.curve(u), a.curve(v), q) - 1

        label = f"E.{fiber}" if fiber else "E." + ".".join(through)
        points.append(RuledPoint(label, curves, _pairs(curves, order), fiber, fiber in a.branch_fibers))
    classes = [("E", (1, 0))]
    for c in a.curves:
        mult = po.local_germ_of([c], q).poly
        mu = min((sum(e) for e in mult), default=0)
        classes.append((c.label, (c.degree - mu, c.degree)))
    return RuledConfiguration(a, tuple(points), tuple(classes))


def pipeline_classes(params: FamilyParams) -> Dict[str, DivisorClass]:
    """Classes on ``F_{2n+k}`` of every component, obtained by pulling back the
    ``F_1`` classes of the strict transforms."""
    conf = ruled_configuration(params.family)
    d = params.degree
    f1 = BaseSurface.hirzebruch(1)
    out = {}
    for label, (a, b) in conf.classes:
        cls = f1.cls(a, b)
        is_fiber = label in conf.arrangement.fibers
        branch = label in conf.arrangement.branch_fibers
        images = cyclic_pullback(1, d, cls, on_branch=branch)
        name = "Delta0" if label == "E" else label
        if is_fiber and not branch:
            for j, img in enumerate(images, 1):
                out[f"{name}#{j}"] = img
        else:
            (out[name],) = images
    return out


def census_pipeline(params: FamilyParams) -> List[SingularEvent]:
    """Bidouble-cover events derived from coordinates: blow up the centre, pass
    to the cyclic cover of degree ``2n+k``, split the curves into branch parts
    and apply the local transport rules."""
    params.validate()
    conf = ruled_configuration(params.family)
    d = params.degree
    labels = family_labels(params)
    part_of = {l: name for name, ls in labels.items() for l in ls}

    bd = family_building_data(params)
    classes = pipeline_classes(params)
    for b in bd.branch:
        for comp in b.components:
            if classes.get(comp.label) != comp.cls:
                raise InconsistencyError(
                    f"component {comp.label}: building data has {comp.cls}, "
                    f"coordinates give {classes.get(comp.label)}"
                )

    def rename(l):
        return "Delta0" if l == "E" else l

    events: List[SingularEvent] = []
    for pt in conf.points:
        contacts = {frozenset(map(rename, k)): v for k, v in pt.contact_map().items()}
        curves = tuple(rename(c) for c in pt.curves)
        start = SingularEvent(
            point_label=pt.label,
            membership=frozenset(curves),
            ade=union_of_smooth_branches(curves, contacts),
            fiber=pt.fiber,
            on_branch_fiber=pt.on_branch_fiber,
        )
        for ev in cyclic_census_transport([start], d):
            if pt.on_branch_fiber:
                cover_contacts = {key: o * d for key, o in contacts.items()}
            else:
                cover_contacts = dict(contacts)
            if union_of_smooth_branches(curves, cover_contacts) != ev.ade:
                raise InconsistencyError(f"cyclic transport disagrees at {ev.point_label}")
            present = [c for c in curves if c in part_of]
            if ev.fiber is not None and ev.fiber in part_of:
                for c in curves:
                    cover_contacts[frozenset((c, ev.fiber))] = 1
                present.append(ev.fiber)
            if not present:
                continue
            union = union_of_smooth_branches(present, cover_contacts)
            history = ev.history
            if ev.fiber in present and len(present) == 3 and union.letter == "D" and union.index > 4:
                history = history + (TransportRule.R3,)
            parts = sorted({part_of[c] for c in present})
            part_types = tuple(
                (name, union_of_smooth_branches([c for c in present if part_of[c] == name], cover_contacts))
                for name in parts
            )
            if len(parts) == 1 and union is SMOOTH:
                continue
            if len(parts) > 2:
                raise TransportShapeError(f"point {ev.point_label} lies on all three branch parts")
            rule = bidouble_rule(union, [t for _, t in part_types])
            events.append(
                SingularEvent(
                    point_label=ev.point_label,
                    membership=frozenset(parts),
                    ade=union,
                    rule=rule,
                    fiber=ev.fiber,
                    on_branch_fiber=ev.on_branch_fiber,
                    part_types=part_types,
                    history=history + (rule,),
                )
            )
    return events


def pipeline_census(params: FamilyParams) -> SingularityCensus:
    return census_of(census_pipeline(params))

"""Exact rational geometry in the projective plane.

Curves are homogeneous polynomials in ``x, y, z`` with rational coefficients.
Intersection points are found exactly (resultants and rational root finding
through sympy) and every intersection multiplicity is a local-algebra
dimension, so nothing here involves floating point.  When two curves meet in
points that are not rational, the Bezout count comes up short and the
operation fails instead of silently dropping them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import sympy

from . import polys
from .covers import PARTS, SingularEvent
from .errors import ArrangementError, InfiniteContactError
from .polys import Poly
from .singularities import (
    SMOOTH,
    Germ,
    GermClass,
    LocalType,
    Verdict,
    bidouble_rule,
    classify_germ,
    intersection_multiplicity,
)

NAMES = ("x", "y", "z")
_SYMS = sympy.symbols(NAMES)


def _normalize(coords) -> Tuple[Fraction, Fraction, Fraction]:
    coords = tuple(Fraction(c) for c in coords)
    if len(coords) != 3:
        raise ArrangementError(f"need three homogeneous coordinates, got {len(coords)}")
    lead = next((c for c in coords if c != 0), None)
    if lead is None:
        raise ArrangementError("the zero vector is not a projective point")
    return tuple(c / lead for c in coords)


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class ProjPoint:
    coords: Tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "coords", _normalize(self.coords))

    def __str__(self):
        return "(" + ":".join(_fmt(c) for c in self.coords) + ")"

    def to_json(self) -> List[str]:
        return [_fmt(c) for c in self.coords]


@dataclass(frozen=True)
class ProjLine:
    """The line ``a x + b y + c z = 0``."""

    coords: Tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "coords", _normalize(self.coords))

    def contains(self, p: ProjPoint) -> bool:
        return sum(a * b for a, b in zip(self.coords, p.coords)) == 0

    def poly(self) -> Poly:
        return polys.clean({e: c for e, c in zip(((1, 0, 0), (0, 1, 0), (0, 0, 1)), self.coords)})

    def __str__(self):
        return polys.format_poly(self.poly(), NAMES) + " = 0"


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    if p == q:
        raise ArrangementError(f"cannot join {p} with itself")
    return ProjLine(_cross(p.coords, q.coords))


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    if l1 == l2:
        raise ArrangementError(f"cannot meet the line {l1} with itself")
    return ProjPoint(_cross(l1.coords, l2.coords))


@dataclass(frozen=True)
class PlaneCurve:
    label: str
    terms: Tuple[Tuple[Tuple[int, int, int], Fraction], ...]

    def __post_init__(self):
        p = polys.clean(dict(self.terms))
        if not p:
            raise ArrangementError(f"curve {self.label} has the zero equation")
        if not polys.is_homogeneous(p):
            raise ArrangementError(f"curve {self.label} is not homogeneous")
        if polys.degree(p) < 1:
            raise ArrangementError(f"curve {self.label} is a nonzero constant")
        object.__setattr__(self, "terms", tuple(sorted(p.items())))

    @classmethod
    def from_poly(cls, label: str, p: Poly) -> "PlaneCurve":
        return cls(label, tuple(p.items()))

    @classmethod
    def parse(cls, label: str, text: str) -> "PlaneCurve":
        try:
            return cls.from_poly(label, polys.parse(text, NAMES))
        except ValueError as exc:
            raise ArrangementError(f"curve {label}: {exc}") from exc

    @classmethod
    def line(cls, label: str, line: ProjLine) -> "PlaneCurve":
        return cls.from_poly(label, line.poly())

    @property
    def poly(self) -> Poly:
        return dict(self.terms)

    @property
    def degree(self) -> int:
        return polys.degree(self.poly)

    def contains(self, p: ProjPoint) -> bool:
        return polys.evaluate(self.poly, p.coords) == 0

    def equation(self) -> str:
        return polys.format_poly(self.poly, NAMES)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "equation": self.equation(),
            "coefficients": {",".join(map(str, e)): _fmt(c) for e, c in self.terms},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PlaneCurve":
        if "coefficients" in data:
            terms = {
                tuple(int(k) for k in key.split(",")): Fraction(v)
                for key, v in data["coefficients"].items()
            }
            return cls.from_poly(data["label"], terms)
        return cls.parse(data["label"], data["equation"])


# ---------------------------------------------------------------------------
# local computations
# ---------------------------------------------------------------------------


def chart_images(p: ProjPoint) -> List[Poly]:
    """Affine chart centred at ``p``: the coordinate where ``p`` is 1 is set to
    1 and the other two become ``p_j + u``, ``p_k + v``."""
    i = next(j for j, c in enumerate(p.coords) if c != 0)
    others = [j for j in range(3) if j != i]
    images: List[Poly] = [None, None, None]
    images[i] = polys.constant(1, 2)
    for slot, j in enumerate(others):
        images[j] = polys.add(polys.variable(slot, 2), polys.constant(p.coords[j], 2))
    return images


def dehomogenize(poly: Poly, p: ProjPoint) -> Poly:
    return polys.substitute(poly, chart_images(p), 2)


def local_germ_of(curves: Sequence[PlaneCurve], p: ProjPoint) -> Germ:
    images = chart_images(p)
    prod = polys.constant(1, 2)
    for c in curves:
        prod = polys.mul(prod, polys.substitute(c.poly, images, 2))
    return Germ.from_poly(prod)


def contact_order(c1: PlaneCurve, c2: PlaneCurve, p: ProjPoint) -> int:
    """Local intersection multiplicity of ``c1`` and ``c2`` at ``p``."""
    if not (c1.contains(p) and c2.contains(p)):
        return 0
    f, g = dehomogenize(c1.poly, p), dehomogenize(c2.poly, p)
    mult = intersection_multiplicity(f, g)
    if mult is None:
        raise InfiniteContactError(f"{c1.label} and {c2.label} share a component through {p}")
    return mult


def tangent_line(c: PlaneCurve, p: ProjPoint) -> ProjLine:
    """Tangent line of ``c`` at a smooth point ``p``."""
    grad = [polys.evaluate(polys.derivative(c.poly, i), p.coords) for i in range(3)]
    if not c.contains(p) or not any(grad):
        raise ArrangementError(f"{c.label} has no tangent line at {p}")
    return ProjLine(grad)


def is_smooth_at(c: PlaneCurve, p: ProjPoint) -> bool:
    return any(polys.evaluate(polys.derivative(c.poly, i), p.coords) for i in range(3))


# ---------------------------------------------------------------------------
# rational intersection points
# ---------------------------------------------------------------------------


def _rational_roots(expr, var) -> List[Fraction]:
    """Distinct rational roots of a univariate polynomial that is not zero."""
    poly = sympy.Poly(expr, var, domain=sympy.QQ)
    if poly.is_zero:
        raise ValueError("zero polynomial")
    out = []
    for r in poly.ground_roots():
        r = sympy.Rational(r)
        out.append(Fraction(int(r.p), int(r.q)))
    return sorted(set(out))


def _common_zero_candidates(f: Poly, g: Poly) -> List[ProjPoint]:
    """Rational common zeros of two curves without a common component."""
    x, y, z = _SYMS
    fs, gs = polys.to_sympy(f, _SYMS), polys.to_sympy(g, _SYMS)
    found = set()
    # chart x = 1
    fa, ga = sympy.expand(fs.subs(x, 1)), sympy.expand(gs.subs(x, 1))
    if fa.free_symbols and ga.free_symbols:
        res = sympy.resultant(fa, ga, z)
        if sympy.expand(res) == 0:
            raise InfiniteContactError("curves share a component")
        ys = _rational_roots(res, y) if res.free_symbols else []
        for y0 in ys:
            fz = sympy.expand(fa.subs(y, sympy.Rational(y0.numerator, y0.denominator)))
            gz = sympy.expand(ga.subs(y, sympy.Rational(y0.numerator, y0.denominator)))
            h = sympy.gcd(fz, gz)
            if h == 0:
                raise InfiniteContactError("curves share a component")
            if h.free_symbols:
                for z0 in _rational_roots(h, z):
                    found.add(ProjPoint((1, y0, z0)))
    # line x = 0, chart y = 1
    fb, gb = sympy.expand(fs.subs({x: 0, y: 1})), sympy.expand(gs.subs({x: 0, y: 1}))
    if fb == 0 and gb == 0:
        raise InfiniteContactError("both curves contain the line x = 0")
    h = gb if fb == 0 else fb if gb == 0 else sympy.gcd(fb, gb)
    if h != 0 and h.free_symbols:
        for z0 in _rational_roots(h, z):
            found.add(ProjPoint((0, 1, z0)))
    if polys.evaluate(f, (0, 0, 1)) == 0 and polys.evaluate(g, (0, 0, 1)) == 0:
        found.add(ProjPoint((0, 0, 1)))
    return sorted(found, key=lambda p: p.coords)


def intersection_points(c1: PlaneCurve, c2: PlaneCurve) -> List[Tuple[ProjPoint, int]]:
    """All points of ``c1 n c2`` with multiplicities.

    Raises ``ArrangementError`` when the multiplicities do not add up to
    ``deg c1 * deg c2``, which happens exactly when some intersection point
    is not rational.
    """
    pts = _common_zero_candidates(c1.poly, c2.poly)
    out = [(p, contact_order(c1, c2, p)) for p in pts]
    total = sum(m for _, m in out)
    if total != c1.degree * c2.degree:
        raise ArrangementError(
            f"{c1.label} and {c2.label} meet in {c1.degree * c2.degree} points "
            f"but only {total} are rational"
        )
    return out


def singular_points(c: PlaneCurve) -> List[ProjPoint]:
    f = c.poly
    partials = [polys.derivative(f, i) for i in range(3)]
    nonzero = [p for p in partials if p]
    if c.degree == 1:
        return []
    fs = polys.to_sympy(f, _SYMS)
    sqf = sympy.sqf_list(fs)[1]
    if any(k > 1 for _, k in sqf):
        raise ArrangementError(f"curve {c.label} is not reduced")
    pair = None
    for a, b in combinations(nonzero, 2):
        common = sympy.gcd(polys.to_sympy(a, _SYMS), polys.to_sympy(b, _SYMS))
        if not common.free_symbols:
            pair = (a, b)
            break
    if pair is None:
        pair = (nonzero[0], f)
    cands = _common_zero_candidates(*pair)
    return [p for p in cands if all(polys.evaluate(q, p.coords) == 0 for q in partials + [f])]


# ---------------------------------------------------------------------------
# arrangements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Arrangement:
    """Labeled curves and points with declared facts.

    With ``complete_incidences`` set, the declared incidences are the only
    ones allowed: every other point/curve pair must be non-incident.
    ``center`` and ``fibers`` record the point that gets blown up and the
    lines through it that become fibers of the ruling; ``branch_fibers`` are
    the two fibers along which the cyclic cover is branched.
    """

    name: str
    curves: Tuple[PlaneCurve, ...]
    points: Tuple[Tuple[str, ProjPoint], ...]
    incidences: Tuple[Tuple[str, str], ...] = ()
    contacts: Tuple[Tuple[str, str, str, int], ...] = ()
    complete_incidences: bool = True
    center: Optional[str] = None
    fibers: Tuple[str, ...] = ()
    branch_fibers: Tuple[str, ...] = ()

    def curve(self, label: str) -> PlaneCurve:
        for c in self.curves:
            if c.label == label:
                return c
        raise ArrangementError(f"no curve labeled {label}")

    def point(self, label: str) -> ProjPoint:
        for name, p in self.points:
            if name == label:
                return p
        raise ArrangementError(f"no point labeled {label}")

    @property
    def curve_labels(self) -> Tuple[str, ...]:
        return tuple(c.label for c in self.curves)

    def label_of(self, p: ProjPoint) -> str:
        for name, q in self.points:
            if q == p:
                return name
        return str(p)

    def with_curve(self, curve: PlaneCurve) -> "Arrangement":
        """Copy with the curve of the same label replaced."""
        curves = tuple(curve if c.label == curve.label else c for c in self.curves)
        return Arrangement(**{**self.__dict__, "curves": curves})

    def with_point(self, label: str, p: ProjPoint) -> "Arrangement":
        points = tuple((n, p if n == label else q) for n, q in self.points)
        return Arrangement(**{**self.__dict__, "points": points})

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "curves": [c.to_json() for c in self.curves],
            "points": {n: p.to_json() for n, p in self.points},
            "incidences": [list(i) for i in self.incidences],
            "contacts": [list(c) for c in self.contacts],
            "complete_incidences": self.complete_incidences,
            "center": self.center,
            "fibers": list(self.fibers),
            "branch_fibers": list(self.branch_fibers),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Arrangement":
        try:
            return cls(
                name=data.get("name", "arrangement"),
                curves=tuple(PlaneCurve.from_json(c) for c in data["curves"]),
                points=tuple(
                    (n, ProjPoint(tuple(Fraction(c) for c in p)))
                    for n, p in data.get("points", {}).items()
                ),
                incidences=tuple(tuple(i) for i in data.get("incidences", [])),
                contacts=tuple(
                    (a, b, p, int(o)) for a, b, p, o in data.get("contacts", [])
                ),
                complete_incidences=bool(data.get("complete_incidences", False)),
                center=data.get("center"),
                fibers=tuple(data.get("fibers", [])),
                branch_fibers=tuple(data.get("branch_fibers", [])),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ArrangementError(f"malformed arrangement document: {exc}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def loads(text: str) -> Arrangement:
    return Arrangement.from_json(json.loads(text))


def verify_arrangement(a: Arrangement) -> List[str]:
    """Every violated declared fact; an empty list means the arrangement is ok."""
    problems = []
    names = [n for n, _ in a.points]
    if len(set(names)) != len(names):
        problems.append("duplicate point labels")
    labels = a.curve_labels
    if len(set(labels)) != len(labels):
        problems.append("duplicate curve labels")
    for (n1, p1), (n2, p2) in combinations(a.points, 2):
        if p1 == p2:
            problems.append(f"points {n1} and {n2} coincide at {p1}")
    for c1, c2 in combinations(a.curves, 2):
        f1, f2 = c1.poly, c2.poly
        if c1.degree == c2.degree:
            e0 = next(iter(f1))
            if e0 in f2 and polys.scale(f1, f2[e0] / f1[e0]) == f2:
                problems.append(f"curves {c1.label} and {c2.label} coincide")
    try:
        pts = dict(a.points)
        curves = {c.label: c for c in a.curves}
        declared = set(a.incidences)
        for pn, cn in declared:
            if pn not in pts or cn not in curves:
                problems.append(f"incidence ({pn}, {cn}) names an unknown object")
            elif not curves[cn].contains(pts[pn]):
                problems.append(f"{pn} = {pts[pn]} is not on {cn}")
        if a.complete_incidences:
            for pn, p in a.points:
                for c in a.curves:
                    if (pn, c.label) not in declared and c.contains(p):
                        problems.append(f"undeclared incidence: {pn} = {p} lies on {c.label}")
        for c1, c2, pn, order in a.contacts:
            got = contact_order(curves[c1], curves[c2], pts[pn])
            if got != order:
                problems.append(f"contact of {c1} and {c2} at {pn} is {got}, declared {order}")
        if a.center is not None:
            q = pts[a.center]
            for f in a.fibers:
                if curves[f].degree != 1 or not curves[f].contains(q):
                    problems.append(f"fiber {f} is not a line through {a.center}")
        for f in a.branch_fibers:
            if f not in a.fibers:
                problems.append(f"branch fiber {f} is not a declared fiber")
    except (KeyError, ArrangementError) as exc:
        problems.append(f"cannot evaluate declared facts: {exc}")
    return problems


def require_verified(a: Arrangement) -> Arrangement:
    problems = verify_arrangement(a)
    if problems:
        raise ArrangementError(f"arrangement {a.name} failed verification: " + "; ".join(problems))
    return a


# ---------------------------------------------------------------------------
# point pictures and censuses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PointPicture:
    """What a set of curves looks like at one point.

    ``curves`` lists the non-fiber curves through the point, ``contacts`` their
    pairwise intersection multiplicities, ``fibers`` the fibers through it and
    ``fiber_contacts`` the multiplicity of each curve with the (single) fiber.
    """

    label: str
    point: ProjPoint
    curves: Tuple[str, ...]
    smooth: Tuple[bool, ...]
    contacts: Tuple[Tuple[Tuple[str, str], int], ...]
    fibers: Tuple[str, ...]
    fiber_contacts: Tuple[Tuple[str, int], ...] = ()

    def contact(self, a: str, b: str) -> int:
        for (u, v), o in self.contacts:
            if {u, v} == {a, b}:
                return o
        raise KeyError((a, b))

    @property
    def fiber(self) -> Optional[str]:
        return self.fibers[0] if len(self.fibers) == 1 else None

    @property
    def transversal(self) -> bool:
        return all(o == 1 for _, o in self.fiber_contacts)


def _all_points(curves: Sequence[PlaneCurve]) -> List[ProjPoint]:
    pts = set()
    for c in curves:
        pts.update(singular_points(c))
    for c1, c2 in combinations(curves, 2):
        pts.update(p for p, _ in intersection_points(c1, c2))
    return sorted(pts, key=lambda p: p.coords)


def point_pictures(
    a: Arrangement, labels: Optional[Sequence[str]] = None, fibers: Optional[Sequence[str]] = None
) -> List[PointPicture]:
    """Pictures of every point where two of the selected curves (fibers included)
    meet or where one of them is singular."""
    labels = list(a.curve_labels if labels is None else labels)
    fibers = list(a.fibers if fibers is None else fibers)
    non_fiber = [a.curve(l) for l in labels if l not in fibers]
    fiber_curves = [a.curve(f) for f in fibers]
    out = []
    for p in _all_points(non_fiber + fiber_curves):
        through = [c for c in non_fiber if c.contains(p)]
        fibs = tuple(f.label for f in fiber_curves if f.contains(p))
        contacts = tuple(
            ((c1.label, c2.label), contact_order(c1, c2, p)) for c1, c2 in combinations(through, 2)
        )
        fiber_contacts = ()
        if len(fibs) == 1:
            fc = a.curve(fibs[0])
            fiber_contacts = tuple((c.label, contact_order(c, fc, p)) for c in through)
        out.append(
            PointPicture(
                label=a.label_of(p),
                point=p,
                curves=tuple(c.label for c in through),
                smooth=tuple(is_smooth_at(c, p) for c in through),
                contacts=contacts,
                fibers=fibs,
                fiber_contacts=fiber_contacts,
            )
        )
    return out


def local_germ(a: Arrangement, labels: Sequence[str], p: ProjPoint) -> Germ:
    """Germ at ``p`` of the union of the selected curves."""
    curves = [a.curve(l) for l in labels]
    through = [c for c in curves if c.contains(p)]
    if not through:
        raise ArrangementError(f"{p} lies on none of {list(labels)}")
    return local_germ_of(through, p)


def _germ_type(cls: GermClass, where: str) -> LocalType:
    if cls.verdict is Verdict.SMOOTH:
        return SMOOTH
    if cls.verdict is Verdict.ADE:
        return cls.ade
    raise ArrangementError(f"the germ at {where} is {cls}, not an ADE singularity")


def derive_census(
    a: Arrangement,
    partition: Mapping[str, Sequence[str]],
    fibers: Optional[Sequence[str]] = None,
) -> List[SingularEvent]:
    """Classify, from coordinates, every singular point of the union of the
    curves named in ``partition``.

    Each event carries the local type of the whole union, the type of every
    part through the point, and the fiber through it (fibers are not part of
    the union).  Points where the union is smooth are omitted.
    """
    require_verified(a)
    fibers = list(a.fibers if fibers is None else fibers)
    selected = [l for part in partition.values() for l in part]
    if len(set(selected)) != len(selected):
        raise ArrangementError("a curve is assigned to two parts")
    events = []
    for pic in point_pictures(a, selected, fibers):
        if not pic.curves:
            continue
        germ = local_germ(a, pic.curves, pic.point)
        union = _germ_type(classify_germ(germ), pic.label)
        if union is SMOOTH:
            continue
        membership, part_types = [], []
        for name, part in partition.items():
            inside = [l for l in pic.curves if l in part]
            if inside:
                membership.append(name)
                t = _germ_type(classify_germ(local_germ(a, inside, pic.point)), pic.label)
                part_types.append((name, t))
        events.append(
            SingularEvent(
                point_label=pic.label,
                membership=frozenset(membership),
                ade=union,
                fiber=pic.fiber,
                on_branch_fiber=pic.fiber in a.branch_fibers,
                transversal=pic.transversal,
                part_types=tuple(part_types),
            )
        )
    return events


def assign_bidouble_rules(events: Iterable[SingularEvent]) -> List[SingularEvent]:
    """Attach the bidouble transport rule to events whose membership is a set of
    branch parts ``B1, B2, B3``."""
    from dataclasses import replace

    out = []
    for ev in events:
        parts = dict(ev.part_types)
        names = sorted(n for n in ev.membership if n in PARTS)
        if len(names) == 1:
            if ev.ade is SMOOTH:
                continue
            rule = bidouble_rule(ev.ade, [parts[names[0]]])
        else:
            rule = bidouble_rule(ev.ade, [parts[n] for n in names])
        out.append(replace(ev, rule=rule, history=ev.history + (rule,)))
    return out


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------


def _line(label: str, a, b, c) -> PlaneCurve:
    return PlaneCurve.line(label, ProjLine((a, b, c)))


def _pt(*coords) -> ProjPoint:
    return ProjPoint(coords)


def _incidences(table: Mapping[str, Sequence[str]]) -> Tuple[Tuple[str, str], ...]:
    return tuple((p, c) for c, ps in table.items() for p in ps)


@lru_cache(maxsize=None)
def instantiate_family_a() -> Arrangement:
    """Four lines in general position, the two diagonals through ``Q`` and two
    more lines through ``Q``."""
    curves = (
        _line("l1", 1, 0, 0),
        _line("l2", 0, 1, 0),
        _line("l3", 0, 0, 1),
        _line("l4", 1, 1, 1),
        _line("l5", 1, 1, 0),
        _line("l6", 0, 1, 1),
        _line("l7", 1, 2, 1),
        _line("l8", -1, 0, 1),
    )
    points = (
        ("P1", _pt(0, 0, 1)),
        ("P2", _pt(1, 0, 0)),
        ("P3", _pt(0, 1, 0)),
        ("P4", _pt(0, 1, -1)),
        ("P5", _pt(1, 0, -1)),
        ("P6", _pt(1, -1, 0)),
        ("P7", _pt(1, 0, 1)),
        ("Q", _pt(1, -1, 1)),
    )
    incidences = _incidences(
        {
            "l1": ["P1", "P3", "P4"],
            "l2": ["P1", "P2", "P5", "P7"],
            "l3": ["P2", "P3", "P6"],
            "l4": ["P4", "P5", "P6"],
            "l5": ["P1", "P6", "Q"],
            "l6": ["P2", "P4", "Q"],
            "l7": ["Q", "P5"],
            "l8": ["Q", "P3", "P7"],
        }
    )
    return require_verified(
        Arrangement(
            name="family-a",
            curves=curves,
            points=points,
            incidences=incidences,
            center="Q",
            fibers=("l5", "l6", "l7", "l8"),
            branch_fibers=("l5", "l6"),
        )
    )


def conic_tangent(t) -> ProjLine:
    """Tangent line of ``y^2 = xz`` at ``(1 : t : t^2)``."""
    t = Fraction(t)
    return ProjLine((-t * t, 2 * t, -1))


@lru_cache(maxsize=None)
def instantiate_family_b() -> Arrangement:
    """A smooth conic with three tangent lines and the lines through ``Q``."""
    conic = PlaneCurve.parse("C", "y^2 - x*z")
    curves = (
        conic,
        PlaneCurve.line("l1", conic_tangent(0)),
        PlaneCurve.line("l2", conic_tangent(1)),
        PlaneCurve.line("l3", conic_tangent(-1)),
        _line("l4", 0, 1, 0),
        _line("l5", -1, 2, 0),
        _line("l6", 1, -1, 0),
    )
    points = (
        ("P1", _pt(1, 0, 0)),
        ("P2", _pt(1, 1, 1)),
        ("P3", _pt(1, -1, 1)),
        ("P4", _pt(1, 0, -1)),
        ("P5", _pt(2, 1, 0)),
        ("P6", _pt(2, 1, -4)),
        ("P7", _pt(1, 1, 0)),
        ("Q", _pt(0, 0, 1)),
        ("R", _pt(4, 2, 1)),
    )
    incidences = _incidences(
        {
            "C": ["P1", "P2", "P3", "Q", "R"],
            "l1": ["P1", "P5", "P7"],
            "l2": ["P2", "P4", "P5"],
            "l3": ["P3", "P4", "P6"],
            "l4": ["P1", "P4", "Q"],
            "l5": ["Q", "P5", "P6", "R"],
            "l6": ["Q", "P2", "P7"],
        }
    )
    contacts = (("C", "l1", "P1", 2), ("C", "l2", "P2", 2), ("C", "l3", "P3", 2))
    return require_verified(
        Arrangement(
            name="family-b",
            curves=curves,
            points=points,
            incidences=incidences,
            contacts=contacts,
            center="Q",
            fibers=("l4", "l5", "l6"),
            branch_fibers=("l4", "l6"),
        )
    )


def cuspidal_tangent(t) -> ProjLine:
    """Tangent line of ``y^3 = x z^2`` at ``(1 : t^2 : t^3)``."""
    t = Fraction(t)
    return ProjLine((-(t**3), 3 * t, -2))


M13_TANGENCY_PARAMETERS = (1, 2)


@lru_cache(maxsize=None)
def instantiate_m13() -> Arrangement:
    """Cuspidal cubic, its cusp tangent, its inflectional tangent and two
    tangent lines at the parameter points 1 and 2."""
    t1, t2 = M13_TANGENCY_PARAMETERS
    curves = (
        PlaneCurve.parse("C", "y^3 - x*z^2"),
        _line("X0", 1, 0, 0),
        _line("X2", 0, 0, 1),
        PlaneCurve.line("T2", cuspidal_tangent(t1)),
        PlaneCurve.line("T3", cuspidal_tangent(t2)),
    )

    def on_cubic(s):
        s = Fraction(s)
        return _pt(1, s * s, s**3)

    points = (
        ("cusp", _pt(1, 0, 0)),
        ("O1", _pt(0, 1, 0)),
        ("O2", _pt(0, 0, 1)),
        ("P2", on_cubic(t1)),
        ("P3", on_cubic(t2)),
        ("S2", on_cubic(Fraction(-t1, 2))),
        ("S3", on_cubic(Fraction(-t2, 2))),
    )
    incidences = _incidences(
        {
            "C": ["cusp", "O2", "P2", "P3", "S2", "S3"],
            "X0": ["O1", "O2"],
            "X2": ["cusp", "O1"],
            "T2": ["P2", "S2"],
            "T3": ["P3", "S3"],
        }
    )
    contacts = (
        ("C", "X2", "cusp", 3),
        ("C", "X0", "O2", 3),
        ("C", "T2", "P2", 2),
        ("C", "T3", "P3", 2),
    )
    return require_verified(
        Arrangement(
            name="m13",
            curves=curves,
            points=points,
            incidences=incidences,
            contacts=contacts,
        )
    )


M13_PARTITION = {"B1": ("C", "X0", "X2"), "B2": ("T2",), "B3": ("T3",)}

FIXTURES = {
    "family-a": instantiate_family_a,
    "family-b": instantiate_family_b,
    "m13": instantiate_m13,
}

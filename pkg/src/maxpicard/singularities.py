"""ADE types, singularity censuses, a plane-curve-germ classifier and the
rules that carry singularities through cyclic and bidouble covers.

The classifier never uses floating point.  Milnor numbers and local
intersection multiplicities are dimensions of local algebras
``C[x,y]_(x,y) / I``, computed by linear algebra on the truncations
``C[x,y] / (I + m^N)``: these dimensions increase with ``N`` and, by
Nakayama's lemma, the first ``N`` with ``dim_N == dim_{N+1}`` gives the
local dimension.  A fast modular pass picks the candidate ``N``; the answer
is then confirmed with exact rational elimination.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from . import polys
from .errors import GermError, TransportShapeError
from .polys import Poly

# ---------------------------------------------------------------------------
# ADE types and censuses
# ---------------------------------------------------------------------------

_LETTER_ORDER = {"A": 0, "D": 1, "E": 2}


@dataclass(frozen=True)
class AdeType:
    """An ADE label.  ``D3`` is normalized to ``A3`` on construction."""

    letter: str
    index: int

    def __post_init__(self):
        letter, index = self.letter.upper(), int(self.index)
        if letter == "A":
            ok = index >= 1
        elif letter == "D":
            ok = index >= 3
            if index == 3:
                letter = "A"
        elif letter == "E":
            ok = index in (6, 7, 8)
        else:
            ok = False
        if not ok:
            raise ValueError(f"no ADE type {self.letter}{self.index}")
        object.__setattr__(self, "letter", letter)
        object.__setattr__(self, "index", index)

    @classmethod
    def parse(cls, label: str) -> "AdeType":
        label = label.strip()
        try:
            return cls(label[0], int(label[1:]))
        except (IndexError, ValueError) as exc:
            raise ValueError(f"bad ADE label {label!r}") from exc

    def sort_key(self):
        return (_LETTER_ORDER[self.letter], self.index)

    def __lt__(self, other: "AdeType"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return f"{self.letter}{self.index}"

    @property
    def rank(self) -> int:
        return self.index


def A(n: int) -> AdeType:
    return AdeType("A", n)


def D(n: int) -> AdeType:
    return AdeType("D", n)


def E(n: int) -> AdeType:
    return AdeType("E", n)


def rank(t: AdeType) -> int:
    """Number of (-2)-curves in the minimal resolution."""
    return t.index


def dynkin_matrix(t: AdeType) -> List[List[int]]:
    """Intersection matrix of the exceptional (-2)-curves of ``t``."""
    n = t.index
    edges = [(i, i + 1) for i in range(n - 2)]
    if t.letter == "A":
        edges.append((n - 2, n - 1)) if n >= 2 else None
    elif t.letter == "D":
        # path 0..n-2 with the last node hanging off node n-3
        edges.append((n - 3, n - 1))
    else:
        # path 0..n-2 with the extra node hanging off node 2
        edges.append((2, n - 1))
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = -2
    for i, j in edges:
        m[i][j] = m[j][i] = 1
    return m


class SingularityCensus:
    """Multiset of ADE types."""

    __slots__ = ("_counts",)

    def __init__(self, counts: Union[None, Mapping, Iterable] = None):
        c: Counter = Counter()
        if counts is None:
            pass
        elif isinstance(counts, Mapping):
            for t, k in counts.items():
                t = AdeType.parse(t) if isinstance(t, str) else t
                if k < 0:
                    raise ValueError("census multiplicities must be nonnegative")
                c[t] += int(k)
        else:
            for t in counts:
                c[AdeType.parse(t) if isinstance(t, str) else t] += 1
        self._counts = Counter({t: k for t, k in c.items() if k})

    def __getitem__(self, t) -> int:
        t = AdeType.parse(t) if isinstance(t, str) else t
        return self._counts.get(t, 0)

    def items(self) -> List[Tuple[AdeType, int]]:
        return sorted(self._counts.items(), key=lambda kv: kv[0].sort_key())

    def __iter__(self):
        return iter(t for t, _ in self.items())

    def __len__(self):
        return sum(self._counts.values())

    def __add__(self, other: "SingularityCensus") -> "SingularityCensus":
        return SingularityCensus(self._counts + other._counts)

    def __sub__(self, other: "SingularityCensus") -> "SingularityCensus":
        for t, k in other._counts.items():
            if self._counts.get(t, 0) < k:
                raise ValueError(f"cannot remove {k} x {t} from {self}")
        return SingularityCensus(self._counts - other._counts)

    def scaled(self, k: int) -> "SingularityCensus":
        return SingularityCensus({t: k * v for t, v in self._counts.items()})

    def __eq__(self, other):
        if not isinstance(other, SingularityCensus):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self):
        return hash(tuple(self.items()))

    @property
    def total_rank(self) -> int:
        return sum(t.rank * k for t, k in self._counts.items())

    def to_json(self) -> Dict[str, int]:
        return {str(t): k for t, k in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "SingularityCensus":
        return cls({AdeType.parse(k): v for k, v in data.items()})

    def __repr__(self):
        inner = ", ".join(f"{t}:{k}" for t, k in self.items())
        return f"SingularityCensus({{{inner}}})"


def merge(censuses: Iterable[SingularityCensus]) -> SingularityCensus:
    total = SingularityCensus()
    for c in censuses:
        total = total + c
    return total


# ---------------------------------------------------------------------------
# Germs
# ---------------------------------------------------------------------------

GERM_VARS = ("x", "y")


@dataclass(frozen=True)
class Germ:
    """Bivariate polynomial with rational coefficients, read at the origin."""

    terms: Tuple[Tuple[Tuple[int, int], Fraction], ...]

    @classmethod
    def from_poly(cls, p: Poly) -> "Germ":
        p = polys.clean(p)
        for e in p:
            if len(e) != 2:
                raise GermError("germs are bivariate")
        return cls(tuple(sorted(p.items())))

    @classmethod
    def parse(cls, text: str) -> "Germ":
        try:
            return cls.from_poly(polys.parse(text, GERM_VARS))
        except ValueError as exc:
            raise GermError(str(exc)) from exc

    @property
    def poly(self) -> Poly:
        return dict(self.terms)

    @property
    def degree(self) -> int:
        return polys.degree(self.poly)

    def value_at_origin(self) -> Fraction:
        return self.poly.get((0, 0), Fraction(0))

    def jet(self, d: int) -> Poly:
        return polys.homogeneous_part(self.poly, d)

    def linear_change(self, a, b, c, d) -> "Germ":
        """Substitute ``x -> a x + b y`` and ``y -> c x + d y``."""
        img_x = polys.clean({(1, 0): Fraction(a), (0, 1): Fraction(b)})
        img_y = polys.clean({(1, 0): Fraction(c), (0, 1): Fraction(d)})
        return Germ.from_poly(polys.substitute(self.poly, [img_x, img_y], 2))

    def __mul__(self, other: "Germ") -> "Germ":
        return Germ.from_poly(polys.mul(self.poly, other.poly))

    def __str__(self):
        return polys.format_poly(self.poly, GERM_VARS)


class Verdict(enum.Enum):
    SMOOTH = "Smooth"
    ADE = "Ade"
    NON_ISOLATED = "NonIsolated"
    NOT_ADE = "NotAde"


@dataclass(frozen=True)
class GermClass:
    verdict: Verdict
    ade: Optional[AdeType] = None
    milnor: Optional[int] = None

    def __str__(self):
        return str(self.ade) if self.verdict is Verdict.ADE else self.verdict.value

    @property
    def is_smooth(self) -> bool:
        return self.verdict is Verdict.SMOOTH

    def to_json(self) -> dict:
        return {"verdict": str(self), "milnor": self.milnor}


NON_ISOLATED = "NonIsolated"

# ---------------------------------------------------------------------------
# local algebra dimensions
# ---------------------------------------------------------------------------

_PRIMES = (2**61 - 1, 2**31 - 1, 1_000_000_007, 998_244_353)


def _mono_index(i: int, j: int) -> int:
    d = i + j
    return d * (d + 1) // 2 + i


def _rows(gens: Sequence[Poly], level: int) -> List[Dict[int, Fraction]]:
    """Truncations below ``level`` of all monomial multiples of the generators."""
    rows = []
    for g in gens:
        o = polys.order(g)
        if o < 0 or o >= level:
            continue
        terms = list(g.items())
        for s in range(level - o):
            for a in range(s + 1):
                b = s - a
                row = {}
                for (i, j), c in terms:
                    if i + j + s < level:
                        row[_mono_index(i + a, j + b)] = c
                if row:
                    rows.append(row)
    return rows


def _rank_exact(rows: List[Dict[int, Fraction]]) -> int:
    pivots: Dict[int, Dict[int, Fraction]] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = 1 / row[c]
                pivots[c] = {k: v * inv for k, v in row.items()}
                break
            f = row[c]
            for k, v in piv.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def _rank_mod(rows: List[Dict[int, int]], p: int) -> int:
    pivots: Dict[int, Dict[int, int]] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                break
            f = row[c]
            for k, v in piv.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def _reduce_mod(gens: Sequence[Poly]):
    for p in _PRIMES:
        if all(c.denominator % p for g in gens for c in g.values()):
            red = []
            for g in gens:
                h = {}
                for e, c in g.items():
                    v = c.numerator * pow(c.denominator, -1, p) % p
                    if v:
                        h[e] = v
                red.append(h)
            return p, red
    return None, None


def _n_monomials(level: int) -> int:
    return level * (level + 1) // 2


def _dim_exact(gens: Sequence[Poly], level: int) -> int:
    return _n_monomials(level) - _rank_exact(_rows(gens, level))


def local_algebra_dimension(
    gens: Sequence[Poly], cap: int, max_level: int
) -> Optional[int]:
    """Dimension of ``C[x,y]_(x,y) / (gens)``, or ``None`` if it exceeds ``cap``
    or fails to stabilize by truncation level ``max_level``.

    ``cap`` must be a proven upper bound for the dimension whenever it is
    finite (a Bezout bound); exceeding it proves infiniteness.
    """
    gens = [polys.clean(g) for g in gens]
    if any(g and g.get((0, 0)) for g in gens):
        return 0
    p, red = _reduce_mod(gens)

    def dim_mod(level):
        return _n_monomials(level) - _rank_mod(_rows(red, level), p)

    start = 1
    if p is not None:
        prev = dim_mod(1)
        level = 1
        while level <= max_level:
            nxt = dim_mod(level + 1)
            if prev > cap:
                # modular dims bound exact dims from above; confirm exactly
                if _dim_exact(gens, level) > cap:
                    return None
                break
            if nxt == prev:
                if _dim_exact(gens, level) == _dim_exact(gens, level + 1):
                    return _dim_exact(gens, level)
                break
            prev, level = nxt, level + 1
        start = max(1, level - 1)
    # exact fallback
    prev = _dim_exact(gens, start)
    level = start
    while level <= max_level:
        if prev > cap:
            return None
        nxt = _dim_exact(gens, level + 1)
        if nxt == prev:
            return prev
        prev, level = nxt, level + 1
    return None


def milnor_number(g: Germ, degree_bound: Optional[int] = None) -> Union[int, str]:
    """Milnor number of the germ at the origin, or ``NON_ISOLATED``.

    ``degree_bound`` caps the truncation level (default ``2 * deg(g)**2``).
    """
    f = g.poly
    if not f:
        raise GermError("the zero polynomial is not a germ")
    if f.get((0, 0)):
        raise GermError(f"{g} is a unit at the origin")
    d = polys.degree(f)
    fx, fy = polys.derivative(f, 0), polys.derivative(f, 1)
    bound = degree_bound if degree_bound is not None else 2 * d * d
    # an isolated critical point has mu <= (d-1)^2 by Bezout
    mu = local_algebra_dimension([fx, fy], cap=(d - 1) ** 2, max_level=bound)
    return NON_ISOLATED if mu is None else mu


def intersection_multiplicity(
    f: Poly, g: Poly, degree_bound: Optional[int] = None
) -> Optional[int]:
    """Local intersection multiplicity of two plane curve germs at the origin.

    Returns ``None`` when the germs share a component through the origin.
    """
    if not f or not g:
        return None
    cap = polys.degree(f) * polys.degree(g)
    bound = degree_bound if degree_bound is not None else 2 * cap + 2
    return local_algebra_dimension([f, g], cap=cap, max_level=bound)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def _upoly_trim(p: List[Fraction]) -> List[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _upoly_rem(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a = list(a)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        _upoly_trim(a)
    return a


def _upoly_gcd(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = _upoly_trim(list(a)), _upoly_trim(list(b))
    while b:
        a, b = b, _upoly_rem(a, b)
    return a


def cubic_root_pattern(cubic: Poly) -> int:
    """Number of distinct roots in P^1 of a nonzero binary cubic form."""
    coeffs = [Fraction(cubic.get((i, 3 - i), 0)) for i in range(4)]  # coefficient of t^i
    p = _upoly_trim(list(coeffs))
    if not p:
        raise ValueError("zero cubic")
    deg = len(p) - 1
    at_infinity = 3 - deg
    dp = [i * c for i, c in enumerate(p)][1:]
    g = _upoly_gcd(p, dp) if deg > 0 else [Fraction(1)]
    finite_distinct = deg - (len(g) - 1)
    return finite_distinct + (1 if at_infinity else 0)


def _hessian_rank(quad: Poly) -> int:
    a = quad.get((2, 0), 0)
    b = quad.get((1, 1), 0)
    c = quad.get((0, 2), 0)
    if 4 * a * c - b * b != 0:
        return 2
    return 1 if (a or b or c) else 0


def classify_germ(g: Germ, degree_bound: Optional[int] = None) -> GermClass:
    """ADE type of the plane curve germ ``g = 0`` at the origin."""
    f = g.poly
    if not f:
        raise GermError("the zero polynomial is not a germ")
    if f.get((0, 0)):
        raise GermError(f"{g} is a unit at the origin")
    if polys.homogeneous_part(f, 1):
        return GermClass(Verdict.SMOOTH, milnor=0)
    mu = milnor_number(g, degree_bound)
    if mu == NON_ISOLATED:
        return GermClass(Verdict.NON_ISOLATED)
    corank = 2 - _hessian_rank(polys.homogeneous_part(f, 2))
    if corank <= 1:
        return GermClass(Verdict.ADE, A(mu), mu)
    cubic = polys.homogeneous_part(f, 3)
    if not cubic:
        return GermClass(Verdict.NOT_ADE, milnor=mu)
    roots = cubic_root_pattern(cubic)
    if roots == 3:
        if mu != 4:
            return GermClass(Verdict.NOT_ADE, milnor=mu)
        return GermClass(Verdict.ADE, D(4), mu)
    if roots == 2:
        return GermClass(Verdict.ADE, D(mu), mu)
    if mu in (6, 7, 8):
        return GermClass(Verdict.ADE, E(mu), mu)
    return GermClass(Verdict.NOT_ADE, milnor=mu)


def classify_double_point_surface(g: Germ, degree_bound: Optional[int] = None) -> GermClass:
    """Type of the surface germ ``z^2 = g(x, y)``; same label as the curve ``g = 0``."""
    return classify_germ(g, degree_bound)


def bidouble_branch_germ(b1: Germ, b2: Germ) -> Germ:
    """Local double-point equation of a bidouble cover over a point of ``B1 n B2``
    away from ``B3``.

    With ``b3 = 1`` the cover is ``w1^2 = b2``, ``w2^2 = b1``, ``w3 = w1 w2``.
    ``b2`` must read ``v + h(u)`` for one variable ``v``; eliminating ``v`` leaves
    ``w2^2 = b1(v = w1^2 - h)``, returned as a germ in ``(w1, u)`` with ``w1``
    in the slot of ``v``.
    """
    p = b2.poly
    for v in (0, 1):
        u = 1 - v
        unit = [0, 0]
        unit[v] = 1
        if p.get(tuple(unit)) == 1 and all(e == tuple(unit) or e[v] == 0 for e in p):
            h = {e: c for e, c in p.items() if e != tuple(unit)}
            w_sq = {tuple(2 if i == v else 0 for i in range(2)): Fraction(1)}
            image_v = polys.sub(w_sq, h)
            image_u = polys.variable(u, 2)
            images = [None, None]
            images[v], images[u] = image_v, image_u
            return Germ.from_poly(polys.substitute(b1.poly, images, 2))
    raise GermError(f"b2 = {b2} is not of the form v + h(u)")


def cyclic_germ(g: Germ, d: int, fiber_var: int = 0) -> Germ:
    """Pull back ``g`` under ``x -> x^d`` (the fiber ``x = 0`` is the branch fiber)."""
    images = [polys.variable(0, 2), polys.variable(1, 2)]
    e = [0, 0]
    e[fiber_var] = d
    images[fiber_var] = {tuple(e): Fraction(1)}
    return Germ.from_poly(polys.substitute(g.poly, images, 2))


# ---------------------------------------------------------------------------
# transport rules
# ---------------------------------------------------------------------------


class Marker(enum.Enum):
    SMOOTH = "smooth"


SMOOTH = Marker.SMOOTH
LocalType = Union[AdeType, Marker]


class TransportRule(enum.Enum):
    R1 = "cyclic on-fiber"
    R2 = "cyclic off-fiber"
    R3 = "augment by transversal branch"
    R4 = "bidouble, two smooth parts"
    R5 = "bidouble, node plus smooth part (D even)"
    R6 = "bidouble, A_n plus smooth part"
    R7 = "bidouble, transversal node"
    R8 = "bidouble, single part"


def _odd_a(t, rule) -> int:
    if not isinstance(t, AdeType) or t.letter != "A" or t.index % 2 == 0:
        raise TransportShapeError(f"{rule.name} needs A_(2s-1), got {t}")
    return (t.index + 1) // 2


def transport_type(rule: TransportRule, t: LocalType, d: Optional[int] = None) -> LocalType:
    """Single output type of the rules that map one point to one point."""
    if rule is TransportRule.R1:
        if t is SMOOTH:
            return SMOOTH
        s = _odd_a(t, rule)
        _need_degree(rule, d)
        return A(2 * d * s - 1)
    if rule is TransportRule.R3:
        s = _odd_a(t, rule)
        return D(2 * s + 2)
    if rule is TransportRule.R4:
        s = _odd_a(t, rule)  # A_(2n+1) with n = s - 1
        return SMOOTH if s == 1 else A(s - 1)
    if rule is TransportRule.R5:
        if not isinstance(t, AdeType) or t.letter != "D" or t.index % 2:
            raise TransportShapeError(f"R5 needs D_(2n+4), got {t}")
        n = (t.index - 4) // 2
        return D(n + 3)
    if rule is TransportRule.R6:
        if not isinstance(t, AdeType) or t.letter != "D" or t.index < 4:
            raise TransportShapeError(f"R6 needs D_(n+3) with n >= 1, got {t}")
        n = t.index - 3
        return A(2 * n + 1)
    if rule is TransportRule.R7:
        if t != A(1):
            raise TransportShapeError(f"R7 needs A1, got {t}")
        return SMOOTH
    raise TransportShapeError(f"{rule.name} does not map one point to one point")


def _need_degree(rule, d):
    if d is None or d < 1:
        raise TransportShapeError(f"{rule.name} needs a cover degree d >= 1, got {d}")


def transport(rule: TransportRule, t: LocalType, d: Optional[int] = None) -> SingularityCensus:
    """Census contribution of one input point under ``rule``."""
    if rule is TransportRule.R2:
        _need_degree(rule, d)
        return SingularityCensus() if t is SMOOTH else SingularityCensus({t: d})
    if rule is TransportRule.R8:
        if t is SMOOTH:
            raise TransportShapeError("R8 needs a singular point of one branch part")
        return SingularityCensus({t: 2})
    out = transport_type(rule, t, d)
    return SingularityCensus() if out is SMOOTH else SingularityCensus({out: 1})


def bidouble_rule(union: LocalType, part_types: Sequence[LocalType]) -> TransportRule:
    """Pick the bidouble rule for a point given the union type and the types of
    the branch parts through it."""
    if len(part_types) == 1:
        return TransportRule.R8
    if len(part_types) != 2:
        raise TransportShapeError(f"no rule for a point on {len(part_types)} branch parts")
    smooth = [t for t in part_types if t is SMOOTH]
    if len(smooth) == 2:
        if union == A(1):
            return TransportRule.R7
        _odd_a(union, TransportRule.R4)
        return TransportRule.R4
    if len(smooth) == 1:
        (other,) = [t for t in part_types if t is not SMOOTH]
        if isinstance(union, AdeType) and union.letter == "D":
            if other == A(1) and union.index % 2 == 0 and union.index >= 6:
                return TransportRule.R5
            if other == A(union.index - 3):
                return TransportRule.R6
    raise TransportShapeError(f"no bidouble rule for parts {[str(t) for t in part_types]} with union {union}")


def union_of_smooth_branches(labels: Sequence[str], contact: Mapping[frozenset, int]) -> LocalType:
    """Type of a union of smooth branches given pairwise contact orders."""
    labels = list(labels)
    if len(labels) == 1:
        return SMOOTH
    if len(labels) == 2:
        c = contact[frozenset(labels)]
        return A(2 * c - 1)
    if len(labels) == 3:
        pairs = [frozenset((a, b)) for i, a in enumerate(labels) for b in labels[i + 1 :]]
        orders = sorted(contact[p] for p in pairs)
        if orders[1] == 1:
            if orders[2] == 1:
                return D(4)
            # two branches with contact c plus one transversal to both
            return transport_type(TransportRule.R3, A(2 * orders[2] - 1))
    raise TransportShapeError(
        f"union of branches {labels} with contacts {dict((tuple(sorted(k)), v) for k, v in contact.items())} is not ADE"
    )

"""Divisor-class lattices of the rational base surfaces.

Three shapes are supported: the projective plane (basis ``H``), the
Hirzebruch surface ``F_e`` (basis ``Delta0, F`` with ``Delta0^2 = -e``,
``Delta0.F = 1``, ``F^2 = 0``) and ``F_1`` blown up at one point (basis
``b*Delta0, b*F, E`` with ``E^2 = -1`` orthogonal to pull-backs).

All coordinates are Python integers, so nothing overflows.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Sequence, Tuple

from .errors import IncompatibleLatticeError, UnsupportedSurfaceError


class Shape(enum.Enum):
    PROJECTIVE_PLANE = "P2"
    HIRZEBRUCH = "F"
    BLOWN_UP_HIRZEBRUCH1 = "F1~"


@dataclass(frozen=True)
class BaseSurface:
    shape: Shape
    e: int = 0

    def __post_init__(self):
        if self.shape is Shape.HIRZEBRUCH:
            if self.e < 0:
                raise ValueError(f"Hirzebruch surface needs e >= 0, got {self.e}")
        elif self.e != 0:
            raise ValueError(f"{self.shape.value} takes no e parameter")

    @classmethod
    def plane(cls) -> "BaseSurface":
        return cls(Shape.PROJECTIVE_PLANE)

    @classmethod
    def hirzebruch(cls, e: int) -> "BaseSurface":
        return cls(Shape.HIRZEBRUCH, e)

    @classmethod
    def blown_up_f1(cls) -> "BaseSurface":
        return cls(Shape.BLOWN_UP_HIRZEBRUCH1)

    @property
    def rank(self) -> int:
        return {Shape.PROJECTIVE_PLANE: 1, Shape.HIRZEBRUCH: 2, Shape.BLOWN_UP_HIRZEBRUCH1: 3}[
            self.shape
        ]

    @property
    def basis_names(self) -> Tuple[str, ...]:
        if self.shape is Shape.PROJECTIVE_PLANE:
            return ("H",)
        if self.shape is Shape.HIRZEBRUCH:
            return ("Delta0", "F")
        return ("b*Delta0", "b*F", "E")

    # chi(O) = 1 and q = 0 for all three rational surfaces
    chi = 1
    q = 0
    pg = 0

    def gram(self) -> Tuple[Tuple[int, ...], ...]:
        if self.shape is Shape.PROJECTIVE_PLANE:
            return ((1,),)
        if self.shape is Shape.HIRZEBRUCH:
            return ((-self.e, 1), (1, 0))
        return ((-1, 1, 0), (1, 0, 0), (0, 0, -1))

    def name(self) -> str:
        if self.shape is Shape.HIRZEBRUCH:
            return f"F_{self.e}"
        return self.shape.value

    def __str__(self):
        return self.name()

    # convenient generators
    def cls(self, *coeffs: int) -> "DivisorClass":
        return DivisorClass(self, tuple(coeffs))

    def zero(self) -> "DivisorClass":
        return DivisorClass(self, (0,) * self.rank)

    def generators(self) -> Tuple["DivisorClass", ...]:
        out = []
        for i in range(self.rank):
            v = [0] * self.rank
            v[i] = 1
            out.append(DivisorClass(self, tuple(v)))
        return tuple(out)


@dataclass(frozen=True)
class DivisorClass:
    surface: BaseSurface
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        if len(coeffs) != self.surface.rank:
            raise ValueError(
                f"{self.surface} has Picard rank {self.surface.rank}, got {len(coeffs)} coefficients"
            )
        object.__setattr__(self, "coefficients", coeffs)

    def _check(self, other: "DivisorClass"):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.surface != self.surface:
            raise IncompatibleLatticeError(
                f"cannot combine classes on {self.surface} and {other.surface}"
            )
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DivisorClass(
            self.surface, tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DivisorClass(
            self.surface, tuple(a - b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __neg__(self):
        return DivisorClass(self.surface, tuple(-a for a in self.coefficients))

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(self.surface, tuple(k * a for a in self.coefficients))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def dot(self, other: "DivisorClass") -> int:
        return intersect(self, other)

    def __str__(self):
        terms = []
        for c, n in zip(self.coefficients, self.surface.basis_names):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(("-" if c < 0 else "+", f"{mag}{n}"))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, t in terms[1:]:
            s += f" {sign} {t}"
        return s

    def to_json(self) -> dict:
        return {"surface": self.surface.name(), "coefficients": list(self.coefficients)}


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection number of two classes on the same surface."""
    if d1.surface != d2.surface:
        raise IncompatibleLatticeError(f"cannot intersect classes on {d1.surface} and {d2.surface}")
    g = d1.surface.gram()
    a, b = d1.coefficients, d2.coefficients
    return sum(a[i] * g[i][j] * b[j] for i in range(len(a)) for j in range(len(b)))


def canonical_class(s: BaseSurface) -> DivisorClass:
    if s.shape is Shape.PROJECTIVE_PLANE:
        return s.cls(-3)
    if s.shape is Shape.HIRZEBRUCH:
        return s.cls(-2, -(s.e + 2))
    # b*K_{F_1} + E with K_{F_1} = -2 Delta0 - 3F
    return s.cls(-2, -3, 1)


def pullback_to_blowup(d: DivisorClass) -> DivisorClass:
    """``b^*`` from ``F_1`` to its one-point blow-up."""
    if d.surface != BaseSurface.hirzebruch(1):
        raise UnsupportedSurfaceError("the blown-up surface sits over F_1 only")
    a, b = d.coefficients
    return BaseSurface.blown_up_f1().cls(a, b, 0)


def _require_plane_or_hirzebruch(d: DivisorClass, what: str):
    if d.surface.shape is Shape.BLOWN_UP_HIRZEBRUCH1:
        raise UnsupportedSurfaceError(f"{what} is not supported on the blown-up surface")


def h0(d: DivisorClass) -> int:
    """Dimension of the space of global sections of the line bundle."""
    _require_plane_or_hirzebruch(d, "h0")
    if d.surface.shape is Shape.PROJECTIVE_PLANE:
        (n,) = d.coefficients
        return comb(n + 2, 2) if n >= 0 else 0
    a, b = d.coefficients
    if a < 0:
        return 0
    e = d.surface.e
    return sum(max(0, b - i * e + 1) for i in range(a + 1))


class Positivity(enum.Enum):
    AMPLE = "Ample"
    NEF_NOT_AMPLE = "NefNotAmple"
    NOT_NEF = "NotNef"


def positivity(d: DivisorClass) -> Positivity:
    _require_plane_or_hirzebruch(d, "positivity")
    if d.surface.shape is Shape.PROJECTIVE_PLANE:
        (n,) = d.coefficients
        if n > 0:
            return Positivity.AMPLE
        return Positivity.NEF_NOT_AMPLE if n == 0 else Positivity.NOT_NEF
    a, b = d.coefficients
    e = d.surface.e
    if a > 0 and b > a * e:
        return Positivity.AMPLE
    if a >= 0 and b >= a * e:
        return Positivity.NEF_NOT_AMPLE
    return Positivity.NOT_NEF


@dataclass(frozen=True)
class SurfaceInvariants:
    k2: int
    chi: int
    pg: int
    q: int
    h11: int

    def __post_init__(self):
        if self.pg < 0 or self.q < 0 or self.h11 < 0:
            raise ValueError(f"negative Hodge data in {self}")
        if self.chi != 1 + self.pg - self.q:
            raise ValueError(f"chi != 1 + pg - q in {self}")
        if self.h11 != 10 * self.chi - self.k2 - 2 * self.q:
            raise ValueError(f"h11 != 10 chi - K^2 - 2q in {self}")

    @classmethod
    def from_numbers(cls, k2: int, chi: int, pg: int) -> "SurfaceInvariants":
        q = 1 + pg - chi
        return cls(k2=k2, chi=chi, pg=pg, q=q, h11=10 * chi - k2 - 2 * q)

    def to_json(self) -> dict:
        return {"k2": self.k2, "chi": self.chi, "pg": self.pg, "q": self.q, "h11": self.h11}


def class_sum(classes: Sequence[DivisorClass], surface: BaseSurface) -> DivisorClass:
    total = surface.zero()
    for c in classes:
        total = total + c
    return total

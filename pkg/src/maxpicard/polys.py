"""Sparse multivariate polynomials over the rationals.

A polynomial is a plain ``dict`` mapping exponent tuples to nonzero
:class:`~fractions.Fraction` coefficients.  The helpers here are the small
amount of arithmetic the germ classifier and the plane-geometry oracle need;
text parsing is delegated to sympy.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

Exponent = Tuple[int, ...]
Poly = Dict[Exponent, Fraction]

_TRANSFORMS = standard_transformations + (convert_xor, implicit_multiplication_application)


def clean(p: Poly) -> Poly:
    return {e: Fraction(c) for e, c in p.items() if c != 0}


def constant(c, nvars: int) -> Poly:
    return clean({(0,) * nvars: Fraction(c)})


def variable(i: int, nvars: int) -> Poly:
    e = [0] * nvars
    e[i] = 1
    return {tuple(e): Fraction(1)}


def add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def scale(p: Poly, c) -> Poly:
    c = Fraction(c)
    if c == 0:
        return {}
    return {e: v * c for e, v in p.items()}


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, scale(q, -1))


def mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def power(p: Poly, k: int, nvars: int) -> Poly:
    out = constant(1, nvars)
    base = p
    while k:
        if k & 1:
            out = mul(out, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return out


def product(polys: Iterable[Poly], nvars: int) -> Poly:
    out = constant(1, nvars)
    for p in polys:
        out = mul(out, p)
    return out


def degree(p: Poly) -> int:
    """Total degree; -1 for the zero polynomial."""
    return max((sum(e) for e in p), default=-1)


def order(p: Poly) -> int:
    """Lowest total degree of a term; -1 for the zero polynomial."""
    return min((sum(e) for e in p), default=-1)


def homogeneous_part(p: Poly, d: int) -> Poly:
    return {e: c for e, c in p.items() if sum(e) == d}


def truncate(p: Poly, below: int) -> Poly:
    """Keep only the terms of total degree < ``below``."""
    return {e: c for e, c in p.items() if sum(e) < below}


def derivative(p: Poly, i: int) -> Poly:
    out: Poly = {}
    for e, c in p.items():
        if e[i]:
            f = list(e)
            f[i] -= 1
            out[tuple(f)] = c * e[i]
    return out


def evaluate(p: Poly, point: Sequence) -> Fraction:
    total = Fraction(0)
    for e, c in p.items():
        term = c
        for x, k in zip(point, e):
            if k:
                term *= Fraction(x) ** k
        total += term
    return total


def substitute(p: Poly, images: Sequence[Poly], nvars_out: int) -> Poly:
    """Compose ``p`` with ``images[i]`` substituted for variable ``i``."""
    powers: list[dict[int, Poly]] = [{0: constant(1, nvars_out)} for _ in images]

    def pw(i: int, k: int) -> Poly:
        cache = powers[i]
        if k not in cache:
            cache[k] = mul(pw(i, k - 1), images[i])
        return cache[k]

    out: Poly = {}
    for e, c in p.items():
        term = constant(c, nvars_out)
        for i, k in enumerate(e):
            if k:
                term = mul(term, pw(i, k))
        out = add(out, term)
    return out


def is_homogeneous(p: Poly) -> bool:
    return len({sum(e) for e in p}) <= 1


def from_sympy(expr, symbols: Sequence[sympy.Symbol]) -> Poly:
    poly = sympy.Poly(sympy.expand(expr), *symbols, domain=sympy.QQ)
    out: Poly = {}
    for e, c in poly.terms():
        c = sympy.Rational(c)
        out[tuple(int(k) for k in e)] = Fraction(int(c.p), int(c.q))
    return clean(out)


def to_sympy(p: Poly, symbols: Sequence[sympy.Symbol]):
    expr = sympy.Integer(0)
    for e, c in p.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(symbols, e):
            term *= s**k
        expr += term
    return expr


def parse(text: str, names: Sequence[str]) -> Poly:
    """Parse ``text`` such as ``"x^2 - 2*y^3 + 1/2*x*y"`` into a polynomial.

    Raises ``ValueError`` when the text is not a polynomial with rational
    coefficients in exactly the given variables.
    """
    symbols = sympy.symbols(list(names))
    local = {n: s for n, s in zip(names, symbols)}
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMS, evaluate=True)
    except Exception as exc:  # sympy raises a zoo of exception types here
        raise ValueError(f"cannot parse polynomial {text!r}: {exc}") from exc
    extra = expr.free_symbols - set(symbols)
    if extra:
        raise ValueError(f"unknown variables {sorted(map(str, extra))} in {text!r}")
    try:
        return from_sympy(expr, symbols)
    except sympy.PolynomialError as exc:
        raise ValueError(f"not a polynomial: {text!r}") from exc
    except sympy.CoercionFailed as exc:
        raise ValueError(f"coefficients must be rational: {text!r}") from exc


def format_poly(p: Poly, names: Sequence[str]) -> str:
    if not p:
        return "0"
    parts = []
    for e in sorted(p, key=lambda e: (sum(e), tuple(-k for k in e))):
        c = p[e]
        mono = "*".join(
            n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
        )
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text

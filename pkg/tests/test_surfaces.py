from itertools import product

import pytest
from hypothesis import given, strategies as st

from maxpicard.errors import IncompatibleLatticeError, UnsupportedSurfaceError
from maxpicard.surfaces import (
    BaseSurface,
    Positivity,
    SurfaceInvariants,
    canonical_class,
    h0,
    intersect,
    positivity,
    pullback_to_blowup,
)

P2 = BaseSurface.plane()
BL = BaseSurface.blown_up_f1()


def F(e):
    return BaseSurface.hirzebruch(e)


def test_negative_section_square():
    s = F(3)
    assert intersect(s.cls(1, 0), s.cls(1, 0)) == -3


def test_family_a_half_canonical_square():
    s = F(2)
    d = s.cls(1, 4)
    assert intersect(d, d) == 6


def test_blowup_nef_pairing():
    for a, b, g in product(range(4), repeat=3):
        assert intersect(BL.cls(a, b, -g), BL.cls(2, 3, -1)) == a + 2 * b - g


def test_mismatched_surfaces_rejected():
    with pytest.raises(IncompatibleLatticeError):
        intersect(F(1).cls(1, 0), F(2).cls(1, 0))
    with pytest.raises(IncompatibleLatticeError):
        F(1).cls(1, 0) + P2.cls(1)


def test_canonical_classes():
    assert canonical_class(P2) == P2.cls(-3)
    assert canonical_class(F(2)) == F(2).cls(-2, -4)
    assert canonical_class(BL) == pullback_to_blowup(canonical_class(F(1))) + BL.cls(0, 0, 1)


def test_canonical_class_matches_family_a_data():
    s = F(2)
    branch = s.cls(1, 0) + s.cls(1, 2) + s.cls(3, 10)  # B1 + B2 + B3 at (1, 2, 0)
    assert 2 * canonical_class(s) + branch == s.cls(1, 4)


def test_h0_examples():
    assert h0(P2.cls(5)) == 21
    assert h0(P2.cls(-1)) == 0
    assert h0(F(2).cls(2, 5)) == 12
    s = F(2)
    k = canonical_class(s)
    ls = [s.cls(2, 6), s.cls(2, 5), s.cls(1, 1)]  # family A at (1, 2, 0)
    assert [h0(k + l) for l in ls] == [3, 2, 0]


def test_h0_unsupported_on_blowup():
    with pytest.raises(UnsupportedSurfaceError):
        h0(BL.cls(1, 1, 0))
    with pytest.raises(UnsupportedSurfaceError):
        positivity(BL.cls(1, 1, 0))


def _h0_monomials(e, a, b):
    return sum(
        1
        for k, l, i, j in product(range(a + 1), range(a + 1), range(b + 1), range(b + 1))
        if k + l == a and k * e + i + j == b
    )


def test_h0_matches_monomial_count():
    for e, a, b in product(range(5), range(7), range(13)):
        assert h0(F(e).cls(a, b)) == _h0_monomials(e, a, b)


def test_positivity_examples():
    assert positivity(F(2).cls(1, 4)) is Positivity.AMPLE
    assert positivity(F(2).cls(1, 2)) is Positivity.NEF_NOT_AMPLE
    assert positivity(F(2).cls(1, 1)) is Positivity.NOT_NEF
    assert positivity(P2.cls(1)) is Positivity.AMPLE
    assert positivity(P2.cls(0)) is Positivity.NEF_NOT_AMPLE
    assert positivity(P2.cls(-2)) is Positivity.NOT_NEF


coeff = st.integers(-20, 20)


@given(st.integers(0, 6), coeff, coeff, coeff, coeff, coeff, coeff, st.integers(-5, 5))
def test_intersection_bilinear_symmetric(e, a1, b1, a2, b2, a3, b3, t):
    s = F(e)
    x, y, z = s.cls(a1, b1), s.cls(a2, b2), s.cls(a3, b3)
    assert intersect(x, y) == intersect(y, x)
    assert intersect(x + t * y, z) == intersect(x, z) + t * intersect(y, z)


@given(st.integers(0, 6), st.integers(0, 10), st.integers(0, 40))
def test_ample_is_positive_on_generators(e, a, b):
    s = F(e)
    d = s.cls(a, b)
    if positivity(d) is Positivity.AMPLE:
        assert intersect(d, s.cls(1, 0)) > 0
        assert intersect(d, s.cls(0, 1)) > 0


def test_invariants_identities():
    inv = SurfaceInvariants.from_numbers(6, 6, 5)
    assert (inv.q, inv.h11) == (0, 54)
    with pytest.raises(ValueError):
        SurfaceInvariants(k2=6, chi=6, pg=5, q=0, h11=53)
    with pytest.raises(ValueError):
        SurfaceInvariants(k2=6, chi=6, pg=4, q=0, h11=54)


def test_bad_surfaces():
    with pytest.raises(ValueError):
        BaseSurface.hirzebruch(-1)
    with pytest.raises(ValueError):
        F(1).cls(1, 2, 3)

from dataclasses import replace
from itertools import product

import pytest
from hypothesis import given, strategies as st

from maxpicard import constructions as cons
from maxpicard.certify import Certificate, certify, certify_maximal, matrix_rank, rank_lower_bound
from maxpicard.errors import InconsistencyError
from maxpicard.singularities import D, SingularityCensus, dynkin_matrix

PRIME = 1_000_003


def rank_mod_p(m, p=PRIME):
    """Plain Gaussian elimination over GF(p); an independent oracle."""
    a = [[x % p for x in row] for row in m]
    r = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(a)) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = pow(a[r][c], p - 2, p)
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c] * inv % p
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
    return r


def test_rank_examples():
    assert matrix_rank([[-2, 1, 0], [1, -1, 1], [0, 1, -1]]) == 3
    assert matrix_rank([[0] * 3 for _ in range(3)]) == 0
    assert matrix_rank(dynkin_matrix(D(5))) == 5
    assert matrix_rank([]) == 0
    assert matrix_rank([[1, 2], [2, 4], [3, 6]]) == 1


@given(st.integers(1, 6), st.integers(1, 6), st.randoms(use_true_random=False))
def test_rank_matches_modular_oracle(rows, cols, rnd):
    m = [[rnd.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
    if rnd.random() < 0.5 and rows > 1:
        # force a dependent row
        m[-1] = [a + 2 * b for a, b in zip(m[0], m[1 % rows])]
    assert matrix_rank(m) == rank_mod_p(m)


def test_lower_bound_examples():
    c = cons.family_a(1, 2, 0).census
    assert rank_lower_bound(c, 2) == 54
    assert rank_lower_bound(cons.construct_m13().census, 1) == 29
    assert rank_lower_bound(SingularityCensus(), 2) == 2
    with pytest.raises(ValueError):
        rank_lower_bound(SingularityCensus(), -1)


def test_certify_examples():
    assert certify_maximal(cons.family_b(1, 0, 0)).maximal
    c = certify_maximal(cons.construct_m76())
    assert (c.census_rank, c.extra_rank, c.lower_bound, c.h11) == (50, 3, 53, 53)


def test_deleted_d4_is_not_maximal():
    rec = cons.family_a(1, 2, 0)
    smaller = replace(rec, census=rec.census - SingularityCensus({"D4": 1}))
    cert = certify_maximal(smaller)
    assert cert.lower_bound == 50 and not cert.maximal


def test_overfull_census_is_inconsistent():
    rec = cons.family_a(1, 2, 0)
    bigger = replace(rec, census=rec.census + SingularityCensus({"A1": 1}))
    with pytest.raises(InconsistencyError):
        certify_maximal(bigger)


def test_declared_extra_rank_must_match_matrix():
    rec = cons.construct_m76()
    with pytest.raises(InconsistencyError):
        certify_maximal(replace(rec, extra_rank=2))


def test_certificate_invariants():
    with pytest.raises(InconsistencyError):
        Certificate(10, 2, 0, 13, 20, False)
    with pytest.raises(InconsistencyError):
        Certificate(10, 2, 0, 12, 12, False)
    assert Certificate(10, 2, 0, 12, 12, True).to_json()["maximal"]
    assert certify(SingularityCensus({"A1": 2}), 1, 3).maximal


@pytest.mark.parametrize("family", ["A", "B"])
def test_grid_is_maximal(family):
    for n, m, k in product(range(7), repeat=3):
        p = cons.FamilyParams(family, n, m, k)
        if p.is_valid():
            assert certify_maximal(cons.construct(family, n, m, k)).maximal, p


def _block_matrix(census, divisor_block):
    """Assemble resolution curves and pulled-back divisors in one matrix."""
    blocks = [dynkin_matrix(t) for t, mult in census.items() for _ in range(mult)]
    blocks.append(divisor_block)
    size = sum(len(b) for b in blocks)
    out = [[0] * size for _ in range(size)]
    at = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[at + i][at : at + len(row)] = row
        at += len(b)
    return out


@pytest.mark.parametrize("params", [("A", 1, 2, 0), ("A", 0, 1, 1), ("B", 1, 0, 0)])
def test_block_matrix_cross_check(params):
    rec = cons.construct(*params)
    # pull-backs of the negative section and the fiber; the cover has degree 4
    e = rec.building_data.surface.e
    divisor_block = [[-4 * e, 4], [4, 0]]
    assert matrix_rank(divisor_block) == rec.independent_divisors
    full = _block_matrix(rec.census, divisor_block)
    assert matrix_rank(full) == rec.certificate.lower_bound == rec.invariants.h11


def test_m76_block_matrix_cross_check():
    rec = cons.construct_m76()
    full = _block_matrix(rec.census, cons.M76_MATRIX)
    assert matrix_rank(full) == rec.certificate.lower_bound == 53

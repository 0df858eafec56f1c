from dataclasses import replace
from itertools import product

import pytest
from hypothesis import given, strategies as st

from maxpicard.constructions import FamilyParams, closed_form_invariants, family_building_data, m13_building_data
from maxpicard.covers import (
    BranchDivisor,
    BuildingData,
    Component,
    SingularEvent,
    bidouble_invariants,
    census_of,
    cyclic_census_transport,
    cyclic_pullback,
    half_canonical_ample,
    validate_building_data,
)
from maxpicard.errors import BuildingDataError, TransportShapeError
from maxpicard.singularities import SMOOTH, A, D, SingularityCensus, TransportRule
from maxpicard.surfaces import BaseSurface, intersect

P2 = BaseSurface.plane()


def _branch(*pairs):
    return BranchDivisor(tuple(Component(label, cls) for label, cls in pairs))


def _grid(family, bound):
    for n, m, k in product(range(bound + 1), repeat=3):
        p = FamilyParams(family, n, m, k)
        if p.is_valid():
            yield p


def test_family_a_data_is_valid():
    bd = family_building_data(FamilyParams("A", 1, 2, 0))
    assert validate_building_data(bd) == []
    assert bd.half_canonical_image() == bd.surface.cls(1, 4)


def test_m13_data():
    bd = m13_building_data()
    assert validate_building_data(bd) == []
    assert [b.total(P2) for b in bd.branch] == [P2.cls(5), P2.cls(1), P2.cls(1)]
    assert bd.line_bundles == (P2.cls(1), P2.cls(3), P2.cls(3))
    inv = bidouble_invariants(bd)
    assert (inv.k2, inv.chi, inv.pg, inv.q, inv.h11) == (1, 3, 2, 0, 29)


def test_perturbed_m13_data_violates_first_identity():
    bd = m13_building_data()
    bad = replace(bd, b3=_branch(("T3", P2.cls(2))))
    problems = validate_building_data(bad)
    assert "2L1 != B2 + B3" in problems
    with pytest.raises(BuildingDataError):
        bidouble_invariants(bad)


def test_duplicate_labels_and_foreign_classes():
    bd = m13_building_data()
    dup = replace(bd, b3=_branch(("T2", P2.cls(1))))
    assert any("both" in p for p in validate_building_data(dup))
    f1 = BaseSurface.hirzebruch(1)
    foreign = replace(bd, l1=f1.cls(1, 0))
    assert validate_building_data(foreign)


def test_invariants_examples():
    inv = bidouble_invariants(family_building_data(FamilyParams("A", 1, 2, 0)))
    assert (inv.k2, inv.chi, inv.pg, inv.q, inv.h11) == (6, 6, 5, 0, 54)
    inv = bidouble_invariants(family_building_data(FamilyParams("B", 1, 0, 0)))
    assert (inv.k2, inv.chi, inv.h11) == (6, 6, 54)


@pytest.mark.parametrize("family", ["A", "B"])
def test_invariants_match_closed_forms(family):
    for p in _grid(family, 4):
        bd = family_building_data(p)
        inv = bidouble_invariants(bd)
        assert inv == closed_form_invariants(p), p
        assert inv.h11 == 10 * inv.chi - inv.k2 - 2 * inv.q
        assert inv.chi == 1 + inv.pg - inv.q


@pytest.mark.parametrize("family", ["A", "B"])
def test_validation_clean_on_grid(family):
    for p in _grid(family, 6):
        assert validate_building_data(family_building_data(p)) == [], p


def test_ampleness_examples():
    assert half_canonical_ample(family_building_data(FamilyParams("A", 1, 2, 0)))
    assert half_canonical_ample(family_building_data(FamilyParams("B", 1, 0, 0)))
    empty = BuildingData(P2, _branch(), _branch(), _branch(), P2.cls(0), P2.cls(0), P2.cls(0))
    assert not half_canonical_ample(empty)


def test_cyclic_pullback_examples():
    f1 = BaseSurface.hirzebruch(1)
    assert cyclic_pullback(1, 2, f1.cls(1, 1)) == (BaseSurface.hirzebruch(2).cls(1, 2),)
    f3 = BaseSurface.hirzebruch(3)
    assert cyclic_pullback(1, 3, f1.cls(0, 1), on_branch=True) == (f3.cls(0, 1),)
    assert cyclic_pullback(1, 3, f1.cls(0, 1)) == (f3.cls(0, 1),) * 3
    with pytest.raises(ValueError):
        cyclic_pullback(1, 3, f1.cls(1, 1), on_branch=True)
    with pytest.raises(ValueError):
        cyclic_pullback(1, 0, f1.cls(1, 1))


@given(st.integers(0, 3), st.integers(1, 5), st.integers(1, 4), st.integers(0, 6), st.integers(1, 4), st.integers(0, 6))
def test_cyclic_pullback_scales_intersections(e, d, a1, b1, a2, b2):
    s = BaseSurface.hirzebruch(e)
    c1, c2 = s.cls(a1, b1), s.cls(a2, b2)
    (u,), (v,) = cyclic_pullback(e, d, c1), cyclic_pullback(e, d, c2)
    assert intersect(u, v) == d * intersect(c1, c2)


def _event(label, t, **kw):
    return SingularEvent(point_label=label, membership=frozenset({"l1", "l2"}), ade=t, **kw)


def test_cyclic_transport_examples():
    (ev,) = cyclic_census_transport([_event("P1", A(1), fiber="l5", on_branch_fiber=True)], 4)
    assert ev.ade == A(7) and ev.rule is TransportRule.R1
    out = cyclic_census_transport([_event("P3", D(4), fiber="l8")], 2)
    assert [e.ade for e in out] == [D(4), D(4)]
    assert len({e.point_label for e in out}) == 2
    with pytest.raises(TransportShapeError):
        cyclic_census_transport([_event("P", A(2), fiber="l5", on_branch_fiber=True)], 3)
    with pytest.raises(TransportShapeError):
        cyclic_census_transport([_event("P", A(1), fiber="l5", on_branch_fiber=True, transversal=False)], 3)


def test_event_rule_shapes():
    ev = SingularEvent("P", frozenset({"B1", "B3"}), A(5), rule=TransportRule.R4)
    assert ev.outcome() == SingularityCensus({A(2): 1})
    assert ev.to_json()["outcome"] == {"A2": 1}
    with pytest.raises(ValueError):
        SingularEvent("P", frozenset({"B1"}), A(5), rule=TransportRule.R4)
    with pytest.raises(ValueError):
        SingularEvent("P", frozenset(), A(1))
    smooth = SingularEvent("P", frozenset({"B1", "B2"}), SMOOTH)
    assert census_of([smooth, ev]) == SingularityCensus({A(2): 1})

from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from maxpicard import plane_oracle as po
from maxpicard.covers import census_of
from maxpicard.errors import ArrangementError
from maxpicard.plane_oracle import PlaneCurve, ProjLine, ProjPoint, contact_order, join, meet
from maxpicard.singularities import A, E, SingularityCensus, Verdict, classify_germ

FAMILY_A_PRECOVER = {
    "P1": ("A1", "l5"),
    "P2": ("A1", "l6"),
    "P3": ("A1", "l8"),
    "P4": ("A1", "l6"),
    "P5": ("A1", "l7"),
    "P6": ("A1", "l5"),
}
# three tacnodes where the conic meets its tangents, two nodes on fibers and
# the node of l2 and l3 away from every fiber
FAMILY_B_PRECOVER = {
    "P1": ("A3", "l4"),
    "P2": ("A3", "l6"),
    "P3": ("A3", None),
    "P4": ("A1", "l4"),
    "P5": ("A1", "l5"),
    "(1:-1/2:0)": ("A1", None),
}


def _precover(a, curves):
    return {ev.point_label: (str(ev.ade), ev.fiber) for ev in po.derive_census(a, {"curves": curves})}


def test_join_meet_examples():
    l = join(ProjPoint((0, 0, 1)), ProjPoint((1, -1, 0)))
    assert l == ProjLine((1, 1, 0))
    assert meet(ProjLine((1, 1, 0)), ProjLine((0, 1, 1))) == ProjPoint((1, -1, 1))
    with pytest.raises(ArrangementError):
        join(ProjPoint((1, 2, 3)), ProjPoint((2, 4, 6)))
    with pytest.raises(ValueError):
        ProjPoint((0, 0, 0))


coord = st.fractions(min_value=-5, max_value=5, max_denominator=3)
triple = st.tuples(coord, coord, coord).filter(any)


@given(triple, triple, triple)
def test_join_meet_duality(p, q, r):
    p, q = ProjPoint(p), ProjPoint(q)
    assume(p != q)
    l = join(p, q)
    assert l.contains(p) and l.contains(q)
    other = ProjLine(r)
    assume(other != l)
    x = meet(l, other)
    assert l.contains(x) and other.contains(x)


def test_contact_order_examples():
    conic = PlaneCurve.parse("C", "y^2 - x*z")
    z0 = PlaneCurve.parse("T", "z")
    assert contact_order(conic, z0, ProjPoint((1, 0, 0))) == 2
    assert contact_order(z0, conic, ProjPoint((1, 0, 0))) == 2
    x0 = PlaneCurve.parse("X", "x")
    y0 = PlaneCurve.parse("Y", "y")
    assert contact_order(x0, y0, ProjPoint((0, 0, 1))) == 1
    cusp = PlaneCurve.parse("K", "y^3 - x*z^2")
    assert contact_order(cusp, z0, ProjPoint((1, 0, 0))) == 3
    assert contact_order(x0, y0, ProjPoint((1, 0, 0))) == 0


def test_contact_order_additive_over_products():
    conic = PlaneCurve.parse("C", "y^2 - x*z")
    z0 = PlaneCurve.parse("T", "z")
    y0 = PlaneCurve.parse("Y", "y")
    prod = PlaneCurve.parse("TY", "z*y")
    p = ProjPoint((1, 0, 0))
    assert contact_order(conic, prod, p) == contact_order(conic, z0, p) + contact_order(conic, y0, p)


def test_local_germ_examples():
    a = po.instantiate_family_a()
    g = po.local_germ(a, ["l1", "l2"], a.point("P1"))
    assert classify_germ(g).ade == A(1)
    m = po.instantiate_m13()
    g = po.local_germ(m, po.M13_PARTITION["B1"], m.point("cusp"))
    assert classify_germ(g).ade == E(7)
    b = po.instantiate_family_b()
    g = po.local_germ(b, ["C", "l1"], b.point("P1"))
    assert classify_germ(g).ade == A(3)
    g = po.local_germ(a, ["l1"], a.point("P1"))
    assert classify_germ(g).verdict is Verdict.SMOOTH


def test_fixture_coordinates():
    a = po.instantiate_family_a()
    assert a.point("Q") == ProjPoint((1, -1, 1))
    assert a.point("P7") == ProjPoint((1, 0, 1))
    assert a.curve("l7").poly == PlaneCurve.parse("l7", "x + 2*y + z").poly
    b = po.instantiate_family_b()
    expected = {"P4": (1, 0, -1), "P5": (2, 1, 0), "Q": (0, 0, 1), "P6": (2, 1, -4), "P7": (1, 1, 0)}
    for name, c in expected.items():
        assert b.point(name) == ProjPoint(c)
    assert b.curve("l4").poly == PlaneCurve.parse("l4", "y").poly


@pytest.mark.parametrize("name", sorted(po.FIXTURES))
def test_fixtures_verify(name):
    assert po.verify_arrangement(po.FIXTURES[name]()) == []


def test_degenerate_family_a_rejected():
    a = po.instantiate_family_a()
    bad = a.with_curve(PlaneCurve.parse("l4", "x + y"))
    assert po.verify_arrangement(bad)
    with pytest.raises(ArrangementError):
        po.require_verified(bad)


def test_repeated_tangency_rejected():
    b = po.instantiate_family_b()
    bad = b.with_curve(PlaneCurve.line("l3", po.conic_tangent(1))).with_point("P3", b.point("P2"))
    assert po.verify_arrangement(bad)


def test_m13_repeated_tangency_rejected():
    m = po.instantiate_m13()
    bad = m.with_curve(PlaneCurve.line("T3", po.cuspidal_tangent(1)))
    assert po.verify_arrangement(bad)


def test_family_a_precover_census():
    assert _precover(po.instantiate_family_a(), ["l1", "l2", "l3", "l4"]) == FAMILY_A_PRECOVER


def test_family_b_precover_census():
    assert _precover(po.instantiate_family_b(), ["C", "l1", "l2", "l3"]) == FAMILY_B_PRECOVER


def test_family_a_point_p1_is_transversal_to_branch_fiber():
    a = po.instantiate_family_a()
    (ev,) = [e for e in po.derive_census(a, {"curves": ["l1", "l2"]}) if e.point_label == "P1"]
    assert ev.on_branch_fiber and ev.transversal and ev.fiber == "l5"


def test_m13_censuses():
    m = po.instantiate_m13()
    b1 = po.derive_census(m, {"B1": po.M13_PARTITION["B1"]})
    assert census_of(b1) == SingularityCensus({"E7": 1, "A1": 1, "A5": 1})
    events = po.assign_bidouble_rules(po.derive_census(m, po.M13_PARTITION))
    types = {ev.point_label: str(ev.ade) for ev in events}
    assert types["P2"] == types["P3"] == "A3"
    assert census_of(events) == SingularityCensus({"E7": 2, "A1": 4, "A5": 2})


def test_arrangement_round_trip():
    for build in po.FIXTURES.values():
        a = build()
        assert po.loads(a.dumps()) == a


def test_irrational_intersections_rejected():
    conic = PlaneCurve.parse("C", "x^2 - 2*z^2")
    line = PlaneCurve.parse("L", "y")
    with pytest.raises(ArrangementError):
        po.intersection_points(conic, line)


def test_intersection_points_respect_bezout():
    conic = PlaneCurve.parse("C", "y^2 - x*z")
    line = PlaneCurve.parse("L", "y - z")
    pts = po.intersection_points(conic, line)
    assert sum(mult for _, mult in pts) == 2
    assert {p for p, _ in pts} == {ProjPoint((1, 0, 0)), ProjPoint((1, 1, 1))}
    assert all(conic.contains(p) and line.contains(p) for p, _ in pts)


def test_singular_points_of_cuspidal_cubic():
    assert po.singular_points(PlaneCurve.parse("C", "y^3 - x*z^2")) == [ProjPoint((1, 0, 0))]


def test_curve_json_round_trip():
    c = PlaneCurve.parse("C", "y^2 - 1/2*x*z")
    assert PlaneCurve.from_json(c.to_json()) == c
    assert c.contains(ProjPoint((2, 1, 1)))
    assert not c.contains(ProjPoint((1, 1, 1)))
    assert Fraction(1, 2) in c.poly.values() or Fraction(-1, 2) in c.poly.values()

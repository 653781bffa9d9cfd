"""Canonical-form and Boolean-algebra laws for LineSet, plus relative
topology on carriers.  Algebra laws are cross-checked extensionally
against pointwise membership at a probe grid (independent oracle)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scaletop.exactnum import SQRT2, ExactNumber
from scaletop.intervals import (
    Carrier,
    Interval,
    LineSet,
    SheetPoint,
    SheetSet,
    complement_within,
    component_containing,
    interior_in_carrier,
    interval,
    is_connected_in_carrier,
    is_open_in_carrier,
    normalize,
    point_interval,
)


def num(x) -> ExactNumber:
    return ExactNumber(Fraction(x))


def iv(lo, hi, lc=False, hc=False) -> Interval:
    return interval(
        None if lo is None else num(lo),
        None if hi is None else num(hi),
        lc,
        hc,
    )


# -- strategies -----------------------------------------------------------

coords = st.integers(min_value=-6, max_value=6).map(
    lambda n: ExactNumber(Fraction(n, 2))
)


@st.composite
def intervals_st(draw):
    lo = draw(coords)
    hi = draw(coords)
    if lo > hi:
        lo, hi = hi, lo
    if lo == hi:
        return point_interval(lo)
    return Interval(lo, hi, draw(st.booleans()), draw(st.booleans()))


line_sets = st.lists(intervals_st(), max_size=4).map(normalize)

# Probe grid: half-integer lattice plus irrational offsets so open/closed
# endpoint behavior and interior gaps are all exercised.
PROBES = [ExactNumber(Fraction(n, 4)) for n in range(-28, 29)] + [
    ExactNumber(Fraction(n, 2), Fraction(1, 100)) for n in range(-14, 15)
]


def extensionally_equal(a: LineSet, b: LineSet) -> bool:
    return all(a.member(p) == b.member(p) for p in PROBES)


# -- canonical form -------------------------------------------------------


@given(line_sets)
def test_normalize_idempotent(s):
    assert normalize(s.pieces) == s


@given(line_sets)
def test_pieces_are_separated(s):
    for left, right in zip(s.pieces, s.pieces[1:]):
        assert left.hi is not None and right.lo is not None
        assert left.hi < right.lo or (
            left.hi == right.lo and not left.hi_closed and not right.lo_closed
        )


def test_adjacency_merge_rules():
    # (0,1/2) u (1/2,1) keeps two pieces: the midpoint is absent.
    s = LineSet.of(iv(0, "1/2"), iv("1/2", 1))
    assert len(s.pieces) == 2
    # (0,1/2] u (1/2,1) merges to (0,1).
    t = LineSet.of(iv(0, "1/2", hc=True), iv("1/2", 1))
    assert t == LineSet.of(iv(0, 1))


def test_member_exact_irrational():
    s = LineSet.of(iv(0, 1))
    assert s.member(SQRT2 / 2)
    assert not s.member(SQRT2)


# -- Boolean algebra vs the membership oracle -----------------------------


@given(line_sets, line_sets)
@settings(max_examples=120)
def test_union_intersection_against_oracle(a, b):
    u = a.union(b)
    i = a.intersect(b)
    for p in PROBES:
        assert u.member(p) == (a.member(p) or b.member(p))
        assert i.member(p) == (a.member(p) and b.member(p))


@given(line_sets)
@settings(max_examples=120)
def test_complement_against_oracle(a):
    c = a.complement()
    for p in PROBES:
        assert c.member(p) != a.member(p)
    assert a.complement().complement() == a


@given(line_sets, line_sets)
@settings(max_examples=80)
def test_de_morgan(a, b):
    assert a.union(b).complement() == a.complement().intersect(b.complement())
    assert a.intersect(b).complement() == a.complement().union(b.complement())


@given(line_sets, line_sets)
@settings(max_examples=80)
def test_difference_and_subset(a, b):
    d = a.difference(b)
    for p in PROBES:
        assert d.member(p) == (a.member(p) and not b.member(p))
    assert d.issubset(a)
    assert a.intersect(b).issubset(b)


@given(line_sets)
def test_closure_interior(a):
    assert a.issubset(a.closure())
    assert a.interior().issubset(a)
    assert a.closure().closure() == a.closure()
    assert a.interior().interior() == a.interior()


# -- relative topology ----------------------------------------------------


def carrier_unit() -> Carrier:
    return Carrier.of(LineSet.of(iv(0, 1, lc=True, hc=True)))


def carrier_punctured() -> Carrier:
    # [0, 1/2) u (1/2, 1]
    return Carrier.of(
        LineSet.of(iv(0, "1/2", lc=True), iv("1/2", 1, hc=True))
    )


def test_relative_openness():
    c = carrier_unit()
    s = c.lift(LineSet.of(iv(0, "1/4", lc=True)))
    assert is_open_in_carrier(c, s)
    t = c.lift(LineSet.of(iv(0, "1/4", lc=True, hc=True)))
    assert not is_open_in_carrier(c, t)
    assert is_open_in_carrier(c, c.whole())
    assert is_open_in_carrier(c, c.empty_set())


def test_punctured_carrier_open_but_disconnected():
    c = carrier_punctured()
    s = c.lift(LineSet.of(iv(0, "1/2"), iv("1/2", 1)))
    assert is_open_in_carrier(c, s)
    assert not is_connected_in_carrier(c, s)
    assert not is_connected_in_carrier(c, c.whole())


def test_two_sheets_disconnected():
    unit = LineSet.of(iv(0, 1, lc=True, hc=True))
    c = Carrier.of(unit, unit)
    both = SheetSet((LineSet.of(iv(0, "1/2")), LineSet.of(iv(0, "1/2"))))
    assert not is_connected_in_carrier(c, both)
    one = c.lift(LineSet.of(iv(0, "1/2")), sheet=1)
    assert is_connected_in_carrier(c, one)


def test_interior_and_complement_within():
    c = carrier_unit()
    s = c.lift(LineSet.of(iv(0, "1/2", lc=True, hc=True)))
    inner = interior_in_carrier(c, s)
    # Relative interior keeps the carrier edge point 0 but drops 1/2.
    assert inner == c.lift(LineSet.of(iv(0, "1/2", lc=True)))
    rest = complement_within(c, s)
    assert rest == c.lift(LineSet.of(iv("1/2", 1, hc=True)))
    with pytest.raises(ValueError):
        complement_within(c, c.lift(LineSet.of(iv(0, 2))))


def test_component_containing():
    c = carrier_punctured()
    s = c.whole()
    left = component_containing(s, SheetPoint(0, num("1/4")))
    assert left == c.lift(LineSet.of(iv(0, "1/2", lc=True)))
    assert component_containing(s, SheetPoint(0, num("1/2"))) is None


def test_carrier_validation():
    with pytest.raises(ValueError):
        Carrier.of(LineSet.empty())
    with pytest.raises(ValueError):
        Carrier(())

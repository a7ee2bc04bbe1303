from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spherehecke.coeff import HBAR, ONE, ZERO, IntPoly, NonExactDivision

polys = st.builds(IntPoly, st.lists(st.integers(-50, 50), max_size=6))
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_canonical_zero_is_empty():
    assert IntPoly([0, 0, 0]).coeffs == ()
    assert IntPoly([1, 2, 0]).coeffs == (1, 2)
    assert ZERO.is_zero() and not ONE.is_zero()


def test_mul_examples():
    assert HBAR * HBAR == IntPoly([0, 0, 1])
    assert IntPoly([1, 1]) * IntPoly([1, -1]) == IntPoly([1, 0, -1])
    assert HBAR * ZERO == ZERO


def test_eval_examples():
    assert IntPoly([1, 0, 1])(0) == 1
    assert HBAR(2) == 2
    assert IntPoly([1, 0, -1])(1) == 0
    assert HBAR(Fraction(1, 2)) == Fraction(1, 2)


def test_divexact_examples():
    assert IntPoly([0, 1, 1]).divexact(HBAR) == IntPoly([1, 1])
    assert IntPoly([-1, 0, 1]).divexact(IntPoly([-1, 1])) == IntPoly([1, 1])
    with pytest.raises(NonExactDivision):
        HBAR.divexact(IntPoly([0, 0, 1]))
    with pytest.raises(NonExactDivision):
        ONE.divexact(ZERO)


def test_json_round_trip():
    p = IntPoly([2, 1])
    assert p.to_json() == ["2", "1"]
    assert IntPoly.from_json(["2", "1"]) == p
    assert ZERO.to_json() == []


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * ONE == a and a + ZERO == a


@given(polys, polys, st.integers(-5, 5))
def test_eval_is_ring_hom(a, b, q):
    assert (a * b)(q) == a(q) * b(q)
    assert (a + b)(q) == a(q) + b(q)


@given(polys, nonzero_polys)
def test_divexact_roundtrip(a, b):
    assert (a * b).divexact(b) == a

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantorkit import (
    CantorBasis,
    DigitString,
    GapSequence,
    InvalidDigitError,
    OutOfRangeError,
    digits_from_rational,
    eval_cantor,
    eval_negas_cantor,
    eval_negasadic,
    eval_sadic,
    alternating_cantor_compatible,
)


def test_sadic_finite_sums():
    assert eval_sadic(DigitString(3, (1, 0, 2))) == F(11, 27)
    assert eval_sadic(DigitString(3, ())) == 0
    assert eval_sadic(DigitString(5, (4,))) == F(4, 5)


def test_sadic_geometric_tail():
    # partial sums of the all-2 tail approach 1; the closed tail hits it exactly
    partials = [eval_sadic(DigitString(3, (2,) * n)) for n in range(1, 8)]
    assert all(a < b < 1 for a, b in zip(partials, partials[1:]))
    assert eval_sadic(DigitString(3, ()), tail=(2,)) == 1


def test_negasadic_values():
    assert eval_negasadic(DigitString(3, (1,))) == F(-1, 3)
    assert eval_negasadic(DigitString(3, ()), tail=(2, 0)) == F(-3, 4)
    assert eval_negasadic(DigitString(3, ()), tail=(0, 2)) == F(1, 4)
    # odd-period tail needs the doubled sign cycle
    assert eval_negasadic(DigitString(3, ()), tail=(1,)) == F(-1, 4)


@given(st.integers(2, 7), st.lists(st.integers(0, 9), max_size=12))
def test_negasadic_range(s, raw):
    digits = tuple(d % s for d in raw)
    x = eval_negasadic(DigitString(s, digits))
    assert F(-s, s + 1) <= x <= F(1, s + 1)


def test_cantor_series():
    basis = CantorBasis.periodic([2, 3, 4])
    assert eval_cantor((1, 2, 3), basis) == F(23, 24)
    assert eval_cantor((1, 2, 3), basis, alternating=True) == F(-7, 24)
    with pytest.raises(InvalidDigitError):
        eval_cantor((2,), CantorBasis.constant(2))


@given(st.integers(2, 6), st.lists(st.integers(0, 9), max_size=10))
def test_cantor_constant_basis_degenerates_to_sadic(s, raw):
    digits = tuple(d % s for d in raw)
    assert eval_cantor(digits, CantorBasis.constant(s)) == eval_sadic(DigitString(s, digits))


def test_negas_cantor():
    assert eval_negas_cantor((1, 1, 1), GapSequence.constant(1), 3) == F(-7, 27)
    assert eval_negas_cantor((1, 1), (3, 3), 2) == F(-7, 64)
    assert eval_negas_cantor((0, 0, 0), GapSequence.constant(5), 7) == 0


def test_alternating_compatibility():
    assert alternating_cantor_compatible(GapSequence.periodic([3, 5, 7]), 50)
    assert alternating_cantor_compatible(GapSequence.constant(1), 10)
    assert not alternating_cantor_compatible((3, 4, 5), 3)


@given(
    st.integers(2, 5),
    st.lists(st.tuples(st.integers(0, 6), st.integers(0, 4)), min_size=1, max_size=6),
)
def test_odd_gap_series_equals_alternating_cantor(s, raw):
    # under odd gaps, the gap-structured series IS the alternating Cantor
    # series with basis d_n = s^(m_n)
    gaps = tuple(2 * (m % 4) + 1 for _, m in raw)
    eps = tuple(e % s for e, _ in raw)
    lhs = eval_negas_cantor(eps, gaps, s)
    rhs = eval_cantor(eps, CantorBasis.periodic([s**m for m in gaps] or [s]), alternating=True)
    assert alternating_cantor_compatible(gaps, len(gaps))
    assert lhs == rhs


def test_digits_from_rational_positive():
    assert digits_from_rational(F(1, 3), 3, 3).digits == (1, 0, 0)
    with pytest.raises(OutOfRangeError):
        digits_from_rational(1, 3, 4)
    with pytest.raises(OutOfRangeError):
        digits_from_rational(F(5, 4), 3, 4)


def test_digits_from_rational_negative():
    assert digits_from_rational(0, 4, 5, negative=True).digits == (0,) * 5
    d = digits_from_rational(F(-1, 4), 3, 4, negative=True)
    err = abs(eval_negasadic(d) - F(-1, 4))
    assert err <= F(3, 3**4 * 2)
    # range endpoints stay representable
    lo = digits_from_rational(F(-3, 4), 3, 6, negative=True)
    assert abs(eval_negasadic(lo) - F(-3, 4)) <= F(3, 3**6 * 2)
    with pytest.raises(OutOfRangeError):
        digits_from_rational(F(1, 2), 3, 4, negative=True)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7), st.fractions(), st.integers(1, 10), st.booleans())
def test_round_trip_bound(s, x, n, negative):
    if negative:
        lo, hi = F(-s, s + 1), F(1, s + 1)
    else:
        lo, hi = F(0), F(1)
    span = hi - lo
    x = lo + (x - x.__floor__()) * span  # fold into range
    if not negative and x == 1:
        x = F(0)
    d = digits_from_rational(x, s, n, negative=negative)
    back = eval_negasadic(d) if negative else eval_sadic(d)
    assert abs(back - x) <= F(s, s - 1) / s**n


def test_digit_validation():
    with pytest.raises(InvalidDigitError):
        DigitString(3, (3,))
    with pytest.raises(InvalidDigitError):
        DigitString(1, (0,))
    with pytest.raises(InvalidDigitError):
        eval_negas_cantor((5,), (3,), 3)

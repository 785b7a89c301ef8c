from __future__ import annotations

import pytest

from wprm.errors import GcdViolation, UnsupportedRegime
from wprm.ff import field_make
from wprm.hilbert import (
    a_invariant,
    divisible_by_one_minus,
    hf_closed,
    hf_from_p,
    hf_oracle,
    hilbert_values,
    p_coefficients,
    quasi_poly_eval,
    reg_contains,
    regularity_first,
    regularity_set,
    series_expand,
    series_numerator,
    synthetic_divide,
)
from wprm.wps import enumerate_points, space_make


def _pts(q, a, b):
    return enumerate_points(space_make((1, a, b)), field_make(q))


def test_numerator_examples():
    assert series_numerator(2, 1, 2).numerator == ((0, 1), (3, -1), (5, -2), (6, 1), (7, 1))
    assert series_numerator(5, 1, 5).numerator == ((0, 1), (6, -1), (26, -2), (27, 1), (31, 1))
    assert len(series_numerator(5, 1, 5).raw_terms) == 6
    with pytest.raises(GcdViolation):
        series_numerator(3, 2, 4)


@pytest.mark.parametrize("q,a,b", [(2, 1, 2), (5, 1, 5), (3, 2, 3), (5, 3, 7), (4, 1, 1)])
def test_numerator_divisibility(q, a, b):
    s = series_numerator(q, a, b)
    assert s.numerator_at(1) == 0
    assert divisible_by_one_minus(s, 1)
    if a == 1:
        quot, rem = synthetic_divide(s.coefficients(), 1)
        assert not any(rem) and not any(synthetic_divide(quot, 1)[1])


def test_numerator_not_divisible_by_one_minus_tb():
    # N(-1) = 4 for q=2, a=1, b=2, so 1 + t does not divide N
    s = series_numerator(2, 1, 2)
    assert s.numerator_at(-1) == 4
    assert not divisible_by_one_minus(s, 2)


def test_synthetic_divide():
    # 1 - t^4 = (1 - t^2)(1 + t^2)
    assert synthetic_divide([1, 0, 0, 0, -1], 2) == ([1, 0, 1], [0, 0])


def test_series_examples():
    h = series_expand(series_numerator(5, 1, 2), 6)
    assert h == [1, 2, 4, 6, 9, 12, 15]
    assert series_expand(series_numerator(5, 1, 7), 35)[35] == 31
    for q, a, b in ((2, 1, 2), (3, 2, 3), (5, 3, 7)):
        assert series_expand(series_numerator(q, a, b), 0) == [1]


def test_p_coefficients():
    assert p_coefficients(2, 2) == [1, 2, 3, 3, 3, 1]
    for q, b in ((5, 2), (3, 7), (4, 4)):
        p = p_coefficients(q, b)
        assert p[-1] == 1
        ser = series_expand(series_numerator(q, 1, b), 3 * q * b)
        assert all(ser[d] == hf_from_p(q, b, d) for d in range(3 * q * b + 1))


def test_closed_examples():
    assert hf_closed(5, 2, 6) == 15
    assert hf_closed(5, 5, 25) == 31
    assert hf_closed(5, 2, 11) == 28
    assert hf_closed(2, 5, 10) == 7
    assert hf_closed(2, 5, -1) == 0
    with pytest.raises(UnsupportedRegime):
        hf_closed(3, 1, 4)
    with pytest.raises(UnsupportedRegime):
        hilbert_values(3, 2, 3, 5, "closed")


def test_oracle_examples():
    assert hf_oracle(space_make((1, 1, 2)), field_make(5), _pts(5, 1, 2), 4) == 9
    assert hf_oracle(space_make((1, 1, 7)), field_make(2), _pts(2, 1, 7), 14) == 7


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_closed_equals_series(q):
    for b in range(1, 10):
        if b == 1 and q > b:
            continue
        ser = series_expand(series_numerator(q, 1, b), 3 * q * b)
        assert [hf_closed(q, b, d) for d in range(3 * q * b + 1)] == ser


@pytest.mark.parametrize("name,q,b", [("hilbert_q5_b2.csv", 5, 2), ("hilbert_q5_b5.csv", 5, 5), ("hilbert_q5_b7.csv", 5, 7)])
def test_tables_three_routes(golden, name, q, b):
    rows = golden(name)
    d_max = rows[-1]["d"]
    want = [r["H"] for r in rows]
    pts = _pts(q, 1, b)
    for mode in ("closed", "series", "oracle"):
        assert hilbert_values(q, 1, b, d_max, mode, pts) == want, mode


def test_general_a_series_equals_oracle():
    for q, a, b in ((3, 2, 3), (2, 3, 5), (4, 3, 2)):
        pts = _pts(q, a, b)
        d_max = 2 * q * max(a, b)
        assert series_expand(series_numerator(q, a, b), d_max) == hilbert_values(q, a, b, d_max, "oracle", pts)


def test_regularity_examples():
    assert [regularity_first(5, b) for b in (2, 5, 7)] == [14, 25, 35]
    assert [regularity_first(2, b) for b in (2, 5, 7)] == [4, 10, 14]
    rs = regularity_set(5, 2)
    assert 14 in rs and 16 in rs and 15 not in rs and 12 not in rs
    assert rs.describe() == "d >= 14 and d % 2 == 0"


@pytest.mark.parametrize("q,b", [(2, 3), (3, 2), (4, 5), (5, 2)])
def test_regularity_membership(q, b):
    pts = _pts(q, 1, b)
    n = q * q + q + 1
    for d in range(3 * q * b + 1):
        assert reg_contains(q, b, d) == (hf_oracle(pts.space, pts.field, pts, d) == n)


def test_a_invariant_examples():
    assert a_invariant(5, 1, 2) == 12
    ser = series_expand(series_numerator(5, 1, 2), 40)
    assert ser[12] == 30 and quasi_poly_eval(5, 2, 12) == 31
    assert all(ser[d] == quasi_poly_eval(5, 2, d) for d in range(13, 41))
    assert a_invariant(2, 1, 2) == 3
    pts = _pts(2, 1, 2)
    off = [d for d in range(13) if hf_oracle(pts.space, pts.field, pts, d) != quasi_poly_eval(2, 2, d)]
    assert max(off) == 3
    assert quasi_poly_eval(5, 2, 14) == 31

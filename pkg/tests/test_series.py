import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cylindric_rr.series import (
    INFINITY,
    QSeries,
    YSeries,
    eq_upto,
    gaussian,
    inv,
    mul,
    poch,
    poch_inv,
    qfactorial_inv,
    yeq_upto,
    ymul_geom,
    ymul_poch,
    ysubst,
)

from .oracles import partitions_of, poly_divide, poly_mul, qfact_poly

coeff = st.integers(min_value=-9, max_value=9)


@st.composite
def series(draw, order=None):
    N = draw(st.integers(0, 30)) if order is None else order
    cs = draw(st.lists(coeff, min_size=N + 1, max_size=N + 1))
    return QSeries(cs, N)


@st.composite
def unit_series(draw):
    s = draw(series())
    return QSeries((draw(st.sampled_from([1, -1])),) + s.coeffs[1:], s.order)


def test_difference_of_squares():
    a = QSeries((1, 1), 5)
    b = QSeries((1, -1), 5)
    assert mul(a, b) == QSeries((1, 0, -1), 5)


def test_telescoping_truncates():
    got = QSeries((1, -1), 5) * QSeries((1,) * 6, 5)
    assert got == QSeries.one(5)


def test_order_is_min_of_operands():
    a = QSeries((1, 2, 3), 2)
    b = QSeries((1, 1, 1, 1, 1), 4)
    assert (a + b).order == 2
    assert (a * b).order == 2
    assert len((a * b).coeffs) == 3


def test_exact_operand_does_not_lower_order():
    a = QSeries((1, 2, 3, 4), 3)
    assert (a * gaussian(2, 1)).order == 3
    assert (a + gaussian(2, 1)).order == 3


@given(series())
def test_multiplicative_identity(a):
    assert a * QSeries.one(a.order) == a
    assert a * QSeries.one() == a


def test_inv_geometric():
    assert inv(QSeries((1, -1), 6)) == QSeries((1,) * 7, 6)
    assert inv(QSeries.one(4)) == QSeries.one(4)


def test_inv_exact_needs_order():
    with pytest.raises(ValueError):
        inv(QSeries((1, -1)))
    assert inv(QSeries((1, -1)), 3) == QSeries((1, 1, 1, 1), 3)


def test_inv_rejects_non_unit():
    with pytest.raises(ZeroDivisionError):
        inv(QSeries((2, 1), 4))
    with pytest.raises(ZeroDivisionError):
        inv(QSeries((0, 1), 4))


def test_inv_euler_product_q5():
    # p(5) by direct enumeration
    expected = sum(1 for _ in partitions_of(5))
    assert expected == 7
    assert inv(poch(1, 1, INFINITY, 10))[5] == expected


def test_poch_small():
    assert poch(1, 1, 2, 6) == QSeries((1, -1, -1, 1), 6)
    assert poch(1, 1, 0, 6) == QSeries.one(6)
    assert poch(7, 7, INFINITY, 6) == QSeries.one(6)


@pytest.mark.parametrize("a,b", [(0, 1), (1, 0), (-1, 2)])
def test_poch_domain(a, b):
    with pytest.raises(ValueError):
        poch(a, b, 3, 5)


def test_poch_inv_matches_inv():
    for a, b, n in [(1, 1, INFINITY), (2, 7, INFINITY), (1, 1, 4), (3, 2, 5)]:
        assert poch_inv(a, b, n, 25) == inv(poch(a, b, n, 25))


def test_qfactorial_inv():
    for n in range(8):
        assert qfactorial_inv(n, 20) == inv(poch(1, 1, n, 20))
    assert qfactorial_inv(50, 20) == poch_inv(1, 1, INFINITY, 20)


def test_gaussian_examples():
    assert gaussian(2, 1) == QSeries((1, 1))
    assert gaussian(5, -1) == QSeries.zero()
    assert gaussian(3, 4) == QSeries.zero()
    assert gaussian(-2, 0) == QSeries.zero()
    assert gaussian(0, 0) == QSeries.one()


def test_gaussian_4_2_by_division():
    expected = poly_divide(qfact_poly(4), poly_mul(qfact_poly(2), qfact_poly(2)))
    assert expected == [1, 1, 2, 1, 1]
    assert list(gaussian(4, 2).coeffs) == expected


@pytest.mark.parametrize("n", range(0, 13))
def test_gaussian_properties(n):
    from math import comb

    for k in range(n + 1):
        g = gaussian(n, k)
        assert g == gaussian(n, n - k)
        assert g.degree == k * (n - k)
        assert all(c >= 0 for c in g.coeffs)
        assert g.at_one() == comb(n, k)
        rec = gaussian(n, k) - gaussian(n - 1, k) - gaussian(n - 1, k - 1).shift(n - k)
        if n >= 1:
            assert rec.degree == -1


def test_gaussian_against_division():
    for n in range(9):
        for k in range(n + 1):
            expected = poly_divide(qfact_poly(n), poly_mul(qfact_poly(k), qfact_poly(n - k)))
            assert list(gaussian(n, k).coeffs) == expected


@settings(max_examples=100)
@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a


@given(unit_series())
def test_inverse_is_two_sided(a):
    b = inv(a)
    assert a * b == QSeries.one(a.order)
    assert b * a == QSeries.one(a.order)


def test_partition_numbers():
    p = poch_inv(1, 1, INFINITY, 30)
    assert list(p.coeffs) == [sum(1 for _ in partitions_of(n)) for n in range(31)]


def test_truncated_index_past_order():
    with pytest.raises(IndexError):
        QSeries((1, 2), 1)[2]
    assert QSeries((1, 2))[5] == 0


# y-layer ------------------------------------------------------------------


def _ys(rows, order):
    return YSeries([QSeries(r, order) for r in rows], order)


def test_ysubst_exponent_bookkeeping():
    s = YSeries([QSeries.zero(10), QSeries.zero(10), QSeries.monomial(3, 1, 10)], 10)
    out = ysubst(s, 2)
    assert out[2] == QSeries.monomial(7, 1, 10)
    assert ysubst(s, 0) == s


def test_ymul_poch_empty():
    s = _ys([(1, 2, 3), (0, 1, 1)], 2)
    assert ymul_poch(s, 0) == s


def test_ymul_geom_of_one():
    one = YSeries.constant(1, 5, 2)
    out = ymul_geom(one, 1)
    assert out[0] == QSeries.one(5)
    assert out[1] == QSeries.monomial(1, 1, 5)
    assert out[2] == QSeries.monomial(2, 1, 5)


def test_geom_then_poch_cancels():
    one = YSeries.constant(1, 8, 3)
    assert ymul_poch(ymul_geom(one, 1), 1) == one


@given(st.integers(0, 5), st.lists(st.lists(coeff, min_size=5, max_size=5), min_size=1, max_size=4))
def test_geom_chain_undone_by_poch(m, rows):
    s = _ys(rows, 4)
    forward = s
    for i in range(1, m + 1):
        forward = ymul_geom(forward, i)
    assert ymul_poch(forward, m) == s


def test_yseries_order_invariant():
    s = YSeries([QSeries((1, 2, 3, 4, 5), 4), QSeries((1,), None)], 3)
    assert all(t.order == 3 for t in s.terms)


def test_at_y_one():
    s = _ys([(1, 0, 0), (0, 1, 0), (0, 0, 2)], 2)
    assert s.at_y_one() == QSeries((1, 1, 2), 2)


# comparison ---------------------------------------------------------------


def test_eq_upto():
    a = QSeries((1, 2, 3), 5)
    assert eq_upto(a, a, 5).match
    assert eq_upto(QSeries.one(3), QSeries.monomial(4, 1, 4) + 1, 3).match
    r = eq_upto(QSeries.one(5), QSeries((1, 0, 0, 1), 5), 5)
    assert not r.match and r.first_mismatch == 3


def test_eq_upto_rejects_order_past_operand():
    with pytest.raises(ValueError):
        eq_upto(QSeries.one(3), QSeries.one(5), 4)


def test_yeq_upto_reports_lowest_exponent():
    a = _ys([(1, 0, 0, 0), (0, 0, 0, 0)], 3)
    b = _ys([(1, 0, 0, 7), (0, 0, 5, 0)], 3)
    r = yeq_upto(a, b, 3, 1)
    assert not r.match and r.first_mismatch == 2

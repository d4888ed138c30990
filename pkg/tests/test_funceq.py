import pytest

from cylindric_rr.closedforms import G_closed, g_closed
from cylindric_rr.cylindric import CANONICAL_LEVEL4_RANK3, P, canonical, compositions, oracle_F_y
from cylindric_rr.funceq import (
    REDUCED_SYSTEM,
    check_table,
    f_to_g,
    g_to_f,
    gb_rhs,
    inex_rhs,
    reduced_rhs,
    solve_g,
    subsets,
    support,
    transform,
    verify_gb,
    verify_inex,
)
from cylindric_rr.series import QSeries, YSeries, inv, yeq_upto, ysubst

CANON = CANONICAL_LEVEL4_RANK3


@pytest.fixture(scope="module")
def closed_provider():
    return {p: G_closed(p, 30, 8) for p in CANON}


def oracle(M):
    return lambda p: oracle_F_y(p, M)


def test_support():
    assert support(P(2, 2, 0)) == {1, 2}
    assert support(P(4, 0, 0)) == {1}
    assert support(P(2, 1, 1)) == {1, 2, 3}


def test_transform_examples():
    assert transform(P(2, 2, 0), {2}) == P(2, 1, 1)
    assert transform(P(2, 2, 0), {1, 2}) == P(1, 2, 1)
    assert canonical(P(1, 2, 1)) == P(2, 1, 1)
    assert transform(P(4, 0, 0), {1}) == P(3, 1, 0)


def test_transform_errors():
    with pytest.raises(ValueError):
        transform(P(2, 2, 0), set())
    with pytest.raises(ValueError):
        transform(P(2, 2, 0), {3})


@pytest.mark.parametrize("level,rank", [(l, k) for l in range(1, 5) for k in range(1, 4)])
def test_transform_preserves_level(level, rank):
    for p in compositions(level, rank):
        for J in subsets(p):
            c = transform(p, J)
            assert c.level == p.level and min(c.parts) >= 0


def test_missing_profile_is_named():
    with pytest.raises(LookupError, match=r"\(3,1,0\)"):
        gb_rhs(P(4, 0, 0), {}, 5, 2)


# F equation against the enumeration oracle


@pytest.mark.parametrize("p", compositions(4, 3) + compositions(3, 2), ids=str)
def test_inex_against_oracle(p):
    assert verify_inex(p, oracle(8), 8, 8).match


@pytest.mark.parametrize("p", compositions(2, 3) + compositions(3, 1) + compositions(4, 2), ids=str)
def test_inex_other_profiles(p):
    assert verify_inex(p, oracle(7), 7, 7).match


def test_inex_boundary_and_single_subset():
    out = inex_rhs(P(2, 2, 0), oracle(6), 6, 6)
    assert out[0] == QSeries.one(6)
    # |I_c| = 1: F_(4,0,0)(y) = F_(3,1,0)(yq) / (1 - yq)
    F310 = oracle_F_y(P(3, 1, 0), 6)
    expected = ysubst(F310, 1)
    terms = [expected[0]]
    for m in range(1, 7):
        terms.append(expected[m] + terms[-1].shift(1).truncate(6))
    assert inex_rhs(P(4, 0, 0), oracle(6), 6, 6) == YSeries(terms, 6)


# G equation


@pytest.mark.parametrize("p", CANON, ids=str)
def test_gb_closed_forms(p, closed_provider):
    assert verify_gb(p, closed_provider, 30, 8).match
    assert gb_rhs(p, closed_provider, 30, 8)[0] == QSeries.one(30)


def test_gb_400_is_a_shift(closed_provider):
    assert gb_rhs(P(4, 0, 0), closed_provider, 30, 8) == ysubst(closed_provider[P(3, 1, 0)], 1)


@pytest.mark.parametrize("p", CANON, ids=str)
def test_gb_with_oracle_backed_g(p):
    provider = {c: f_to_g(oracle_F_y(c, 8)) for c in CANON}
    assert verify_gb(p, provider, 8, 8).match


@pytest.mark.parametrize("p", CANON, ids=str)
def test_reduced_system_holds_for_closed_forms(p, closed_provider):
    assert yeq_upto(reduced_rhs(p, closed_provider, 30, 8), closed_provider[p], 30, 8).match


# G <-> F -------------------------------------------------------------------


def test_f_g_inverse_pair():
    F = oracle_F_y(P(2, 2, 0), 9)
    assert g_to_f(f_to_g(F)) == F
    assert f_to_g(g_to_f(F)) == F


def test_f_to_g_against_euler_expansion():
    # (yq;q)_inf = sum_m (-1)^m q^{m(m+1)/2} y^m / (q;q)_m
    N, D = 12, 5
    euler = []
    for m in range(D + 1):
        den = QSeries.one(N)
        for i in range(1, m + 1):
            den = den * QSeries((1,) + (0,) * (i - 1) + (-1,), N)
        euler.append(inv(den).shift(m * (m + 1) // 2).truncate(N) * (-1) ** m)
    assert f_to_g(YSeries.constant(1, N, D)) == YSeries(euler, N)


def test_f_to_g_211_first_coefficient():
    G = f_to_g(oracle_F_y(P(2, 1, 1), 12))
    assert G[0] == QSeries.one(12)
    assert list(G[1].coeffs[:4]) == [0, 2, 3, 4]
    assert G[1] == g_closed(P(2, 1, 1), 1, 12)


def test_ysubst_matches_solver():
    table = solve_g(20, 6)
    shifted = ysubst(table.yseries(P(2, 1, 1)), 1)
    for m in range(7):
        assert shifted[m] == table[P(2, 1, 1), m].shift(m).truncate(20)


# solver --------------------------------------------------------------------


def test_solver_order_follows_dependencies():
    assert list(REDUCED_SYSTEM) == [P(2, 1, 1), P(2, 2, 0), P(3, 0, 1), P(3, 1, 0), P(4, 0, 0)]


def test_solver_boundary_values():
    table = solve_g(40, 8)
    for p in CANON:
        assert table[p, 0] == QSeries.one(40)
        for n in range(1, 9):
            assert table[p, n][0] == 0
    for n in range(9):
        assert table[P(4, 0, 0), n] == table[P(3, 1, 0), n].shift(n).truncate(40)


def test_solver_211_degree_one():
    assert list(solve_g(10, 1)[P(2, 1, 1), 1].coeffs[:4]) == [0, 2, 3, 4]


def test_solver_matches_closed_forms():
    table = solve_g(60, 10)
    for p in CANON:
        for n in range(11):
            assert table[p, n] == g_closed(p, n, 60), (p, n)


def test_solver_table_satisfies_unreduced_equations():
    assert all(r.match for r in check_table(solve_g(30, 8)))


def test_perturbed_table_is_rejected():
    table = solve_g(30, 8)
    table[P(2, 1, 1), 1] = table[P(2, 1, 1), 1] + QSeries.monomial(5, 1, 30)
    reports = check_table(table)
    assert not all(r.match for r in reports)

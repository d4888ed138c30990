"""Sum sides and product sides of the A2 Rogers-Ramanujan identities.

Every sum side here has the shape

    sum_{n1} 1/(q;q)_{n1 - s} sum_{n2 = 0}^{hi(n1)} q^{Q(n1, n2)} * (monomials) * [top(n1) choose n2]_q

with Q(n1, n2) = n1^2 + n2^2 - n1 n2.  A formula is a tuple of
:class:`DoubleSum` pieces, and one evaluator handles all of them.

Since Q(n1, n2) = (n2 - n1/2)^2 + 3 n1^2 / 4, an n1-block contributes
nothing below q^(3 n1^2 / 4); blocks past that bound are skipped.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

from .borodin import product_series
from .cylindric import Profile
from .series import (
    INFINITY,
    QSeries,
    VerificationReport,
    YSeries,
    add,
    eq_upto,
    gaussian,
    mul,
    poch_inv,
    qfactorial_inv,
)

Monomials = Callable[[int, int], tuple[tuple[int, int], ...]]


@dataclass(frozen=True)
class DoubleSum:
    """One double sum: 1/(q;q)_{n1-shift} * sum_{n2<=hi} q^Q * monomials * gauss(top, n2-offset)."""

    shift: int
    top: Callable[[int], int]
    hi: Callable[[int], int]
    mono: Monomials
    offset: int = 0


def _two(n1):
    return 2 * n1


def _two_plus(n1):
    return 2 * n1 + 1


def _two_minus(n1):
    return 2 * n1 - 2


# Per-profile coefficient of y^n1 in G_c(y, q).
G_FORMS: dict[Profile, tuple[DoubleSum, ...]] = {
    Profile((4, 0, 0)): (DoubleSum(0, _two, _two, lambda a, b: ((a + b, 1),)),),
    Profile((3, 1, 0)): (DoubleSum(0, _two, _two, lambda a, b: ((b, 1),)),),
    Profile((3, 0, 1)): (
        DoubleSum(0, _two, _two, lambda a, b: ((a, 1),)),
        DoubleSum(1, _two_minus, _two_minus, lambda a, b: ((2 * b, 1),)),
    ),
    Profile((2, 2, 0)): (
        DoubleSum(0, _two, _two, lambda a, b: ((a, 1),)),
        # q^{n2} (1 + q^{n1 + n2})
        DoubleSum(1, _two_minus, _two_minus, lambda a, b: ((b, 1), (a + 2 * b, 1))),
    ),
    Profile((2, 1, 1)): (DoubleSum(0, _two, _two, lambda a, b: ((0, 1),)),),
}

# Sum sides of the five identities, in their displayed order.
IDENTITY_FORMS: dict[int, tuple[DoubleSum, ...]] = {
    1: (DoubleSum(0, _two, _two, lambda a, b: ((a + b, 1),)),),
    2: (DoubleSum(0, _two, _two, lambda a, b: ((b, 1),)),),
    3: (DoubleSum(0, _two_plus, _two_plus, lambda a, b: ((a, 1),)),),
    4: (DoubleSum(0, _two_plus, _two_plus, lambda a, b: ((b, 1),)),),
    5: (DoubleSum(0, _two, _two, lambda a, b: ((0, 1),)),),
}

# Product sides: 1 / prod (q^e; q^7)_inf.
PRODUCT_EXPONENTS: dict[int, tuple[int, ...]] = {
    1: (2, 3, 3, 4, 4, 5),
    2: (1, 2, 3, 4, 5, 6),
    3: (1, 2, 3, 4, 5, 6),
    4: (1, 2, 2, 5, 5, 6),
    5: (1, 1, 3, 4, 6, 6),
}

IDENTITY_OF_PROFILE: dict[Profile, int] = {
    Profile((4, 0, 0)): 1,
    Profile((3, 1, 0)): 2,
    Profile((3, 0, 1)): 3,
    Profile((2, 2, 0)): 4,
    Profile((2, 1, 1)): 5,
}

# (3,0,1) at n -> infinity after (n1, n2) -> (n1 + 1, n2 - 1) in its second sum
SHIFTED_301: tuple[DoubleSum, ...] = (
    DoubleSum(0, _two, _two, lambda a, b: ((a, 1),)),
    # q^{n1 + (2 n1 - n2 + 1)} [2n1, n2 - 1]
    DoubleSum(0, _two, _two_plus, lambda a, b: ((3 * a - b + 1, 1),), offset=1),
)

# (2,2,0) with (q;q)_{n1-1} rewritten as (1 - q^{n1}) / (q;q)_{n1}:
# q^{n1} [2n1, n2] + q^{n2} (1 + q^{n1+n2}) (1 - q^{n1}) [2n1 - 2, n2]
COMBINED_220: tuple[DoubleSum, ...] = (
    DoubleSum(0, _two, _two, lambda a, b: ((a, 1),)),
    DoubleSum(
        0,
        _two_minus,
        _two,
        lambda a, b: ((b, 1), (a + 2 * b, 1), (a + b, -1), (2 * a + 2 * b, -1)),
    ),
)

# (3,0,1) combined form: q^{n1} [2n1, n2] + q^{2 n2} (1 - q^{n1}) [2n1 - 2, n2]
COMBINED_301: tuple[DoubleSum, ...] = (
    DoubleSum(0, _two, _two, lambda a, b: ((a, 1),)),
    DoubleSum(0, _two_minus, _two, lambda a, b: ((2 * b, 1), (a + 2 * b, -1))),
)


def _require_canonical(p: Profile) -> tuple[DoubleSum, ...]:
    try:
        return G_FORMS[p]
    except KeyError:
        raise ValueError(
            f"{p} is not one of the canonical level-4 rank-3 profiles {tuple(map(str, G_FORMS))}"
        ) from None


def _block(sums, n1: int, N: int) -> QSeries:
    """Contribution of one n1 value, truncated at q^N."""
    out = QSeries.zero(N)
    if 3 * n1 * n1 > 4 * N:
        return out
    for piece in sums:
        if n1 < piece.shift:
            continue
        acc = [0] * (N + 1)
        touched = False
        for n2 in range(piece.hi(n1) + 1):
            base = n1 * n1 + n2 * n2 - n1 * n2
            if base > N:
                continue
            for extra, coeff in piece.mono(n1, n2):
                e = base + extra
                if e > N:
                    continue
                g = gaussian(piece.top(n1), n2 - piece.offset).coeffs
                for i in range(min(len(g), N + 1 - e)):
                    acc[e + i] += coeff * g[i]
                touched = True
        if touched:
            assert n1 - piece.shift >= 0
            out = add(out, mul(QSeries(acc, N), qfactorial_inv(n1 - piece.shift, N)))
    return out


def default_cutoff(N: int) -> int:
    """An n1 bound past which no block reaches q^N."""
    return 2 * math.isqrt(N) + 3


def _limit(sums, N: int, cutoff: int | None = None) -> QSeries:
    cutoff = default_cutoff(N) if cutoff is None else cutoff
    out = QSeries.zero(N)
    for n1 in range(cutoff + 1):
        out = add(out, _block(sums, n1, N))
    return out


def g_closed(p: Profile, n1: int, N: int) -> QSeries:
    """Coefficient of y^n1 in G_c(y, q) from the closed double sums."""
    sums = _require_canonical(p)
    if n1 < 0:
        raise ValueError("y-degree must be nonnegative")
    return _block(sums, n1, N)


def G_closed(p: Profile, N: int, D: int) -> YSeries:
    """G_c(y, q) to q-order N and y-degree D."""
    return YSeries([g_closed(p, m, N) for m in range(D + 1)], N)


def F_finite(p: Profile, n: int, N: int) -> QSeries:
    """Generating function of profile-p cylindric partitions with entries <= n.

    sum_{n1=0}^{n} g_c(n1) / (q;q)_{n - n1}.
    """
    _require_canonical(p)
    if n < 0:
        raise ValueError("max entry must be nonnegative")
    out = QSeries.zero(N)
    for n1 in range(n + 1):
        g = g_closed(p, n1, N)
        if not any(g.coeffs):
            continue
        out = add(out, mul(qfactorial_inv(n - n1, N), g))
    return out


def F_finite_combined_301(n: int, N: int) -> QSeries:
    """The (3,0,1) finite form written with the factor (1 - q^{n1})."""
    out = QSeries.zero(N)
    for n1 in range(n + 1):
        g = _block(COMBINED_301, n1, N)
        if any(g.coeffs):
            out = add(out, mul(qfactorial_inv(n - n1, N), g))
    return out


def sum_side(identity: int, N: int, cutoff: int | None = None) -> QSeries:
    try:
        sums = IDENTITY_FORMS[identity]
    except KeyError:
        raise ValueError(f"identity index must be 1..5, got {identity}") from None
    return _limit(sums, N, cutoff)


def product_side(identity: int, N: int) -> QSeries:
    try:
        exps = PRODUCT_EXPONENTS[identity]
    except KeyError:
        raise ValueError(f"identity index must be 1..5, got {identity}") from None
    out = QSeries.one(N)
    for e in exps:
        out = mul(out, poch_inv(e, 7, INFINITY, N))
    return out


def limit_form(p: Profile, N: int) -> QSeries:
    """G_c(1, q): (q;q)_inf times the n -> infinity limit of F_finite."""
    return _limit(_require_canonical(p), N)


def _merge(subject: str, N: int, reports, t0: float) -> VerificationReport:
    bad = [r.first_mismatch for r in reports if not r.match]
    elapsed = (time.perf_counter() - t0) * 1000
    return VerificationReport(subject, N, not bad, min(bad) if bad else None, elapsed)


def verify_main(identity: int, N: int) -> VerificationReport:
    t0 = time.perf_counter()
    r = eq_upto(sum_side(identity, N), product_side(identity, N), N)
    return _merge(f"main-identity-{identity}", N, [r], t0)


def verify_corollary(p: Profile, N: int) -> VerificationReport:
    """Product formula vs explicit product / (q;q)_inf vs the stabilised finite sums."""
    t0 = time.perf_counter()
    ident = IDENTITY_OF_PROFILE[p]
    borodin = product_series(p, N)
    explicit = mul(qfactorial_inv(N, N), product_side(ident, N))
    # coefficient of q^w in F_finite(p, n, .) is fixed once n >= w, so n = N covers 0..N
    stable = F_finite(p, N, N)
    reports = [eq_upto(borodin, explicit, N), eq_upto(borodin, stable, N)]
    return _merge(f"corollary-{p}", N, reports, t0)


def transform3_chain(N: int) -> tuple[QSeries, QSeries, QSeries]:
    """The (3,0,1) limit, its change-of-variables form, and the third sum side."""
    return (
        limit_form(Profile((3, 0, 1)), N),
        _limit(SHIFTED_301, N),
        sum_side(3, N),
    )


def verify_transform3(N: int) -> VerificationReport:
    t0 = time.perf_counter()
    a, b, c = transform3_chain(N)
    return _merge("transform-3", N, [eq_upto(a, b, N), eq_upto(b, c, N)], t0)


def transform4_chain(N: int) -> tuple[QSeries, QSeries, QSeries]:
    """The (2,2,0) limit, its combined two-term form, and the fourth sum side."""
    return (
        limit_form(Profile((2, 2, 0)), N),
        _limit(COMBINED_220, N),
        sum_side(4, N),
    )


def verify_transform4(N: int) -> VerificationReport:
    t0 = time.perf_counter()
    a, b, c = transform4_chain(N)
    return _merge("transform-4", N, [eq_upto(a, b, N), eq_upto(b, c, N)], t0)


def verify_gaussian_recurrence(n1max: int = 5) -> VerificationReport:
    """[2n1+1, n2] = [2n1, n2] + q^(2n1+1-n2) [2n1, n2-1] for n1 <= n1max.

    Compared as exact polynomials; ``first_mismatch`` is the lowest differing exponent.
    """
    t0 = time.perf_counter()
    bad = []
    for n1 in range(n1max + 1):
        for n2 in range(2 * n1 + 2):
            lhs = gaussian(2 * n1 + 1, n2)
            rhs = gaussian(2 * n1, n2) + gaussian(2 * n1, n2 - 1).shift(2 * n1 + 1 - n2)
            diff = lhs - rhs
            if diff.degree >= 0:
                bad.append(next(i for i, c in enumerate(diff.coeffs) if c))
    order = (n1max + 1) ** 2  # max degree of [2n1+1, n2]
    return _merge("gaussian-recurrence", order, [VerificationReport("", order, False, b) for b in bad], t0)

"""Inclusion-exclusion functional equations for F_c(y, q) and G_c(y, q).

Peeling the maximal first entries off the rows in J gives

    F_c(y) = sum_{0 < J <= I_c} (-1)^{|J|-1} F_{c(J)}(y q^|J|) / (1 - y q^|J|)
    G_c(y) = sum_{0 < J <= I_c} (-1)^{|J|-1} (yq;q)_{|J|-1} G_{c(J)}(y q^|J|)

where G_c(y) = (yq;q)_inf F_c(y) and I_c holds the positions of nonzero
parts.  For level 4 and rank 3 this reduces to the five-line system in
:data:`REDUCED_SYSTEM`, which :func:`solve_g` solves degree by degree in y.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Mapping, Union

from .cylindric import CANONICAL_LEVEL4_RANK3, Profile, canonical
from .series import (
    QSeries,
    VerificationReport,
    YSeries,
    inv,
    mul,
    ymul_geom,
    ymul_poch,
    ysubst,
    yeq_upto,
)

Provider = Union[Mapping[Profile, YSeries], Callable[[Profile], YSeries]]


def support(p: Profile) -> frozenset[int]:
    """I_c: 1-based positions i with c_i > 0."""
    return frozenset(i for i, c in enumerate(p.parts, start=1) if c > 0)


def transform(p: Profile, J) -> Profile:
    """The composition c(J) obtained by removing the first entries of rows in J."""
    J = frozenset(J)
    if not J:
        raise ValueError("J must be nonempty")
    if not J <= support(p):
        raise ValueError(f"J={sorted(J)} is not contained in the support {sorted(support(p))} of {p}")
    k = p.rank
    out = []
    for i in range(1, k + 1):
        prev = k if i == 1 else i - 1  # c_0 = c_k
        c = p[i]
        if i in J and prev not in J:
            c -= 1
        elif i not in J and prev in J:
            c += 1
        out.append(c)
    return Profile(tuple(out))


def subsets(p: Profile):
    """Nonempty subsets J of I_c, in a fixed order."""
    I = sorted(support(p))
    for r in range(1, len(I) + 1):
        for J in itertools.combinations(I, r):
            yield frozenset(J)


def _lookup(provider: Provider, p: Profile, exact: bool = False) -> YSeries:
    """Series for ``p`` (or, unless ``exact`` and the provider is callable, its canonical rotation)."""
    key = canonical(p)
    try:
        if callable(provider) and not isinstance(provider, Mapping):
            return provider(p if exact else key)
        if exact and p in provider:
            return provider[p]
        return provider[key]
    except KeyError:
        raise LookupError(f"provider has no series for profile {key}") from None


def inex_rhs(p: Profile, F: Provider, N: int, D: int) -> YSeries:
    """Right side of the F-equation, truncated to q-order N, y-degree D."""
    out = YSeries.constant(0, N, D)
    for J in subsets(p):
        s = _lookup(F, transform(p, J)).truncate(N, D)
        term = ymul_geom(ysubst(s, len(J)), len(J))
        out = out + term if len(J) % 2 else out - term
    return out


def gb_rhs(p: Profile, G: Provider, N: int, D: int) -> YSeries:
    """Right side of the G-equation, truncated to q-order N, y-degree D."""
    out = YSeries.constant(0, N, D)
    for J in subsets(p):
        s = _lookup(G, transform(p, J)).truncate(N, D)
        term = ymul_poch(ysubst(s, len(J)), len(J) - 1)
        out = out + term if len(J) % 2 else out - term
    return out


def f_to_g(F: YSeries, N: int | None = None, D: int | None = None) -> YSeries:
    """Multiply by (yq;q)_inf = prod_{i>=1} (1 - y q^i)."""
    F = F.truncate(N, D)
    return ymul_poch(F, F.order)


def g_to_f(G: YSeries, N: int | None = None, D: int | None = None) -> YSeries:
    """Divide by (yq;q)_inf."""
    G = G.truncate(N, D)
    for i in range(1, G.order + 1):
        G = ymul_geom(G, i)
    return G


# ---------------------------------------------------------------------------
# the reduced level-4 rank-3 system


@dataclass(frozen=True)
class Term:
    """y^ypow q^qpow G_target(y q^shift)."""

    ypow: int
    qpow: int
    target: Profile
    shift: int


def _t(ypow, qpow, target, shift):
    return Term(ypow, qpow, Profile(target), shift)


# G_c(y) = sum of terms, listed in the order the solver uses
REDUCED_SYSTEM: dict[Profile, tuple[Term, ...]] = {
    Profile((2, 1, 1)): (
        _t(0, 0, (2, 1, 1), 1),
        _t(1, 1, (2, 2, 0), 1),
        _t(1, 1, (2, 2, 0), 2),
        _t(1, 3, (3, 1, 0), 4),
        _t(1, 2, (2, 1, 1), 3),
    ),
    Profile((2, 2, 0)): (
        _t(0, 0, (2, 1, 1), 1),
        _t(1, 1, (2, 1, 1), 2),
        _t(1, 2, (3, 1, 0), 3),
    ),
    Profile((3, 0, 1)): (
        _t(0, 0, (2, 1, 1), 1),
        _t(1, 1, (3, 1, 0), 2),
    ),
    Profile((3, 1, 0)): (
        _t(0, 0, (2, 2, 0), 1),
        _t(1, 2, (3, 1, 0), 3),
        _t(1, 1, (2, 1, 1), 2),
    ),
    Profile((4, 0, 0)): (_t(0, 0, (3, 1, 0), 1),),
}

SOLVE_ORDER = tuple(REDUCED_SYSTEM)


def reduced_rhs(p: Profile, G: Provider, N: int, D: int) -> YSeries:
    """Evaluate the reduced-system right side for ``p`` from a provider."""
    out = YSeries.constant(0, N, D)
    for term in REDUCED_SYSTEM[p]:
        s = ysubst(_lookup(G, term.target).truncate(N, D), term.shift)
        # multiply by y^ypow q^qpow
        zero = QSeries.zero(N)
        shifted = [zero] * term.ypow + [t.shift(term.qpow).truncate(N) for t in s.terms]
        out = out + YSeries(shifted[: D + 1], N)
    return out


@dataclass
class GTable:
    """Coefficients g_c(n) of y^n in G_c(y, q) for the five canonical profiles."""

    order: int
    max_degree: int
    values: dict[tuple[Profile, int], QSeries] = field(default_factory=dict)

    def __getitem__(self, key: tuple[Profile, int]) -> QSeries:
        p, n = key
        return self.values[(canonical(p), n)]

    def __setitem__(self, key: tuple[Profile, int], value: QSeries) -> None:
        p, n = key
        self.values[(canonical(p), n)] = value

    def yseries(self, p: Profile) -> YSeries:
        return YSeries([self[p, n] for n in range(self.max_degree + 1)], self.order)

    def provider(self) -> dict[Profile, YSeries]:
        return {p: self.yseries(p) for p in CANONICAL_LEVEL4_RANK3}


def solve_g(N: int, nmax: int) -> GTable:
    """Solve the reduced system with g_c(0) = 1, one y-degree at a time.

    At degree n a term y^a q^b G_t(y q^s) contributes q^(b + s(n-a)) g_t(n-a).
    The only degree-0 self reference is G_(2,1,1)(yq) in its own line, which
    is moved to the left and divided out as 1 - q^n.
    """
    if N < 1 or nmax < 0:
        raise ValueError("need N >= 1 and nmax >= 0")
    table = GTable(N, nmax)
    for p in SOLVE_ORDER:
        table[p, 0] = QSeries.one(N)
    for n in range(1, nmax + 1):
        for p in SOLVE_ORDER:
            acc = QSeries.zero(N)
            self_shift = None
            for term in REDUCED_SYSTEM[p]:
                m = n - term.ypow
                if term.ypow == 0 and canonical(term.target) == p:
                    self_shift = term.shift
                    continue
                e = term.qpow + term.shift * m
                if e <= N:
                    acc = acc + table[term.target, m].shift(e).truncate(N)
            if self_shift is not None:
                # (1 - q^(s n)) g_p(n) = acc
                unit = QSeries.one(N) - QSeries.monomial(self_shift * n, 1, N)
                acc = mul(acc, inv(unit))
            table[p, n] = acc
    return table


def check_table(table: GTable, D: int | None = None, N: int | None = None) -> list[VerificationReport]:
    """Check that a table satisfies the unreduced G-equations for all five profiles."""
    N = table.order if N is None else N
    D = table.max_degree if D is None else D
    provider = table.provider()
    reports = []
    for p in CANONICAL_LEVEL4_RANK3:
        t0 = time.perf_counter()
        r = yeq_upto(gb_rhs(p, provider, N, D), provider[p], N, D)
        reports.append(r.renamed(f"funceq-table-{p}", (time.perf_counter() - t0) * 1000))
    return reports


def verify_gb(p: Profile, G: Provider, N: int, D: int, subject: str | None = None) -> VerificationReport:
    t0 = time.perf_counter()
    r = yeq_upto(gb_rhs(p, G, N, D), _lookup(G, p, exact=True).truncate(N, D), N, D)
    return r.renamed(subject or f"funceq-gb-{p}", (time.perf_counter() - t0) * 1000)


def verify_inex(p: Profile, F: Provider, N: int, D: int, subject: str | None = None) -> VerificationReport:
    t0 = time.perf_counter()
    r = yeq_upto(inex_rhs(p, F, N, D), _lookup(F, p, exact=True).truncate(N, D), N, D)
    return r.renamed(subject or f"funceq-inex-{p}", (time.perf_counter() - t0) * 1000)

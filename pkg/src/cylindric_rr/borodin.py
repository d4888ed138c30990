"""Borodin's product formula for the weight generating function F_c(q).

With t = k + l and d(i, j) = c_i + ... + c_j (zero when i > j),

    F_c(q) = 1/(q^t; q^t)_inf
             * prod_{1<=i<=j<=k} prod_{m=1}^{c_i} 1/(q^{m + d(i+1,j) + j - i}; q^t)_inf
             * prod_{2<=j<=i<=k} prod_{m=1}^{c_i} 1/(q^{t - (m + d(j,i-1) + i - j)}; q^t)_inf

The commonly printed form restricts the first product to j > i and the
second to j < i; those ranges drop the diagonal factors and disagree with
enumeration (e.g. they give no q^1 term for profile (2,1,1)), so the
diagonal is included here.  ``printed_exponents`` keeps the literal reading
for comparison.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .cylindric import Profile
from .series import INFINITY, QSeries, mul, poch_inv, qfactorial_inv


@dataclass(frozen=True)
class ProductSpec:
    """Exponent multiset of a product of 1/(q^e; q^t)_inf factors.

    The standalone 1/(q^t; q^t)_inf factor is implicit.
    """

    modulus: int
    exponents: tuple[tuple[int, int], ...]  # (exponent, multiplicity), sorted

    def __post_init__(self):
        for e, mult in self.exponents:
            if not 1 <= e <= self.modulus - 1:
                raise ValueError(f"exponent {e} outside [1, {self.modulus - 1}]")
            if mult < 1:
                raise ValueError(f"multiplicity of {e} must be positive")

    @classmethod
    def from_list(cls, modulus: int, exps) -> "ProductSpec":
        return cls(modulus, tuple(sorted(Counter(exps).items())))

    def as_list(self) -> list[int]:
        return [e for e, mult in self.exponents for _ in range(mult)]

    def series(self, N: int) -> QSeries:
        t = self.modulus
        out = poch_inv(t, t, INFINITY, N)
        for e, mult in self.exponents:
            for _ in range(mult):
                out = mul(out, poch_inv(e, t, INFINITY, N))
        return out


def dsum(p: Profile, i: int, j: int) -> int:
    """c_i + ... + c_j with 1-based indices; 0 when i > j."""
    k = p.rank
    if not (1 <= i <= k and 1 <= j <= k):
        raise IndexError(f"dsum indices ({i}, {j}) out of range for rank {k}")
    return _d(p, i, j)


def _d(p: Profile, i: int, j: int) -> int:
    # i = k+1 occurs as d(i+1, j) with i = k; it is always an empty sum
    return sum(p.parts[i - 1 : j]) if i <= j else 0


def _first_family(p: Profile, diagonal: bool):
    k = p.rank
    for i in range(1, k + 1):
        for j in range(i if diagonal else i + 1, k + 1):
            for m in range(1, p[i] + 1):
                yield m + _d(p, i + 1, j) + j - i


def _second_family(p: Profile, diagonal: bool):
    k, t = p.rank, p.modulus
    for i in range(2, k + 1):
        for j in range(2, (i + 1) if diagonal else i):
            for m in range(1, p[i] + 1):
                yield t - (m + _d(p, j, i - 1) + i - j)


def first_family(p: Profile) -> list[int]:
    return list(_first_family(p, True))


def second_family(p: Profile) -> list[int]:
    return list(_second_family(p, True))


def exponents(p: Profile) -> ProductSpec:
    if p.level < 1:
        raise ValueError("the product formula needs level >= 1")
    return ProductSpec.from_list(p.modulus, first_family(p) + second_family(p))


def printed_exponents(p: Profile) -> list[int]:
    """Exponents under the literal j > i / j < i index ranges (not used for evaluation)."""
    return sorted(list(_first_family(p, False)) + list(_second_family(p, False)))


def product_series(p: Profile, N: int) -> QSeries:
    """F_c(q) from the product formula, truncated at q^N."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    return exponents(p).series(N)


# Explicit level-4 rank-3 products: F_c(q) = 1/((q;q)_inf * prod 1/(q^e;q^7)_inf).
COROLLARY_EXPONENTS: dict[Profile, tuple[int, ...]] = {
    Profile((4, 0, 0)): (2, 3, 3, 4, 4, 5),
    Profile((3, 1, 0)): (1, 2, 3, 4, 5, 6),
    Profile((3, 0, 1)): (1, 2, 3, 4, 5, 6),
    Profile((2, 2, 0)): (1, 2, 2, 5, 5, 6),
    Profile((2, 1, 1)): (1, 1, 3, 4, 6, 6),
}


def corollary_series(p: Profile, N: int) -> QSeries:
    """The explicit level-4 product for canonical ``p``, built from its exponent list."""
    try:
        exps = COROLLARY_EXPONENTS[p]
    except KeyError:
        raise KeyError(f"no explicit product recorded for profile {p}") from None
    out = qfactorial_inv(N, N)  # 1/(q;q)_inf to order N
    for e in exps:
        out = mul(out, poch_inv(e, 7, INFINITY, N))
    return out

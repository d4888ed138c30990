"""Profiles, cylindric partitions and a brute-force enumeration oracle.

Rows of a cylindric partition are stored as tuples of positive integers
without trailing zeros; an entry past the end of a row reads as 0.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .series import QSeries, YSeries


@dataclass(frozen=True, order=True)
class Profile:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(c) for c in self.parts)
        if not parts:
            raise ValueError("a profile needs at least one part")
        if any(c < 0 for c in parts):
            raise ValueError(f"profile parts must be nonnegative: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Profile":
        """Parse ``"2,1,1"`` (parentheses and spaces tolerated)."""
        body = text.strip().strip("()").replace(" ", "")
        if not body:
            raise ValueError("empty profile")
        try:
            return cls(tuple(int(x) for x in body.split(",")))
        except ValueError as exc:
            raise ValueError(f"malformed profile {text!r}: {exc}") from None

    @property
    def level(self) -> int:
        return sum(self.parts)

    @property
    def rank(self) -> int:
        return len(self.parts)

    @property
    def modulus(self) -> int:
        return self.rank + self.level

    def __getitem__(self, i: int) -> int:
        """1-based access to c_i, cyclic so that c_0 == c_k."""
        return self.parts[(i - 1) % self.rank]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def P(*parts: int) -> Profile:
    return Profile(parts)


def rotate(p: Profile) -> Profile:
    """(c_1, ..., c_k) -> (c_k, c_1, ..., c_{k-1})."""
    return Profile(p.parts[-1:] + p.parts[:-1])


def canonical(p: Profile) -> Profile:
    """Lexicographically largest rotation."""
    best = p
    q = p
    for _ in range(p.rank - 1):
        q = rotate(q)
        if q.parts > best.parts:
            best = q
    return best


def compositions(level: int, rank: int) -> list[Profile]:
    """All compositions of ``level`` into ``rank`` nonnegative parts, lex-descending."""
    out = []
    for cuts in itertools.combinations_with_replacement(range(level + 1), rank - 1):
        bounds = (0,) + cuts + (level,)
        out.append(Profile(tuple(bounds[i + 1] - bounds[i] for i in range(rank))))
    return sorted(out, reverse=True)


CANONICAL_LEVEL4_RANK3 = tuple(
    Profile(c) for c in ((4, 0, 0), (3, 1, 0), (3, 0, 1), (2, 2, 0), (2, 1, 1))
)


@dataclass(frozen=True, order=True)
class CylindricPartition:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = []
        for row in self.rows:
            r = [int(x) for x in row]
            while r and r[-1] == 0:
                r.pop()
            if any(x <= 0 for x in r):
                raise ValueError(f"row {row} has non-positive entries before its tail")
            if any(r[i] < r[i + 1] for i in range(len(r) - 1)):
                raise ValueError(f"row {row} is not weakly decreasing")
            rows.append(tuple(r))
        object.__setattr__(self, "rows", tuple(rows))

    @classmethod
    def empty(cls, k: int) -> "CylindricPartition":
        return cls(((),) * k)

    @classmethod
    def parse(cls, text: str) -> "CylindricPartition":
        rows = []
        for chunk in text.split("|"):
            body = chunk.strip().strip("()").replace(" ", "")
            rows.append(tuple(int(x) for x in body.split(",")) if body else ())
        return cls(tuple(rows))

    @property
    def weight(self) -> int:
        return sum(sum(r) for r in self.rows)

    @property
    def maxpart(self) -> int:
        return max((r[0] for r in self.rows if r), default=0)

    def __str__(self) -> str:
        return "|".join("(" + ",".join(map(str, r)) + ")" for r in self.rows)


def weight(lam: CylindricPartition) -> int:
    return lam.weight


def maxpart(lam: CylindricPartition) -> int:
    return lam.maxpart


def _entry(row: tuple[int, ...], j: int) -> int:
    return row[j] if 0 <= j < len(row) else 0


def _interlaces(upper: tuple[int, ...], lower: tuple[int, ...], shift: int) -> bool:
    # upper_j >= lower_{j+shift} for all j >= 1
    for j in range(len(lower) - shift):
        if lower[j + shift] > _entry(upper, j):
            return False
    return True


def validate(p: Profile, lam: CylindricPartition) -> bool:
    """Check the cyclic interlacing conditions of profile ``p``."""
    k = p.rank
    if len(lam.rows) != k:
        raise ValueError(f"profile {p} has rank {k} but partition has {len(lam.rows)} rows")
    for i in range(k):
        nxt = (i + 1) % k
        if not _interlaces(lam.rows[i], lam.rows[nxt], p.parts[nxt]):
            return False
    return True


def _bounded_partitions(budget: int, cap, pos: int = 0, prev: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions with weight <= budget whose entry at ``pos`` is <= cap(pos)."""
    yield ()
    hi = min(budget, cap(pos))
    if prev is not None:
        hi = min(hi, prev)
    for v in range(hi, 0, -1):
        for rest in _bounded_partitions(budget - v, cap, pos + 1, v):
            yield (v,) + rest


def _enumerate(parts: tuple[int, ...], M: int, n: Optional[int]) -> tuple[CylindricPartition, ...]:
    p = Profile(parts)
    k = p.rank
    top = M if n is None else min(M, n)
    found: list[CylindricPartition] = []

    def extend(rows: list[tuple[int, ...]], budget: int) -> None:
        i = len(rows)
        if i == k:
            lam = CylindricPartition(tuple(rows))
            if validate(p, lam):
                found.append(lam)
            return
        if i == 0:
            cap = lambda pos: top
        else:
            above, shift = rows[-1], parts[i]
            cap = lambda pos: top if pos < shift else _entry(above, pos - shift)
        for row in _bounded_partitions(budget, cap):
            extend(rows + [row], budget - sum(row))

    extend([], M)
    found.sort(key=lambda lam: (lam.weight, lam.rows))
    return tuple(found)


_enumerate_cached = lru_cache(maxsize=256)(_enumerate)


def enumerate_partitions(p: Profile, M: int, n: Optional[int] = None) -> list[CylindricPartition]:
    """All cylindric partitions of profile ``p`` with weight <= M (and max entry <= n).

    Ordered by weight, then lexicographically by rows.
    """
    if M < 0:
        raise ValueError("max weight must be nonnegative")
    if n is not None and n < 0:
        raise ValueError("max entry must be nonnegative")
    return list(_enumerate_cached(p.parts, M, n))


def oracle_F(p: Profile, M: int) -> QSeries:
    """Weight generating function of profile ``p``, truncated at q^M."""
    counts = [0] * (M + 1)
    for lam in enumerate_partitions(p, M):
        counts[lam.weight] += 1
    return QSeries(counts, M)


def oracle_F_n(p: Profile, n: int, M: int) -> QSeries:
    """Same, restricted to largest entry <= n."""
    counts = [0] * (M + 1)
    for lam in enumerate_partitions(p, M, n):
        counts[lam.weight] += 1
    return QSeries(counts, M)


def oracle_F_y(p: Profile, M: int) -> YSeries:
    """Bivariate version: y marks the largest entry, y-degree M."""
    table = [[0] * (M + 1) for _ in range(M + 1)]
    for lam in enumerate_partitions(p, M):
        table[lam.maxpart][lam.weight] += 1
    return YSeries([QSeries(row, M) for row in table], M)

"""Exact truncated power series in q, and polynomials in y over them.

A :class:`QSeries` is either *truncated* (it knows its coefficients for
exponents ``0..order`` and nothing beyond) or an *exact polynomial*
(``order is None``; every coefficient is known, all but finitely many are
zero).  Gaussian binomials are exact; anything built from an infinite
product is truncated.  Binary operations keep the smaller of the two
orders, with an exact operand counting as infinitely precise.

A :class:`YSeries` is a polynomial in y of bounded degree whose
coefficients are truncated q-series sharing one order.  It carries the
bivariate generating functions of cylindric partitions, where y marks the
largest entry.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

INFINITY = math.inf

Order = Optional[int]


def _min_order(a: Order, b: Order) -> Order:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class QSeries:
    """Power series in q with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[int] = (), order: Order = None):
        cs = [int(c) for c in coeffs]
        if order is None:
            while cs and cs[-1] == 0:
                cs.pop()
        else:
            if order < 0:
                raise ValueError(f"order must be nonnegative, got {order}")
            if len(cs) > order + 1:
                del cs[order + 1:]
            else:
                cs.extend([0] * (order + 1 - len(cs)))
        self.coeffs: tuple[int, ...] = tuple(cs)
        self.order: Order = order

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, order: Order = None) -> "QSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: Order = None) -> "QSeries":
        return cls((1,), order)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, order: Order = None) -> "QSeries":
        if exponent < 0:
            raise ValueError("negative exponent")
        if order is not None and exponent > order:
            return cls((), order)
        return cls([0] * exponent + [coeff], order)

    # inspection -----------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.order is None

    @property
    def degree(self) -> int:
        """Largest exponent with a nonzero stored coefficient (-1 for zero)."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def __getitem__(self, k: int) -> int:
        if k < 0:
            return 0
        if self.order is not None and k > self.order:
            raise IndexError(f"coefficient of q^{k} is beyond truncation order {self.order}")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def at_one(self) -> int:
        """Sum of the stored coefficients (value at q=1 of the truncation)."""
        return sum(self.coeffs)

    def truncate(self, order: int) -> "QSeries":
        if self.order is not None and order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        return QSeries(self.coeffs, order)

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        if k == 0:
            return self
        order = None if self.order is None else self.order + k
        return QSeries([0] * k + list(self.coeffs), order)

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        if isinstance(other, int):
            return QSeries((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries([c * other for c in self.coeffs], self.order)
        if isinstance(other, QSeries):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*q^{i}")
        body = " + ".join(terms) or "0"
        if self.order is None:
            return f"QSeries({body})"
        return f"QSeries({body} + O(q^{self.order + 1}))"


def add(a: QSeries, b: QSeries) -> QSeries:
    order = _min_order(a.order, b.order)
    n = max(len(a.coeffs), len(b.coeffs))
    if order is not None:
        n = min(n, order + 1)
    ac, bc = a.coeffs, b.coeffs
    out = [(ac[i] if i < len(ac) else 0) + (bc[i] if i < len(bc) else 0) for i in range(n)]
    return QSeries(out, order)


def mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product truncated to the smaller order."""
    order = _min_order(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    if not ac or not bc:
        return QSeries((), order)
    n = len(ac) + len(bc) - 1
    if order is not None:
        n = min(n, order + 1)
    out = [0] * n
    for i, x in enumerate(ac):
        if i >= n:
            break
        if not x:
            continue
        lim = min(len(bc), n - i)
        for j in range(lim):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return QSeries(out, order)


def inv(a: QSeries, order: Order = None) -> QSeries:
    """Multiplicative inverse in the truncated ring.

    ``order`` is required when ``a`` is an exact polynomial and may lower
    the order of a truncated one.
    """
    if order is None:
        order = a.order
    elif a.order is not None and order > a.order:
        raise ValueError(f"requested order {order} exceeds operand order {a.order}")
    if order is None:
        raise ValueError("an order is required to invert an exact polynomial")
    a0 = a[0]
    if a0 not in (1, -1):
        raise ZeroDivisionError(f"series with constant term {a0} is not invertible over the integers")
    ac = a.coeffs
    out = [0] * (order + 1)
    out[0] = a0
    for n in range(1, order + 1):
        s = 0
        for k in range(1, min(n, len(ac) - 1) + 1):
            if ac[k]:
                s += ac[k] * out[n - k]
        out[n] = -a0 * s
    return QSeries(out, order)


def mul_one_minus(a: QSeries, e: int) -> QSeries:
    """a * (1 - q^e), computed in one pass."""
    if e <= 0:
        raise ValueError("exponent must be positive")
    cs = list(a.coeffs)
    if a.order is None:
        cs.extend([0] * e)
    for i in range(len(cs) - 1, e - 1, -1):
        cs[i] -= cs[i - e]
    return QSeries(cs, a.order)


def div_one_minus(a: QSeries, e: int) -> QSeries:
    """a / (1 - q^e) for a truncated series; stride-e prefix sums."""
    if e <= 0:
        raise ValueError("exponent must be positive")
    if a.order is None:
        raise ValueError("dividing an exact polynomial by 1 - q^e needs a truncation order")
    cs = list(a.coeffs)
    for i in range(e, len(cs)):
        cs[i] += cs[i - e]
    return QSeries(cs, a.order)


def _factor_exponents(a: int, b: int, n, N: int):
    if a <= 0 or b <= 0:
        raise ValueError(f"Pochhammer base exponent and step must be positive, got a={a}, b={b}")
    if n != INFINITY and (not isinstance(n, int) or n < 0):
        raise ValueError(f"factor count must be a nonnegative integer or INFINITY, got {n!r}")
    i = 0
    while n == INFINITY or i < n:
        e = a + i * b
        if e > N:
            # remaining factors are 1 modulo q^(N+1)
            return
        yield e
        i += 1


def poch(a: int, b: int, n, N: int) -> QSeries:
    """(q^a; q^b)_n = prod_{i<n} (1 - q^(a+i*b)), truncated to order N."""
    out = QSeries.one(N)
    for e in _factor_exponents(a, b, n, N):
        out = mul_one_minus(out, e)
    return out


def poch_inv(a: int, b: int, n, N: int) -> QSeries:
    """1 / (q^a; q^b)_n truncated to order N."""
    out = QSeries.one(N)
    for e in _factor_exponents(a, b, n, N):
        out = div_one_minus(out, e)
    return out


@lru_cache(maxsize=None)
def qfactorial_inv(n: int, N: int) -> QSeries:
    """1 / (q;q)_n truncated to order N."""
    if n < 0:
        raise ValueError("(q;q)_n is undefined for negative n")
    if n == 0:
        return QSeries.one(N)
    return div_one_minus(qfactorial_inv(n - 1, N), n) if n <= N else qfactorial_inv(N, N)


@lru_cache(maxsize=None)
def _gaussian_row(n: int) -> tuple[QSeries, ...]:
    if n == 0:
        return (QSeries.one(),)
    prev = _gaussian_row(n - 1)
    row = [QSeries.one()]
    for k in range(1, n):
        # [n,k] = [n-1,k] + q^(n-k) [n-1,k-1]
        row.append(prev[k] + prev[k - 1].shift(n - k))
    row.append(QSeries.one())
    return tuple(row)


def gaussian(n: int, k: int) -> QSeries:
    """Gaussian binomial [n choose k]_q as an exact polynomial.

    Zero outside 0 <= k <= n (including negative n).
    """
    if n < 0 or k < 0 or k > n:
        return QSeries.zero()
    return _gaussian_row(n)[k]


# ---------------------------------------------------------------------------
# y-layer


class YSeries:
    """Polynomial in y, degree <= ydeg, with q-series coefficients of one order."""

    __slots__ = ("terms", "order")

    def __init__(self, terms: Sequence[QSeries], order: int):
        if not terms:
            raise ValueError("a YSeries needs at least the y^0 term")
        self.order = order
        self.terms: tuple[QSeries, ...] = tuple(
            t if t.order == order else t.truncate(order) for t in terms
        )

    @classmethod
    def constant(cls, value: QSeries | int, order: int, ydeg: int) -> "YSeries":
        if isinstance(value, int):
            value = QSeries((value,))
        zero = QSeries.zero(order)
        return cls([value.truncate(order)] + [zero] * ydeg, order)

    @property
    def ydeg(self) -> int:
        return len(self.terms) - 1

    def __getitem__(self, m: int) -> QSeries:
        if m < 0:
            raise IndexError(m)
        return self.terms[m]

    def truncate(self, order: int | None = None, ydeg: int | None = None) -> "YSeries":
        order = self.order if order is None else order
        ydeg = self.ydeg if ydeg is None else ydeg
        if ydeg > self.ydeg:
            raise ValueError(f"cannot raise y-degree {self.ydeg} to {ydeg}")
        return YSeries([t.truncate(order) for t in self.terms[: ydeg + 1]], order)

    def at_y_one(self) -> QSeries:
        """Set y=1: sum of all terms."""
        out = QSeries.zero(self.order)
        for t in self.terms:
            out = out + t
        return out

    def _check(self, other: "YSeries") -> tuple[int, int]:
        return min(self.order, other.order), min(self.ydeg, other.ydeg)

    def __add__(self, other: "YSeries") -> "YSeries":
        order, d = self._check(other)
        return YSeries([add(self.terms[m], other.terms[m]) for m in range(d + 1)], order)

    def __neg__(self) -> "YSeries":
        return YSeries([-t for t in self.terms], self.order)

    def __sub__(self, other: "YSeries") -> "YSeries":
        return self + (-other)

    def scale(self, c: QSeries | int) -> "YSeries":
        """Multiply every term by a q-series (or integer)."""
        return YSeries([t * c for t in self.terms], self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, YSeries):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.terms, self.order))

    def __repr__(self) -> str:
        return f"YSeries(order={self.order}, ydeg={self.ydeg}, terms={list(self.terms)!r})"


def ysubst(s: YSeries, j: int) -> YSeries:
    """Substitute y -> y q^j."""
    if j < 0:
        raise ValueError("negative shift")
    return YSeries([t.shift(j * m).truncate(s.order) for m, t in enumerate(s.terms)], s.order)


def ymul_poch(s: YSeries, m: int) -> YSeries:
    """Multiply by prod_{i=1}^{m} (1 - y q^i), dropping y-degrees above ydeg(s)."""
    if m < 0:
        raise ValueError("negative factor count")
    terms = list(s.terms)
    for i in range(1, m + 1):
        if i > s.order:
            break  # 1 - y q^i == 1 modulo q^(order+1)
        terms = [terms[0]] + [
            terms[d] - terms[d - 1].shift(i).truncate(s.order) for d in range(1, len(terms))
        ]
    return YSeries(terms, s.order)


def ymul_geom(s: YSeries, j: int) -> YSeries:
    """Multiply by 1 / (1 - y q^j) = sum_r y^r q^(j r)."""
    if j < 1:
        raise ValueError("geometric shift must be >= 1")
    out = [s.terms[0]]
    for d in range(1, len(s.terms)):
        out.append(s.terms[d] + out[-1].shift(j).truncate(s.order))
    return YSeries(out, s.order)


# ---------------------------------------------------------------------------
# comparison


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of comparing two series up to a truncation order."""

    subject: str
    order: int
    match: bool
    first_mismatch: Optional[int] = None
    elapsed_ms: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if self.match != (self.first_mismatch is None):
            raise ValueError("match must be true exactly when first_mismatch is absent")

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "order": self.order,
            "match": self.match,
            "first_mismatch": self.first_mismatch,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def renamed(self, subject: str, elapsed_ms: float | None = None) -> "VerificationReport":
        return VerificationReport(
            subject,
            self.order,
            self.match,
            self.first_mismatch,
            self.elapsed_ms if elapsed_ms is None else elapsed_ms,
        )


def _usable(s: Union[QSeries, YSeries], N: int) -> None:
    if s.order is not None and N > s.order:
        raise ValueError(f"comparison order {N} exceeds operand order {s.order}")


def eq_upto(a: QSeries, b: QSeries, N: int, subject: str = "") -> VerificationReport:
    """Compare coefficients 0..N of two q-series."""
    if N < 0:
        raise ValueError("comparison order must be nonnegative")
    _usable(a, N)
    _usable(b, N)
    for k in range(N + 1):
        if a[k] != b[k]:
            return VerificationReport(subject, N, False, k)
    return VerificationReport(subject, N, True)


def yeq_upto(a: YSeries, b: YSeries, N: int, D: int, subject: str = "") -> VerificationReport:
    """Compare two y-series up to q-order N and y-degree D.

    On failure ``first_mismatch`` is the smallest q-exponent at which any
    y-degree differs.
    """
    _usable(a, N)
    _usable(b, N)
    if D > a.ydeg or D > b.ydeg:
        raise ValueError(f"comparison y-degree {D} exceeds an operand's y-degree")
    worst = None
    for m in range(D + 1):
        r = eq_upto(a.terms[m], b.terms[m], N)
        if not r.match and (worst is None or r.first_mismatch < worst):
            worst = r.first_mismatch
    return VerificationReport(subject, N, worst is None, worst)

"""Truncated formal power series over the integers.

Everything downstream works with elements of Z[[q]] truncated at a fixed
order N, i.e. the coefficients of q^0 .. q^N.  Coefficients are plain
Python integers, so all arithmetic is exact at arbitrary precision.

The module also provides the standard q-Pochhammer building blocks:

    pochhammer(m, N)        (q)_m  = prod_{i=1..m} (1 - q^i)
    euler_power(e, N)       (q)_oo^e for any integer e
    cyclotomic_power(k, e, N)   (1 - q^k)^e for any integer e
    product_exponents(f, K)     exponents b_n with f = prod (1-q^n)^{b_n}
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator


class NotAUnit(ValueError):
    """Inversion requested for a series whose constant term is not +-1."""


class BadConstantTerm(ValueError):
    """Product-exponent extraction needs constant term exactly 1."""


class TruncSeries:
    """An integer power series known modulo q^(order+1).

    Instances are immutable and hashable.  Binary operations between
    series of different orders truncate to the smaller order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[int] = ()):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = list(coeffs)[: order + 1]
        cs.extend([0] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls(order, (1,))

    @classmethod
    def monomial(cls, order: int, k: int, c: int = 1) -> "TruncSeries":
        """c * q^k, or zero if k exceeds the order."""
        if k < 0:
            raise ValueError("monomial degree must be >= 0")
        cs = [0] * (order + 1)
        if k <= order:
            cs[k] = c
        return cls(order, cs)

    # ------------------------------------------------------------------
    # basics

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncSeries(order={self.order}, coeffs={list(self.coeffs)})"

    def truncate(self, order: int) -> "TruncSeries":
        """Restrict to a smaller (or equal) order."""
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(order, self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # ------------------------------------------------------------------
    # ring operations

    def _common_order(self, other: "TruncSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = self._common_order(other)
        return TruncSeries(n, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        n = self._common_order(other)
        return TruncSeries(n, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.order, (-a for a in self.coeffs))

    def scale(self, c: int) -> "TruncSeries":
        return TruncSeries(self.order, (c * a for a in self.coeffs))

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        n = self._common_order(other)
        out = [0] * (n + 1)
        fc, gc = self.coeffs, other.coeffs
        for i in range(min(len(fc) - 1, n) + 1):
            ci = fc[i]
            if ci == 0:
                continue
            for j in range(min(len(gc) - 1, n - i) + 1):
                if gc[j]:
                    out[i + j] += ci * gc[j]
        return TruncSeries(n, out)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by q^k."""
        if k < 0:
            raise ValueError("shift must be >= 0")
        return TruncSeries(self.order, (0,) * k + self.coeffs)

    def pow(self, e: int) -> "TruncSeries":
        """Integer power; negative exponents require a +-1 constant term."""
        if e < 0:
            return invert_unit(self).pow(-e)
        result = TruncSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # ------------------------------------------------------------------
    # serialization: decimal strings keep large coefficients JSON-safe

    def to_json(self) -> str:
        return json.dumps({"order": self.order, "coeffs": [str(c) for c in self.coeffs]})

    @classmethod
    def from_json(cls, text: str) -> "TruncSeries":
        data = json.loads(text)
        return cls(int(data["order"]), (int(c) for c in data["coeffs"]))


def invert_unit(f: TruncSeries) -> TruncSeries:
    """Multiplicative inverse of a series with constant term +-1."""
    c0 = f[0]
    if c0 not in (1, -1):
        raise NotAUnit(f"constant term {c0} is not invertible over Z")
    n = f.order
    out = [0] * (n + 1)
    out[0] = c0
    fc = f.coeffs
    for k in range(1, n + 1):
        s = 0
        for i in range(1, k + 1):
            if fc[i]:
                s += fc[i] * out[k - i]
        out[k] = -c0 * s
    return TruncSeries(n, out)


def pochhammer(m: int, order: int) -> TruncSeries:
    """(q)_m = prod_{i=1..m} (1 - q^i), truncated.  (q)_0 = 1."""
    if m < 0:
        raise ValueError("pochhammer index must be >= 0")
    out = [1] + [0] * order
    for i in range(1, min(m, order) + 1):
        # multiply in place by (1 - q^i)
        for k in range(order, i - 1, -1):
            out[k] -= out[k - i]
    return TruncSeries(order, out)


def euler_power(e: int, order: int) -> TruncSeries:
    """(q)_oo^e for integer e; the e = 1 case uses the pentagonal expansion."""
    euler = _euler_series(order)
    if e >= 0:
        return euler.pow(e)
    return invert_unit(euler).pow(-e)


def _euler_series(order: int) -> TruncSeries:
    # pentagonal number theorem: (q)_oo = sum_j (-1)^j q^{j(3j-1)/2}
    out = [0] * (order + 1)
    j = 0
    while True:
        hit = False
        for jj in (j, -j) if j else (0,):
            k = jj * (3 * jj - 1) // 2
            if k <= order:
                out[k] += (-1) ** (jj % 2)
                hit = True
        if not hit:
            break
        j += 1
    return TruncSeries(order, out)


def cyclotomic_power(k: int, e: int, order: int) -> TruncSeries:
    """(1 - q^k)^e for integers k >= 1 and e of either sign."""
    if k < 1:
        raise ValueError("cyclotomic index must be >= 1")
    base = TruncSeries.one(order) - TruncSeries.monomial(order, k)
    return base.pow(e)


def product_exponents(f: TruncSeries, upto: int) -> list[int]:
    """Exponents [b_1 .. b_upto] with f = prod_{n>=1} (1-q^n)^{b_n}.

    Determined inductively: after dividing out the factors already
    found, b_n is minus the coefficient of q^n in the remainder.
    Requires constant term 1 and upto <= f.order.
    """
    if f[0] != 1:
        raise BadConstantTerm(f"constant term {f[0]}, expected 1")
    if upto > f.order:
        raise ValueError("requested more exponents than the truncation order holds")
    rem = f
    exps: list[int] = []
    for n in range(1, upto + 1):
        b = -rem[n]
        exps.append(b)
        if b:
            rem = rem * cyclotomic_power(n, -b, f.order)
    return exps

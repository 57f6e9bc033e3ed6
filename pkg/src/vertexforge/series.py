"""Truncated exact power series: one q variable (QSeries) and several
descendent variables (DescSeries).

QSeries carries an explicit integer leading shift so that series graded by
q^chi with different chi-normalizations stay comparable.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial
from typing import Dict, List, Sequence, Tuple


class QSeries:
    """shift + exact coefficients of q^0..q^order (relative to the shift)."""

    __slots__ = ("order", "coeffs", "shift")

    def __init__(self, order: int, coeffs: Sequence[Fraction] | None = None, shift: int = 0):
        self.order = order
        self.shift = shift
        self.coeffs: List[Fraction] = [Fraction(0)] * (order + 1)
        if coeffs is not None:
            for n, c in enumerate(coeffs):
                if n <= order:
                    self.coeffs[n] = Fraction(c)

    @staticmethod
    def one(order: int) -> "QSeries":
        s = QSeries(order)
        s.coeffs[0] = Fraction(1)
        return s

    def copy(self) -> "QSeries":
        return QSeries(self.order, list(self.coeffs), self.shift)

    def add_term(self, n: int, c) -> None:
        """Accumulate c * q^(shift + n); silently drops beyond the order."""
        if 0 <= n <= self.order:
            self.coeffs[n] += c

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.normalized_pairs() == other.normalized_pairs()

    def normalized_pairs(self) -> Tuple[Tuple[int, Fraction], ...]:
        return tuple(
            (self.shift + n, c) for n, c in enumerate(self.coeffs) if c != 0
        )

    def __add__(self, other: "QSeries") -> "QSeries":
        lo = min(self.shift, other.shift)
        hi = min(self.shift + self.order, other.shift + other.order)
        out = QSeries(hi - lo, shift=lo)
        for n, c in enumerate(self.coeffs):
            if lo <= self.shift + n <= hi:
                out.coeffs[self.shift + n - lo] += c
        for n, c in enumerate(other.coeffs):
            if lo <= other.shift + n <= hi:
                out.coeffs[other.shift + n - lo] += c
        return out

    def __neg__(self) -> "QSeries":
        return QSeries(self.order, [-c for c in self.coeffs], self.shift)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return QSeries(self.order, [c * other for c in self.coeffs], self.shift)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = QSeries(order, shift=self.shift + other.shift)
        for i in range(min(self.order, order) + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(min(other.order, order - i) + 1):
                out.coeffs[i + j] += a * other.coeffs[j]
        return out

    __rmul__ = __mul__

    def truncate(self, order: int) -> "QSeries":
        return QSeries(min(order, self.order), self.coeffs[: order + 1], self.shift)

    def coeff_at(self, n: int) -> Fraction:
        """Coefficient of q^n (absolute grading, shift included)."""
        m = n - self.shift
        if 0 <= m <= self.order:
            return self.coeffs[m]
        return Fraction(0)

    def scale_sign(self, sign: int) -> "QSeries":
        """q -> sign*q, i.e. multiply coefficient of q^n by sign^n (absolute n)."""
        out = self.copy()
        for m in range(len(out.coeffs)):
            n = out.shift + m
            if sign == -1 and n % 2:
                out.coeffs[m] = -out.coeffs[m]
        return out

    def __repr__(self) -> str:
        bits = [f"({c})*q^{self.shift + n}" for n, c in enumerate(self.coeffs)]
        return " + ".join(bits) if bits else "0"

    def to_json(self) -> dict:
        return {
            "shift": self.shift,
            "order": self.order,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
        }


def align_up_to_shift(a: QSeries, b: QSeries) -> Tuple[bool, int | None]:
    """Is a = q^s * b for a single integer s?  Returns (ok, s)."""
    pa = a.normalized_pairs()
    pb = b.normalized_pairs()
    if not pa and not pb:
        return True, 0
    if not pa or not pb:
        return False, None
    s = pa[0][0] - pb[0][0]
    # compare only on the overlap both series actually cover
    lo_a, hi_a = a.shift, a.shift + a.order
    lo_b, hi_b = b.shift + s, b.shift + b.order + s
    lo, hi = max(lo_a, lo_b), min(hi_a, hi_b)
    for n in range(lo, hi + 1):
        if a.coeff_at(n) != b.coeff_at(n - s):
            return False, None
    return True, s


class DescSeries:
    """Truncated multivariate power series in the descendent variables.

    `orders[v]` is the per-variable truncation order; optional `total`
    truncates at total degree as well.
    """

    __slots__ = ("variables", "orders", "total", "coeffs")

    def __init__(
        self,
        variables: Sequence[str],
        orders: Sequence[int],
        total: int | None = None,
        coeffs: Dict[Tuple[int, ...], Fraction] | None = None,
    ):
        self.variables = tuple(variables)
        self.orders = tuple(orders)
        self.total = total
        self.coeffs: Dict[Tuple[int, ...], Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                if c != 0 and self._inside(e):
                    self.coeffs[tuple(e)] = Fraction(c)

    def _inside(self, e: Tuple[int, ...]) -> bool:
        if any(x > o for x, o in zip(e, self.orders)):
            return False
        if self.total is not None and sum(e) > self.total:
            return False
        return True

    @classmethod
    def const(cls, variables, orders, c, total=None) -> "DescSeries":
        out = cls(variables, orders, total)
        if c != 0:
            out.coeffs[(0,) * len(out.variables)] = Fraction(c)
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = DescSeries.const(self.variables, self.orders, other, self.total)
        if not isinstance(other, DescSeries):
            return NotImplemented
        return self.variables == other.variables and self.coeffs == other.coeffs

    def __add__(self, other) -> "DescSeries":
        if isinstance(other, (int, Fraction)):
            other = DescSeries.const(self.variables, self.orders, other, self.total)
        out = DescSeries(self.variables, self.orders, self.total, self.coeffs)
        for e, c in other.coeffs.items():
            if not out._inside(e):
                continue
            s = out.coeffs.get(e, Fraction(0)) + c
            if s:
                out.coeffs[e] = s
            else:
                out.coeffs.pop(e, None)
        return out

    __radd__ = __add__

    def __neg__(self) -> "DescSeries":
        return DescSeries(
            self.variables, self.orders, self.total,
            {e: -c for e, c in self.coeffs.items()},
        )

    def __sub__(self, other) -> "DescSeries":
        return self + (-other if isinstance(other, DescSeries) else -Fraction(other))

    def __mul__(self, other) -> "DescSeries":
        if isinstance(other, (int, Fraction)):
            return DescSeries(
                self.variables, self.orders, self.total,
                {e: c * other for e, c in self.coeffs.items()},
            )
        if not isinstance(other, DescSeries):
            return NotImplemented
        out = DescSeries(self.variables, self.orders, self.total)
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if not out._inside(e):
                    continue
                s = out.coeffs.get(e, Fraction(0)) + c1 * c2
                if s:
                    out.coeffs[e] = s
                else:
                    out.coeffs.pop(e, None)
        return out

    __rmul__ = __mul__

    def coeff(self, e: Tuple[int, ...]) -> Fraction:
        return self.coeffs.get(tuple(e), Fraction(0))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for e, c in sorted(self.coeffs.items()):
            mono = "*".join(f"{v}^{x}" for v, x in zip(self.variables, e) if x)
            bits.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "orders": list(self.orders),
            "coeffs": {
                ",".join(map(str, e)): f"{c.numerator}/{c.denominator}"
                for e, c in sorted(self.coeffs.items())
            },
        }


def exp_single(variables, orders, var: str, rate: Fraction, total=None) -> DescSeries:
    """e^{rate * var} truncated: sum_m rate^m var^m / m!."""
    out = DescSeries(variables, orders, total)
    idx = out.variables.index(var)
    top = orders[idx] if total is None else min(orders[idx], total)
    for m in range(top + 1):
        e = tuple(m if i == idx else 0 for i in range(len(out.variables)))
        out.coeffs[e] = Fraction(rate) ** m / factorial(m)
    if rate == 0:
        out.coeffs = {(0,) * len(out.variables): Fraction(1)}
    return out


def enumerate_exponents(orders: Sequence[int], total: int | None = None):
    for e in product(*(range(o + 1) for o in orders)):
        if total is None or sum(e) <= total:
            yield e

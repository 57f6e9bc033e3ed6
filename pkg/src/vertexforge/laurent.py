"""Exact multivariate Laurent polynomials in t1, t2, t3 and structured-
denominator characters num / prod(1 - t^d).

All coefficients are `fractions.Fraction`; no floating point anywhere.
Exponent triples are plain tuples (a, b, c) in Z^3.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple

Exponent = Tuple[int, int, int]

ZERO = Fraction(0)
ONE = Fraction(1)


class NonPolynomialCharacter(ValueError):
    """Raised when a character does not reduce to a Laurent polynomial."""


def _add_exp(e: Exponent, f: Exponent) -> Exponent:
    return (e[0] + f[0], e[1] + f[1], e[2] + f[2])


def _neg_exp(e: Exponent) -> Exponent:
    return (-e[0], -e[1], -e[2])


class LaurentPoly:
    """Finite map {(a,b,c): Fraction}, zero coefficients never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, Fraction] | None = None):
        self.terms: Dict[Exponent, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if c != 0:
                    self.terms[tuple(e)] = Fraction(c)

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def const(c) -> "LaurentPoly":
        return LaurentPoly({(0, 0, 0): Fraction(c)})

    @staticmethod
    def monomial(e: Exponent, c=1) -> "LaurentPoly":
        return LaurentPoly({tuple(e): Fraction(c)})

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly.const(1)

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = LaurentPoly()
        r.terms = out
        return r

    def __neg__(self) -> "LaurentPoly":
        r = LaurentPoly()
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPoly()
            r = LaurentPoly()
            q = Fraction(other)
            r.terms = {e: c * q for e, c in self.terms.items()}
            return r
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                s = out.get(e, ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        r = LaurentPoly()
        r.terms = out
        return r

    __rmul__ = __mul__

    def shift(self, e: Exponent) -> "LaurentPoly":
        """Multiply by the monomial t^e."""
        r = LaurentPoly()
        r.terms = {_add_exp(f, e): c for f, c in self.terms.items()}
        return r

    def bar(self) -> "LaurentPoly":
        """Involution t_i -> t_i^{-1} (negate all exponents)."""
        r = LaurentPoly()
        r.terms = {_neg_exp(e): c for e, c in self.terms.items()}
        return r

    def substitute_monomials(self, images: Iterable[Exponent]) -> "LaurentPoly":
        """Ring map t_i -> t^{images[i]} for i = 1, 2, 3."""
        im = [tuple(e) for e in images]
        out: Dict[Exponent, Fraction] = {}
        for (a, b, c), coeff in self.terms.items():
            e = (
                a * im[0][0] + b * im[1][0] + c * im[2][0],
                a * im[0][1] + b * im[1][1] + c * im[2][1],
                a * im[0][2] + b * im[1][2] + c * im[2][2],
            )
            s = out.get(e, ZERO) + coeff
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = LaurentPoly()
        r.terms = out
        return r

    def coeff(self, e: Exponent) -> Fraction:
        return self.terms.get(tuple(e), ZERO)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def min_lex(self) -> Exponent:
        return min(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, c in sorted(self.terms.items()):
            bits.append(f"{c}*t^{e}")
        return " + ".join(bits)

    def to_json(self) -> list:
        return [
            {"e": list(e), "c": f"{c.numerator}/{c.denominator}"}
            for e, c in sorted(self.terms.items())
        ]

    @staticmethod
    def from_json(data: list) -> "LaurentPoly":
        terms = {}
        for item in data:
            num, den = item["c"].split("/")
            terms[tuple(item["e"])] = Fraction(int(num), int(den))
        return LaurentPoly(terms)


def _lex_positive(d: Exponent) -> bool:
    for x in d:
        if x > 0:
            return True
        if x < 0:
            return False
    return False


def divide_one_minus(num: LaurentPoly, d: Exponent) -> LaurentPoly:
    """Exact quotient num / (1 - t^d) in the Laurent ring.

    Lexicographic leading-term elimination; raises NonPolynomialCharacter
    when the division leaves a remainder.
    """
    d = tuple(d)
    if d == (0, 0, 0):
        raise NonPolynomialCharacter("division by (1 - t^0) = 0")
    if num.is_zero():
        return LaurentPoly()
    if not _lex_positive(d):
        # (1 - t^d) = -t^d (1 - t^{-d})
        q = divide_one_minus(num, _neg_exp(d))
        return -q.shift(_neg_exp(d))
    # leading coordinate of d: first nonzero entry, necessarily positive
    axis = next(i for i in range(3) if d[i] != 0)
    floor = min(e[axis] for e in num.terms)
    rem = dict(num.terms)
    quot: Dict[Exponent, Fraction] = {}
    while rem:
        e = max(rem)
        c = rem.pop(e)
        qe = _add_exp(e, _neg_exp(d))
        if qe[axis] < floor:
            raise NonPolynomialCharacter(
                f"non-polynomial character: remainder survives division by (1 - t^{d})"
            )
        # quotient term -c * t^{e-d}; subtract (-c t^{e-d})(1 - t^d) from rem
        quot[qe] = quot.get(qe, ZERO) + (-c)
        s = rem.get(qe, ZERO) + c
        if s:
            rem[qe] = s
        else:
            rem.pop(qe, None)
    out = LaurentPoly()
    out.terms = {e: c for e, c in quot.items() if c}
    return out


class EquivariantCharacter:
    """num / prod_{d in den} (1 - t^d), den a multiset of exponent triples."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Iterable[Exponent] = ()):
        self.num = num
        self.den: Tuple[Exponent, ...] = tuple(sorted(tuple(d) for d in den))

    @staticmethod
    def from_poly(p: LaurentPoly) -> "EquivariantCharacter":
        return EquivariantCharacter(p, ())

    def den_poly(self) -> LaurentPoly:
        p = LaurentPoly.one()
        for d in self.den:
            p = p * (LaurentPoly.one() - LaurentPoly.monomial(d))
        return p

    def __add__(self, other: "EquivariantCharacter") -> "EquivariantCharacter":
        if not isinstance(other, EquivariantCharacter):
            return NotImplemented
        # common denominator: multiset union (cancel shared factors once)
        shared = []
        rest_a = list(self.den)
        rest_b = list(other.den)
        for d in list(rest_a):
            if d in rest_b:
                shared.append(d)
                rest_a.remove(d)
                rest_b.remove(d)
        num = self.num
        for d in rest_b:
            num = num * (LaurentPoly.one() - LaurentPoly.monomial(d))
        num2 = other.num
        for d in rest_a:
            num2 = num2 * (LaurentPoly.one() - LaurentPoly.monomial(d))
        return EquivariantCharacter(num + num2, shared + rest_a + rest_b)

    def __neg__(self) -> "EquivariantCharacter":
        return EquivariantCharacter(-self.num, self.den)

    def __sub__(self, other: "EquivariantCharacter") -> "EquivariantCharacter":
        return self + (-other)

    def __mul__(self, other) -> "EquivariantCharacter":
        if isinstance(other, (int, Fraction)):
            return EquivariantCharacter(self.num * other, self.den)
        if isinstance(other, LaurentPoly):
            return EquivariantCharacter(self.num * other, self.den)
        if not isinstance(other, EquivariantCharacter):
            return NotImplemented
        return EquivariantCharacter(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def shift(self, e: Exponent) -> "EquivariantCharacter":
        return EquivariantCharacter(self.num.shift(e), self.den)

    def bar(self) -> "EquivariantCharacter":
        return EquivariantCharacter(
            self.num.bar(), tuple(_neg_exp(d) for d in self.den)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, EquivariantCharacter):
            return NotImplemented
        # cross-multiplication
        return self.num * other.den_poly() == other.num * self.den_poly()

    def reduce(self) -> LaurentPoly:
        """Exact quotient as a finite LaurentPoly, factor by factor."""
        p = self.num
        for d in self.den:
            p = divide_one_minus(p, d)
        return p

    def __repr__(self) -> str:
        if not self.den:
            return repr(self.num)
        return f"({self.num!r}) / prod(1 - t^d for d in {list(self.den)})"


def reduce_char(c: EquivariantCharacter) -> LaurentPoly:
    """Module-level alias for EquivariantCharacter.reduce."""
    return c.reduce()


def pochhammer(x, n: int):
    """[x]_n = Gamma(x+n)/Gamma(x) for integer n.

    n >= 0: x(x+1)...(x+n-1); n < 0: 1/((x-1)(x-2)...(x-|n|)).
    Works for any field element supporting * and -.
    """
    if n >= 0:
        out = x - x + 1 if not isinstance(x, (int, Fraction)) else Fraction(1)
        for l in range(n):
            out = out * (x + l)
        return out
    denom = Fraction(1) if isinstance(x, (int, Fraction)) else x - x + 1
    for l in range(1, -n + 1):
        f = x - l
        if f == 0:
            raise ZeroDivisionError(f"pole at non-generic input: [x]_{n} with x - {l} = 0")
        denom = denom * f
    return 1 / denom


def exp_pleth_extended(p: LaurentPoly, t1: Fraction, t2: Fraction, t3: Fraction):
    """Plethystic exponential allowing a zero-weight monomial: returns
    (value, zero_order) where zero_order is the constant-monomial
    coefficient; the product is value * 0^zero_order (0 when positive,
    a pole when negative)."""
    zorder = p.coeff((0, 0, 0))
    if zorder.denominator != 1:
        raise ValueError("plethystic exponent requires integer coefficients")
    stripped = p + LaurentPoly.monomial((0, 0, 0), -zorder)
    return exp_pleth(stripped, t1, t2, t3), int(zorder)


def exp_pleth(p: LaurentPoly, t1: Fraction, t2: Fraction, t3: Fraction) -> Fraction:
    """Plethystic exponential: Exp(sum a_e t^e) = prod (e.t)^{a_e}.

    The linear form of exponent (i,j,k) is i*t1 + j*t2 + k*t3; requires
    integer coefficients and no constant monomial.
    """
    if p.coeff((0, 0, 0)) != 0:
        raise ValueError("zero-weight monomial: constant term in plethystic exponent")
    num = Fraction(1)
    den = Fraction(1)
    for (i, j, k), a in p.terms.items():
        if a.denominator != 1:
            raise ValueError("plethystic exponent requires integer coefficients")
        w = i * t1 + j * t2 + k * t3
        if w == 0:
            raise ValueError(
                f"sample genericity insufficient: weight {i}*t1+{j}*t2+{k}*t3 vanishes"
            )
        a = a.numerator
        if a > 0:
            num *= w**a
        else:
            den *= w ** (-a)
    return num / den

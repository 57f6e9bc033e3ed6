"""Generic rational samples of the equivariant parameters (t1, t2, t3).

A sample is generic at bound L when no linear form i*t1 + j*t2 + k*t3 with
|i|, |j|, |k| <= L (not all zero) vanishes.  The constrained mode pins the
sample to the line t1 + t2 = c*t3 and demands genericity among all relations
not implied by that line.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .laurent import LaurentPoly, exp_pleth

_RETRY_BUDGET = 200


@dataclass(frozen=True)
class ParamSample:
    t1: Fraction
    t2: Fraction
    t3: Fraction
    genericity_bound: int
    line: int | None = None  # c when constrained to t1 + t2 = c*t3

    @property
    def a1(self) -> Fraction:
        return self.t1 / self.t3

    @property
    def a2(self) -> Fraction:
        return self.t2 / self.t3

    def exp(self, p: LaurentPoly) -> Fraction:
        return exp_pleth(p, self.t1, self.t2, self.t3)

    def exp_extended(self, p: LaurentPoly):
        """(value, zero_order): the plethystic exponential as value * 0^order."""
        from .laurent import exp_pleth_extended

        return exp_pleth_extended(p, self.t1, self.t2, self.t3)

    def substituted(self, d1: int, d2: int) -> "ParamSample":
        """Parameters at the infinity vertex: s1=t1+d1*t3, s2=t2+d2*t3, s3=-t3."""
        return ParamSample(
            self.t1 + d1 * self.t3,
            self.t2 + d2 * self.t3,
            -self.t3,
            self.genericity_bound,
        )

    def to_json(self) -> dict:
        return {
            "t1": str(self.t1),
            "t2": str(self.t2),
            "t3": str(self.t3),
            "L": self.genericity_bound,
            "line": self.line,
        }


def _is_generic(t1: Fraction, t2: Fraction, t3: Fraction, L: int, line: int | None) -> bool:
    # clear denominators: integer triple (x1, x2, x3) with same vanishing locus
    den = t1.denominator * t2.denominator * t3.denominator
    x1 = int(t1 * den)
    x2 = int(t2 * den)
    x3 = int(t3 * den)
    rng = np.arange(-L, L + 1, dtype=np.int64)
    i, j, k = np.meshgrid(rng, rng, rng, indexing="ij", sparse=True)
    vals = i * x1 + j * x2 + k * x3
    zero = vals == 0
    if line is None:
        # only (0,0,0) may vanish
        return int(zero.sum()) == 1
    # on the line t1 + t2 = c*t3, exactly the multiples m*(1,1,-c) vanish
    ii, jj, kk = np.meshgrid(rng, rng, rng, indexing="ij")
    allowed = (ii == jj) & (kk == -line * jj)
    return bool(np.array_equal(zero, allowed))


def sample_random(seed: int, L: int, line: int | None = None) -> ParamSample:
    """Deterministic generic sample; heights >= 10^3 per the certification
    standard.  `line` = c constrains to t1 + t2 = c*t3.
    """
    if L < 1:
        raise ValueError("genericity bound must be >= 1")
    rng = random.Random(f"vertexforge:{seed}:{L}:{line}")

    def draw() -> Fraction:
        num = rng.randint(1000, 5000) * rng.choice((1, -1))
        den = rng.randint(1000, 5000)
        return Fraction(num, den)

    for _ in range(_RETRY_BUDGET):
        if line is None:
            t1, t2, t3 = draw(), draw(), draw()
        else:
            t1, t3 = draw(), draw()
            t2 = line * t3 - t1
        if t3 == 0 or t1 == 0 or t2 == 0:
            continue
        if _is_generic(t1, t2, t3, L, line):
            return ParamSample(t1, t2, t3, L, line)
    raise RuntimeError("sampling exhausted: no generic sample within retry budget")


def sample_triple(base_seed: int, L: int, line: int | None = None) -> list[ParamSample]:
    """Three independent generic samples from distinct seeds."""
    return [sample_random(base_seed + 101 * i, L, line) for i in range(3)]


def genericity_bound(max_coord: int, max_k: int, qorder: int) -> int:
    """Bound sufficient for every linear form met in a computation whose box
    coordinates, column depths and q-order are so limited."""
    return max_coord + max_k + qorder + 2

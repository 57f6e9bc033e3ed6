from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vertexforge.laurent import (
    EquivariantCharacter,
    LaurentPoly,
    NonPolynomialCharacter,
    divide_one_minus,
    exp_pleth,
    exp_pleth_extended,
    pochhammer,
    reduce_char,
)

T1, T2, T3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def mono(e, c=1):
    return LaurentPoly.monomial(e, c)


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(F(7, 3), 0) == 1

    def test_rising(self):
        # 2*3*4
        assert pochhammer(F(2), 3) == 24

    def test_negative(self):
        # 1/((5-1)(5-2))
        assert pochhammer(F(5), -2) == F(1, 12)

    def test_inverse_pair(self):
        x = F(9, 4)
        for n in (-3, -1, 0, 2, 5):
            assert pochhammer(x, n) * pochhammer(x + n, -n) == 1

    def test_pole(self):
        with pytest.raises(ZeroDivisionError):
            pochhammer(F(2), -3)

    @given(
        num=st.integers(-30, 30),
        den=st.integers(1, 9),
        m=st.integers(-4, 4),
        n=st.integers(-4, 4),
    )
    @settings(max_examples=60, deadline=None)
    def test_additivity(self, num, den, m, n):
        # [x]_{m+n} = [x]_m [x+m]_n wherever defined
        x = F(num, den) + F(1, 11)  # avoid integer gaps
        assert pochhammer(x, m + n) == pochhammer(x, m) * pochhammer(x + m, n)


class TestReduce:
    def test_geometric(self):
        num = LaurentPoly.one() - mono((0, 0, 2))
        c = EquivariantCharacter(num, [T3])
        assert reduce_char(c) == LaurentPoly.one() + mono(T3)

    def test_no_cancellation(self):
        c = EquivariantCharacter(LaurentPoly.one(), [T3])
        with pytest.raises(NonPolynomialCharacter):
            reduce_char(c)

    def test_exact_cancellation(self):
        num = (LaurentPoly.one() - mono(T1)) * (LaurentPoly.one() - mono(T3))
        c = EquivariantCharacter(num, [T3])
        assert reduce_char(c) == LaurentPoly.one() - mono(T1)

    def test_negative_direction(self):
        # (1 - t3^-2)/(1 - t3^-1) = 1 + t3^-1
        num = LaurentPoly.one() - mono((0, 0, -2))
        c = EquivariantCharacter(num, [(0, 0, -1)])
        assert reduce_char(c) == LaurentPoly.one() + mono((0, 0, -1))

    def test_multiplicative(self):
        a = EquivariantCharacter(LaurentPoly.one() - mono((0, 0, 2)), [T3])
        b = EquivariantCharacter(LaurentPoly.one() - mono((2, 0, 0)), [T1])
        assert reduce_char(a * b) == reduce_char(a) * reduce_char(b)

    def test_equality_cross_multiplication(self):
        a = EquivariantCharacter(LaurentPoly.one() - mono((0, 0, 2)), [T3])
        b = EquivariantCharacter.from_poly(LaurentPoly.one() + mono(T3))
        assert a == b


class TestExpPleth:
    T = (F(2), F(3), F(5))

    def test_empty(self):
        assert exp_pleth(LaurentPoly.zero(), *self.T) == 1

    def test_two_monomials(self):
        p = mono(T1) + mono(T2)
        assert exp_pleth(p, *self.T) == 6

    def test_negative_exponent(self):
        p = mono(T1, -1)
        assert exp_pleth(p, *self.T) == F(1, 2)

    def test_zero_weight_rejected(self):
        with pytest.raises(ValueError):
            exp_pleth(LaurentPoly.one(), *self.T)

    def test_extended(self):
        p = LaurentPoly({(0, 0, 0): F(2), (1, 0, 0): F(1)})
        val, z = exp_pleth_extended(p, *self.T)
        assert (val, z) == (F(2), 2)

    def test_homomorphism(self):
        p = mono(T1) + mono((1, 2, 0), 2)
        q = mono((0, -1, 1)) - mono(T1)
        lhs = exp_pleth(p + q, *self.T)
        assert lhs == exp_pleth(p, *self.T) * exp_pleth(q, *self.T)


small_poly = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)),
    st.fractions(min_value=-5, max_value=5, max_denominator=7),
    max_size=4,
)


class TestRingAxioms:
    @given(a=small_poly, b=small_poly, c=small_poly)
    @settings(max_examples=40, deadline=None)
    def test_laurent_ring(self, a, b, c):
        pa, pb, pc = LaurentPoly(a), LaurentPoly(b), LaurentPoly(c)
        assert (pa + pb) + pc == pa + (pb + pc)
        assert pa * pb == pb * pa
        assert pa * (pb + pc) == pa * pb + pa * pc
        assert (pa * pb) * pc == pa * (pb * pc)

    @given(a=small_poly)
    @settings(max_examples=20, deadline=None)
    def test_bar_involution(self, a):
        p = LaurentPoly(a)
        assert p.bar().bar() == p

    @given(a=small_poly, b=small_poly)
    @settings(max_examples=20, deadline=None)
    def test_bar_multiplicative(self, a, b):
        pa, pb = LaurentPoly(a), LaurentPoly(b)
        assert (pa * pb).bar() == pa.bar() * pb.bar()


def test_divide_one_minus_roundtrip():
    q = LaurentPoly({(1, 0, -1): F(3), (0, 2, 0): F(-1, 2), (-1, 0, 0): F(5)})
    for d in [(0, 0, 1), (1, -1, 0), (0, 0, -2)]:
        num = q * (LaurentPoly.one() - mono(d))
        assert divide_one_minus(num, d) == q


def test_serialization_roundtrip():
    p = LaurentPoly({(1, -2, 3): F(5, 7), (0, 0, -1): F(-2)})
    assert LaurentPoly.from_json(p.to_json()) == p

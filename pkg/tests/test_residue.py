from fractions import Fraction as F
from itertools import product

import pytest

from vertexforge.characters import DescendentSpec
from vertexforge.laurent import pochhammer
from vertexforge.partitions import Partition, enum_partitions
from vertexforge.residue import (
    LinForm,
    RationalFactor,
    Term,
    egl_localization,
    egl_residue,
    iterated_residue,
    measure_ratio_closed,
    measure_ratio_extended,
    omega_kernel,
    pt_residue_vertex,
    residue_sum,
    zp_const,
    zp_linform,
    zp_mul,
)
from vertexforge.sampling import sample_random
from vertexforge.vertex import bare_pt

S = sample_random(3, 16)


def lf(n, d=None, big=0, small=0):
    return LinForm.make(n, d or {}, big, small)


class TestWindowEngine:
    def test_constant(self):
        assert iterated_residue([RationalFactor.of_poly(zp_const(2, F(5)))], 2) == 5

    def test_pure_power_vanishes(self):
        p = {(3, 0): F(1)}
        assert iterated_residue([RationalFactor.of_poly(p)], 2) == 0

    def test_ratio_extraction(self):
        # z2/z1 has no constant term; (z2/z1)^0 = 1 does
        assert iterated_residue([RationalFactor.of_poly({(-1, 1): F(1)})], 2) == 0
        assert iterated_residue([RationalFactor.of_poly({(0, 0): F(1)})], 2) == 1

    def test_omega_constant_term(self):
        # omega(z) = (1 - (a1+a2)/z)/((1 - a1/z)(1 - a2/z)) -> 1 at infinity
        fac = omega_kernel(2, S)
        assert iterated_residue(fac, 2) == 1

    def test_omega_product_both_orientations(self):
        # omega(z) * omega(-z): zero coefficient is 1
        a1, a2 = S.a1, S.a2
        n = 1
        num = {}
        for sgn in (1, -1):
            w = lf(n, {0: F(sgn)})
            p = zp_mul(zp_linform(n, w), zp_linform(n, LinForm(w.coeffs, w.big, -a1 - a2)))
            num = zp_mul(num, p) if num else p
        factors = [RationalFactor.of_poly(num)]
        for sgn in (1, -1):
            for c in (a1, a2):
                # 1/(sgn z - c) = sgn/(z - sgn c)
                factors.append(RationalFactor("inv_lin", i=0, c=sgn * c))
        val = iterated_residue(factors, 1)
        assert val == 1


class TestPoleEngine:
    def test_order_guard(self):
        # f = 1/((z1 - z2) z2): forward ordering gives 1, reversed gives 0
        t_fwd = Term(zp_const(2, F(1)), ((lf(2, {0: F(1), 1: F(-1)}), 1), (lf(2, {1: F(1)}), 1)))
        assert residue_sum([t_fwd], 2, "full") == 1
        t_rev = Term(zp_const(2, F(1)), ((lf(2, {1: F(1), 0: F(-1)}), 1), (lf(2, {0: F(1)}), 1)))
        assert residue_sum([t_rev], 2, "full") == 0

    def test_simple_pole(self):
        # 1/((z - c) z): residue at z = 0 alone gives -1/c; the full region
        # adds the residue at z = c and the total vanishes
        c = F(7, 3)
        t = Term(zp_const(1, F(1)), ((lf(1, {0: F(1)}, big=-c), 1), (lf(1, {0: F(1)}), 1)))
        assert residue_sum([t], 1, "inner") == -F(1) / c
        assert residue_sum([t], 1, "full") == 0

    def test_double_pole(self):
        # z^2 / (z - c)^2 * (1/z): full region: finite poles 0 and c (double)
        c = F(2, 5)
        t = Term({(2,): F(1)}, ((lf(1, {0: F(1)}, small=-c), 2), (lf(1, {0: F(1)}), 1)))
        # expansion at infinity: z/(z-c)^2 = sum_{m>=1} m c^{m-1} z^{-m}: [z^0] = 0... with z^2/z
        assert residue_sum([t], 1, "full") == 1  # d/dz [z^2/z] at c gives 1

    def test_window_matches_pole_on_egl(self):
        for n in (1, 2):
            w = egl_residue(n, [2], S, engine="window")
            p = egl_residue(n, [2], S, engine="pole")
            assert w == p


class TestEGL:
    def test_identity_small(self):
        for n in (1, 2, 3):
            a = egl_localization(n, [2, 2], S, total=3)
            b = egl_residue(n, [2, 2], S, total=3)
            assert a == b

    def test_n1_value(self):
        a = egl_localization(1, [1], S)
        assert a.coeff((0,)) == 1 / (S.t1 * S.t2)
        assert a.coeff((1,)) == 0  # content of the single cell is 0


class TestMainPT:
    def test_vertex_matches_localization(self):
        desc = (DescendentSpec("ch", 0, "u", 3),)
        for parts in ([1], [2], [1, 1]):
            lam = Partition(parts)
            loc = bare_pt(("chern", lam), 2, desc, S)
            res = pt_residue_vertex(lam, 2, desc, S)
            assert all(a == b for a, b in zip(loc.coeffs, res))

    def test_fixedpoint_basis(self):
        lam = Partition([1, 1])
        loc = bare_pt(("fixedpoint", lam), 2, (), S)
        res = pt_residue_vertex(lam, 2, (), S, basis="interp")
        assert all(a == b for a, b in zip(loc.coeffs, res))

    def test_k_zero_weight_is_one(self):
        # Pi(0, z) = 1: the q^0 term is the tautological integral
        lam = Partition([1])
        res = pt_residue_vertex(lam, 0, (), S)
        assert res[0].coeff(()) == 0  # c_(1) pairs to the zero content sum


class TestMeasureRatioClosed:
    def test_k_zero(self):
        for mu in enum_partitions(2):
            assert measure_ratio_closed(mu, {}, S) == 1

    def test_hand_instance(self):
        # single column, depth k: [a1+1]_k [a2+1]_k / ([a1-k+1]_k [a2-k+1]_k)
        a1, a2 = S.a1, S.a2
        for k in (1, 2, 3):
            expect = (
                pochhammer(a1 + 1, k)
                * pochhammer(a2 + 1, k)
                / (pochhammer(a1 - k + 1, k) * pochhammer(a2 - k + 1, k))
            )
            assert measure_ratio_closed(Partition([1]), {(0, 0): k}, S) == expect

    def test_transpose_symmetry(self):
        from vertexforge.sampling import ParamSample

        mu = Partition([2])
        kv = {(0, 0): 1, (0, 1): 2}
        swapped = ParamSample(S.t2, S.t1, S.t3, S.genericity_bound)
        kvt = {(0, 0): 1, (1, 0): 2}
        assert measure_ratio_closed(mu, kv, S) == measure_ratio_closed(
            mu.transpose(), kvt, swapped
        )

    def test_vanishing_direction(self):
        # increasing columns are invalid ideal-sheaf data: ratio vanishes
        _, z = measure_ratio_extended(Partition([1, 1]), {(0, 0): 0, (1, 0): 2}, S)
        assert z > 0

from fractions import Fraction as F

from vertexforge.characters import DescendentSpec, euler_hilb
from vertexforge.partitions import LeggedPlanePartition, Partition, enum_partitions
from vertexforge.sampling import sample_random
from vertexforge.vertex import (
    bare_dt,
    bare_pt,
    chern_monomial_value,
    dt0_slice,
    specialization_poly_check,
)
from vertexforge.characters import dt_weight, pt_weight
from vertexforge.partitions import enum_rpp

S = sample_random(4, 16)


class TestChernMonomial:
    def test_empty(self):
        assert chern_monomial_value(Partition(), Partition([2, 1]), S) == 1

    def test_first_chern(self):
        assert chern_monomial_value(Partition([1]), Partition([2]), S) == S.t2

    def test_top_vanishes(self):
        # contents contain 0, so the top elementary symmetric vanishes
        assert chern_monomial_value(Partition([2]), Partition([1, 1]), S) == 0


class TestBarePT:
    def test_q0_fixed_point(self):
        lam = Partition([2])
        res = bare_pt(("fixedpoint", lam), 1, (), S)
        assert res.coeffs[0].coeff(()) == 1 / euler_hilb(lam, S)

    def test_q0_single_cell(self):
        cfg0 = enum_rpp(Partition([1]), 0)[0]
        res = bare_pt(("fixedpoint", Partition([1])), 0, (), S)
        assert res.coeffs[0].coeff(()) == pt_weight(cfg0, S) / euler_hilb(Partition([1]), S)

    def test_chern_is_weighted_sum_of_fixed_points(self):
        nu = Partition([1, 1])
        n = nu.size
        qorder = 2
        total = bare_pt(("chern", nu), qorder, (), S)
        acc = [F(0)] * (qorder + 1)
        for mu in enum_partitions(n):
            c = chern_monomial_value(nu, mu, S)
            if c == 0:
                continue
            part = bare_pt(("fixedpoint", mu), qorder, (), S)
            for m in range(qorder + 1):
                acc[m] += c * part.coeffs[m].coeff(())
        assert [c.coeff(()) for c in total.coeffs] == acc


class TestBareDT:
    def test_q0_is_one(self):
        res = bare_dt(Partition(), 2, (), S)
        assert res.coeffs[0].coeff(()) == 1

    def test_q1_single_box(self):
        res = bare_dt(Partition(), 1, (), S)
        box = LeggedPlanePartition(Partition(), {(0, 0): 1})
        assert res.coeffs[1].coeff(()) == dt_weight(box, S)

    def test_legged_q0_is_one(self):
        res = bare_dt(Partition([2, 1]), 1, (), S)
        assert res.coeffs[0].coeff(()) == 1


class TestDt0Slice:
    def test_empty_slice(self):
        res = dt0_slice(Partition(), (), S, 2)
        assert [c.coeff(()) for c in res.coeffs] == [1, 0, 0]

    def test_single_box_slice(self):
        res = dt0_slice(Partition([1]), (), S, 1)
        box = LeggedPlanePartition(Partition(), {(0, 0): 1})
        assert res.coeffs[0].coeff(()) == 0
        assert res.coeffs[1].coeff(()) == dt_weight(box, S)

    def test_slices_partition_the_vertex(self):
        qorder = 3
        total = bare_dt(Partition(), qorder, (), S)
        acc = [F(0)] * (qorder + 1)
        for n in range(qorder + 1):
            for mu in enum_partitions(n):
                part = dt0_slice(mu, (), S, qorder)
                for m in range(qorder + 1):
                    acc[m] += part.coeffs[m].coeff(())
        assert [c.coeff(()) for c in total.coeffs] == acc


class TestSpecializationCheck:
    def test_line_polynomial(self):
        sline = sample_random(5, 14, line=1)
        rep = specialization_poly_check(Partition([1]), 1, (), list(range(7)), 4, sline)
        assert rep.holdout_ok and rep.verdict == "polynomial"

    def test_degree_grows_with_descendent_order(self):
        sline = sample_random(5, 16, line=2)
        degs = []
        for uorder in (1, 2, 3):
            desc = (DescendentSpec("ch", 0, "u", uorder),)
            rep = specialization_poly_check(
                Partition([1]), 2, desc, list(range(8)), 5, sline, desc_exp=(uorder,)
            )
            assert rep.holdout_ok
            degs.append(rep.fit_degree)
        assert degs == sorted(degs) and degs[-1] > degs[0]

    def test_control(self):
        s = sample_random(6, 14)
        rep = specialization_poly_check(
            Partition([1]), None, (DescendentSpec("ch", 0, "u", 2),),
            list(range(7)), 4, s, region="inner", desc_exp=(2,), basis="interp",
        )
        assert rep.verdict == "non-polynomial"

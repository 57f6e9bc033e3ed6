from fractions import Fraction as F

import pytest

from vertexforge.characters import DescendentSpec, dt_weight, edge_factor, euler_hilb
from vertexforge.localcurve import (
    GlueRequest,
    InterpPoly,
    SingularInterpolation,
    dt0_localcurve,
    glue,
    interp_poly,
    ptint_residue,
)
from vertexforge.partitions import LeggedPlanePartition, Partition, enum_partitions
from vertexforge.sampling import sample_random
from vertexforge.vertex import bare_pt, contents_at

S = sample_random(8, 18)


def scalars(coeffs):
    return [
        c.coeff(()) if not c.variables else c.coeff((0,) * len(c.variables))
        for c in coeffs
    ]


class TestInterp:
    def test_n1_constant(self):
        j = interp_poly(Partition([1]), S)
        e_a = euler_hilb(Partition([1]), S) / S.t3**2
        assert j.eval_at([F(0)]) == e_a

    def test_defining_property_n2(self):
        for lam in enum_partitions(2):
            j = interp_poly(lam, S)
            for mu in enum_partitions(2):
                conts = [c / S.t3 for c in contents_at(mu, S)]
                target = euler_hilb(mu, S) / S.t3**4 if mu == lam else F(0)
                assert j.eval_at(conts) == target

    def test_defining_property_n3(self):
        lam = Partition([2, 1])
        j = interp_poly(lam, S)
        for mu in enum_partitions(3):
            conts = [c / S.t3 for c in contents_at(mu, S)]
            target = euler_hilb(mu, S) / S.t3**6 if mu == lam else F(0)
            assert j.eval_at(conts) == target


class TestGlue:
    def test_d00_is_vertex_pair_with_tangent_edge(self):
        # one cross-section cell: W0 * e_lambda * Winf at substituted params
        req = GlueRequest("PT", (0, 0), 1, (), (), 1, S)
        got = scalars(glue(req))
        lam = Partition([1])
        ssub = S.substituted(0, 0)
        w0 = bare_pt(("fixedpoint", lam), 1, (), S)
        winf = bare_pt(("fixedpoint", lam), 1, (), ssub)
        e0 = euler_hilb(lam, S)
        ei = euler_hilb(lam, ssub)
        ed = edge_factor(lam, (0, 0), S)
        a = [c.coeff(()) * e0 for c in w0.coeffs]
        b = [c.coeff(()) * ei for c in winf.coeffs]
        expect = [
            sum(a[i] * b[m - i] * ed for i in range(m + 1)) for m in range(2)
        ]
        assert got == expect

    def test_conifold_parameter_independence(self):
        series = []
        for seed in (1, 2, 3):
            s = sample_random(seed, 14)
            req = GlueRequest("PT", (-1, -1), 1, (), (), 4, s)
            series.append(scalars(glue(req)))
        assert series[0] == series[1] == series[2]
        # the known stable-pairs conifold answer (1 + q)^2
        assert series[0] == [1, 2, 1, 0, 0]

    def test_dt0_localcurve(self):
        vals = dt0_localcurve((-1, -1), S, 1)
        box = LeggedPlanePartition(Partition(), {(0, 0): 1})
        expect_q1 = dt_weight(box, S) + dt_weight(box, S.substituted(-1, -1))
        assert vals[0] == 1 and vals[1] == expect_q1


class TestPtintResidue:
    def test_d00(self):
        desc = (DescendentSpec("ch", 0, "u", 2),)
        gl = glue(GlueRequest("PT", (0, 0), 1, desc, (), 1, S))
        pr = ptint_residue((0, 0), 1, desc, (), S, 1)
        assert all(a == b for a, b in zip(gl, pr))

    def test_conifold_with_descendent(self):
        desc = (DescendentSpec("ch", 0, "u", 2),)
        gl = glue(GlueRequest("PT", (-1, -1), 1, desc, (), 2, S))
        pr = ptint_residue((-1, -1), 1, desc, (), S, 2)
        assert all(a == b for a, b in zip(gl, pr))

    def test_desk_scale_only(self):
        with pytest.raises(ValueError):
            ptint_residue((0, 0), 2, (), (), S, 1)


def test_glue_json():
    req = GlueRequest("PT", (-1, -1), 1, (), (), 2, S)
    doc = req.to_json()
    assert doc["degrees"] == [-1, -1] and doc["theory"] == "PT"

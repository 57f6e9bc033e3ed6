"""Gluing two one-leg vertices into local-curve invariants over P^1 with
normal degrees (d1, d2), interpolation polynomials representing fixed-point
classes in Chern roots, and the residue-form assembly of the glued series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, List, Sequence, Tuple

from .characters import (
    Convention,
    DEFAULT_CONVENTION,
    DescendentSpec,
    edge_factor,
    euler_hilb,
)
from .partitions import Partition, enum_partitions
from .sampling import ParamSample
from .series import DescSeries
from .vertex import VertexResult, bare_dt, bare_pt, contents_at


class SingularInterpolation(ValueError):
    """The interpolation system lost rank at a non-generic sample."""


def _monomial_symmetric(nvars: int, nu: Partition) -> Dict[Tuple[int, ...], Fraction]:
    """Monomial symmetric polynomial m_nu in nvars variables as an exponent map."""
    if len(nu.parts) > nvars:
        return {}
    out: Dict[Tuple[int, ...], Fraction] = {}
    base = list(nu.parts) + [0] * (nvars - len(nu.parts))
    seen = set()

    def perms(rem, acc):
        if not rem:
            seen.add(tuple(acc))
            return
        used = set()
        for idx, x in enumerate(rem):
            if x in used:
                continue
            used.add(x)
            perms(rem[:idx] + rem[idx + 1:], acc + [x])

    perms(base, [])
    for e in seen:
        out[e] = Fraction(1)
    return out


@dataclass
class InterpPoly:
    """Symmetric polynomial with J(contents of mu) = delta_{lam,mu} e_mu."""

    shape: Partition
    nvars: int
    support: List[Partition]
    coeffs: List[Fraction]

    def as_zpoly(self, nvars: int) -> Dict[Tuple[int, ...], Fraction]:
        out: Dict[Tuple[int, ...], Fraction] = {}
        for nu, c in zip(self.support, self.coeffs):
            if c == 0:
                continue
            for e, _ in _monomial_symmetric(nvars, nu).items():
                out[e] = out.get(e, Fraction(0)) + c
        return {e: c for e, c in out.items() if c}

    def eval_at(self, xs: Sequence[Fraction]) -> Fraction:
        out = Fraction(0)
        for nu, c in zip(self.support, self.coeffs):
            if c == 0:
                continue
            for e in _monomial_symmetric(self.nvars, nu):
                pr = Fraction(1)
                for x, m in zip(xs, e):
                    pr *= x**m
                out += c * pr
        return out


def interp_poly(lam: Partition, s: ParamSample, scale: str = "a",
                conv: Convention = DEFAULT_CONVENTION) -> InterpPoly:
    """Solve J_lam(contents(mu)) = delta_{lam,mu} e_mu over the monomial
    symmetric basis (partitions of size <= n into <= n parts); any solution
    of the underdetermined system is accepted and re-verified."""
    n = lam.size
    mus = enum_partitions(n)
    basis: List[Partition] = []
    for m in range(n + 1):
        for nu in enum_partitions(m):
            if len(nu.parts) <= n:
                basis.append(nu)
    div = s.t3 if scale == "a" else Fraction(1)
    rows = []
    rhs = []
    for mu in mus:
        conts = [c / div for c in contents_at(mu, s)]
        row = []
        for nu in basis:
            val = Fraction(0)
            for e in _monomial_symmetric(n, nu):
                pr = Fraction(1)
                for x, mexp in zip(conts, e):
                    pr *= x**mexp
                val += pr
            row.append(val)
        rows.append(row)
        e_mu = euler_hilb(mu, s, conv)
        if scale == "a":
            e_mu = e_mu / s.t3 ** (2 * n)
        rhs.append(e_mu if mu == lam else Fraction(0))
    coeffs = _solve_underdetermined(rows, rhs)
    if coeffs is None:
        raise SingularInterpolation("singular interpolation system")
    out = InterpPoly(lam, n, basis, coeffs)
    for mu, target in zip(mus, rhs):
        conts = [c / div for c in contents_at(mu, s)]
        if out.eval_at(conts) != target:
            raise SingularInterpolation("interpolation verification failed")
    return out


def _solve_underdetermined(rows: List[List[Fraction]], rhs: List[Fraction]):
    """Gaussian elimination choosing the lexicographically first pivot
    columns; free variables set to zero."""
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, m):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][col]
        a[r] = [x / pv for x in a[r]]
        for i in range(m):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][ncols] != 0:
            return None
    out = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        out[col] = a[i][ncols]
    return out


# ---------------------------------------------------------------------------
# gluing


@dataclass
class GlueRequest:
    theory: str
    degrees: Tuple[int, int]
    n: int
    desc_zero: Sequence[DescendentSpec]
    desc_inf: Sequence[DescendentSpec]
    qorder: int
    sample: ParamSample
    convention: Convention = DEFAULT_CONVENTION
    total: int | None = None

    def to_json(self) -> dict:
        return {
            "theory": self.theory,
            "degrees": list(self.degrees),
            "n": self.n,
            "desc_zero": [d.to_json() for d in self.desc_zero],
            "desc_inf": [d.to_json() for d in self.desc_inf],
            "qorder": self.qorder,
            "sample": self.sample.to_json(),
            "convention": self.convention.to_json(),
        }


def _vertex_weight_series(theory, lam, desc, s, qorder, conv, total):
    """Vertex sum WITHOUT the 1/e_mu fixed-point normalization: the edge
    placement convention keeps all transverse directions in the edge factor."""
    if theory == "PT":
        res = bare_pt(("fixedpoint", lam), qorder, desc, s, conv, total)
        scale = euler_hilb(lam, s, conv)
        return [c * scale for c in res.coeffs]
    res = bare_dt(lam, qorder, desc, s, conv, total)
    return res.coeffs


def glue(req: GlueRequest) -> List[DescSeries]:
    """Local-curve series: sum over cross-section fixed points lambda of
    W_0(lambda; t) Exp(-E^d(lambda)) W_inf(lambda; s-substituted)."""
    s = req.sample
    d1, d2 = req.degrees
    ssub = s.substituted(d1, d2)
    conv = req.convention
    vs = tuple(sp.variable for sp in tuple(req.desc_zero) + tuple(req.desc_inf))
    orders = tuple(sp.order for sp in tuple(req.desc_zero) + tuple(req.desc_inf))
    out = [DescSeries(vs, orders, req.total) for _ in range(req.qorder + 1)]
    for lam in enum_partitions(req.n):
        w0 = _vertex_weight_series(req.theory, lam, req.desc_zero, s, req.qorder, conv, req.total)
        winf = _vertex_weight_series(req.theory, lam, req.desc_inf, ssub, req.qorder, conv, req.total)
        ed = edge_factor(lam, req.degrees, s)
        for n0, c0 in enumerate(w0):
            for ni, ci in enumerate(winf):
                if n0 + ni > req.qorder:
                    continue
                prod_ds = _lift(c0, vs, orders, req.total) * _lift(ci, vs, orders, req.total)
                out[n0 + ni] = out[n0 + ni] + prod_ds * ed
    return out


def _lift(ds: DescSeries, vs, orders, total) -> DescSeries:
    """Reindex a DescSeries into the joint variable tuple."""
    out = DescSeries(vs, orders, total)
    idx = [vs.index(v) for v in ds.variables]
    for e, c in ds.coeffs.items():
        e2 = [0] * len(vs)
        for pos, x in zip(idx, e):
            e2[pos] = x
        out.coeffs[tuple(e2)] = c
    if not ds.coeffs:
        pass
    return out


def dt0_localcurve(degrees: Tuple[int, int], s: ParamSample, qorder: int,
                   conv: Convention = DEFAULT_CONVENTION) -> List[Fraction]:
    """Degree-0 factor of the local curve: product of the two leg-free DT
    vertex series, one at the t parameters and one at the substituted ones."""
    a = bare_dt(Partition(), qorder, (), s, conv).scalar_series()
    b = bare_dt(Partition(), qorder, (), s.substituted(*degrees), conv).scalar_series()
    c = a * b
    return [c.coeff_at(n) for n in range(qorder + 1)]


# ---------------------------------------------------------------------------
# residue assembly of the glued series (desk scale n = 1)


def ptint_residue(
    degrees: Tuple[int, int],
    n: int,
    desc_zero: Sequence[DescendentSpec],
    desc_inf: Sequence[DescendentSpec],
    s: ParamSample,
    qorder: int,
    conv: Convention = DEFAULT_CONVENTION,
    total: int | None = None,
) -> List[DescSeries]:
    """Glued local-curve series evaluated through the residue form of both
    vertices: the interpolation-polynomial edge kernel is diagonal in the
    fixed-point classes, each vertex is an iterated residue, and the infinity
    vertex carries the substituted parameters."""
    from .residue import pt_residue_vertex

    if n != 1:
        raise ValueError("residue assembly implemented at desk scale n = 1")
    ssub = s.substituted(*degrees)
    vs = tuple(sp.variable for sp in tuple(desc_zero) + tuple(desc_inf))
    orders = tuple(sp.order for sp in tuple(desc_zero) + tuple(desc_inf))
    out = [DescSeries(vs, orders, total) for _ in range(qorder + 1)]
    for lam in enum_partitions(n):
        v0 = pt_residue_vertex(lam, qorder, desc_zero, s, conv, basis="interp")
        vi = pt_residue_vertex(lam, qorder, desc_inf, ssub, conv, basis="interp")
        # interp-basis residue vertices match bare_pt fixed-point mode, i.e.
        # carry 1/e; restore the vertex-weight normalization for gluing
        e0 = euler_hilb(lam, s, conv)
        ei = euler_hilb(lam, ssub, conv)
        ed = edge_factor(lam, degrees, s)
        for n0, c0 in enumerate(v0):
            for ni, ci in enumerate(vi):
                if n0 + ni > qorder:
                    continue
                prod_ds = _lift(c0, vs, orders, total) * _lift(ci, vs, orders, total)
                out[n0 + ni] = out[n0 + ni] + prod_ds * (e0 * ei * ed)
    return out

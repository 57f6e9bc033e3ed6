"""Iterated residues: the tautological-integral formula and the vertex.

The residue of a product of rational factors over nested contours
|z_1| > ... > |z_n| is computed exactly by summing residues at the enclosed
poles, one variable at a time.  Two capabilities are shown: the
Hilbert-scheme tautological integral as an n-fold residue, and the one-leg
stable-pairs vertex as a weighted residue series that reproduces the
localization sum coefficient by coefficient.
"""

from vertexforge import Partition, sample_random
from vertexforge.characters import DescendentSpec
from vertexforge.residue import egl_localization, egl_residue, pt_residue_vertex
from vertexforge.vertex import bare_pt

s = sample_random(seed=5, L=14)

# --- tautological integrals ---------------------------------------------------
# Method A sums 1/e_mu over partitions; method B extracts the zero
# coefficient of the omega-kernel integrand.  Equality is exact.
print("tautological integrals, two u-insertions to total degree 4:")
for n in (1, 2, 3):
    a = egl_localization(n, [4, 4], s, total=4)
    b = egl_residue(n, [4, 4], s, total=4)
    assert a == b
    print(f"  n = {n}: localization == residue  (u1^2-coefficient {a.coeff((2, 0))})")

# --- the residue vertex ---------------------------------------------------------
# The same contour engine evaluates the one-leg vertex: a sum over column
# vectors k of Pochhammer-weighted integrands, graded by q^|k|.
lam = Partition([1, 1])
desc = (DescendentSpec("ch", 0, "u", 3),)
loc = bare_pt(("chern", lam), 2, desc, s)
res = pt_residue_vertex(lam, 2, desc, s)
print(f"\nvertex for the Chern monomial c_(1,1), q-order 2, u-order 3:")
for m, (a, b) in enumerate(zip(loc.coeffs, res)):
    assert a == b
    print(f"  q^{m}: localization == residue  ({len(a.coeffs)} series terms)")

# The fixed-point basis runs through interpolation polynomials instead:
loc_f = bare_pt(("fixedpoint", lam), 2, (), s)
res_f = pt_residue_vertex(lam, 2, (), s, basis="interp")
assert all(a == b for a, b in zip(loc_f.coeffs, res_f))
print("\nfixed-point basis (interpolation-polynomial insertion): exact match")

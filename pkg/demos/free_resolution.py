"""
A free resolution, one energy at a time
=======================================

The complex ... -> D (x) W(2m+4) -> D (x) W(2m+2) -> D (x) W(2m) -> A(2m) -> 0
is exact.  For each energy we print the dimensions of the terms, the ranks
of the maps and the alternating sum, which must equal dim A.
"""

from chiral_resolve.homology import resolution_maps, resolution_check
from chiral_resolve.linalg import rank

M, TERMS = 0, 3

for e in range(11):
    dws, ds, eps, dim_a = resolution_maps(M, TERMS, e)
    dims = [d.dim for d in dws]
    ranks = [rank(eps)] + [rank(d) for d in ds[1:]]
    euler = sum((-1) ** k * d for k, d in enumerate(dims))
    print(f"E={e:2d}  dims {dims}  ranks {ranks}  dim A = {dim_a}  alternating sum {euler}")

# The same statement as a structured report.
print(resolution_check(M, TERMS, 10).summary())

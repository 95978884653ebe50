"""
Semi-infinite de Rham cohomology
================================

Tensoring A with forms in the odd integration variables gives a complex whose
cohomology in degree p is W(2(m + p)).  The Koszul subcomplexes with a fixed
set of holes show where exactness comes from.
"""

from chiral_resolve.homology import (derham_cohomology_dims, koszul_exactness_check,
                                     koszul_sectors, w_dims)
from chiral_resolve.fock import Sector

CUTOFF = 10
dims = derham_cohomology_dims(Sector.R, 0, 2, CUTOFF)
for p in range(3):
    row = [dims[(p, e)] for e in range(CUTOFF + 1)]
    print(f"H^(inf/2-{p})  {row}")
    print(f"W({2 * p})        {w_dims(Sector.R, 2 * p, CUTOFF)}")

# In the odd sector everything above p = 0 vanishes.
odd = derham_cohomology_dims(Sector.NS, 0, 2, CUTOFF)
print("odd p=1:", [odd[(1, e)] for e in range(CUTOFF + 1)])

# Koszul exactness: homology only at the bottom, at the bare hole energy.
sectors = koszul_sectors(2, 8)
rep = koszul_exactness_check(sectors, max_m=2, max_energy=8, positions=(-2, -1, 0, 1, 2))
nonzero = [c for c in rep.cells if c["computed"]]
print(rep.summary())
for c in nonzero:
    print("  nonzero homology at", c["key"])

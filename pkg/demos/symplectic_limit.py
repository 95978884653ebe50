"""
W as a limit of Sp(2N) representations
======================================

Wedge powers of V_N modulo eta_N give the fundamental representations M(N)_k,
of dimension C(2N, k) - C(2N, k-2).  Inside the label space they sit as a
filtration whose graded dimensions approach those of W from below.
"""

from chiral_resolve.fock import Sector
from chiral_resolve.homology import w_dims
from chiral_resolve.symplectic import filtration_quotient_dims, fundamental_dim, w_filtration_compare

for N in range(1, 6):
    print(f"N={N}:", [fundamental_dim(N, k) for k in range(N + 1)])

# graded dimensions of the N-th filtration quotient against W(0)
print("W(0)", w_dims(Sector.R, 0, 10))
for N in range(1, 5):
    fq = filtration_quotient_dims(Sector.R, 0, N, 10)
    print(f"N={N} ", [fq.get(e, 0) for e in range(11)])
    print("    ", w_filtration_compare(Sector.R, 0, N, 10).summary())

"""
Bosonising fermion states
=========================

Each fermion state maps to a polynomial in the even boson modes times a
lattice exponential, and fermion modes become modes of vertex operators.
"""

from chiral_resolve.bosonfermion import to_boson, vertex_mode_apply
from chiral_resolve.checks import bf_check
from chiral_resolve.fock import Sector, apply_mode, enumerate_basis
from chiral_resolve.poly import even_weight

for st in enumerate_basis(Sector.R, 0, 4) + enumerate_basis(Sector.R, 0, 6):
    print(f"{str(st):>28}  ->  {to_boson(st).to_text()}")

# psi*_4 on a state, computed on both sides of the correspondence.
st = enumerate_basis(Sector.R, 0, 2)[0]
sign, new = apply_mode("c", 4, st)
print("fermion side:", (to_boson(new).polynomial * sign).to_text("v", even_weight))
print("boson side:  ", vertex_mode_apply("c", 4, to_boson(st)).polynomial.to_text("v", even_weight))

print(bf_check(Sector.NS, max_energy=6).summary())

"""
Counting local fields energy by energy
======================================

The chiral space A is a quotient of D (x) H by the images of two screening
operators.  Here we build it degree by degree and watch the dimensions line
up with the closed-form q-series.
"""

from chiral_resolve import a_space_dims, closed_form, w_dims
from chiral_resolve.fock import Sector

CUTOFF = 12

# Even sector, charge 2m.  The closed form is p^(m^2) (1 - p^(2m+1)) / (p;p).
for m in range(3):
    computed = a_space_dims(Sector.R, m, CUTOFF)
    expected = closed_form("A", "even", m, order=CUTOFF).to_list()
    print(f"A(2*{m})   computed {computed}")
    print(f"          series   {expected}  {'ok' if computed == expected else 'MISMATCH'}")

# The odd sector behaves like a free D-module over W(2m+1, 0).
for m in range(2):
    print(f"A(2*{m}+1) {a_space_dims(Sector.NS, m, CUTOFF)}")

# The W spaces: label states modulo the image of omega from charge 2m + 4.
print("W(0)     ", w_dims(Sector.R, 0, CUTOFF))
print("W(1, 0)  ", w_dims(Sector.NS, 1, CUTOFF))

"""
Tilde fermions and the hidden sl2
=================================

A triangular change of fermion basis with polynomial coefficients turns the
divided square of the screening operator into a constant contraction omega.
Together with eta and xi it spans an sl2 on each finite window.
"""

from chiral_resolve.checks import car_check, sl2_check
from chiral_resolve.fock import FermionState, Sector, vacuum
from chiral_resolve.screening import b_entry, omega_op, tilde_embed

# The first nontrivial row of the basis change: psi~_0 = psi_0 + (u1^2 / 2) psi_2 + ...
print("B(0, 2) =", b_entry(Sector.R, 0, 2).to_text())
print("B(0, 4) =", b_entry(Sector.R, 0, 4).to_text())

# A tilde state written in the original fermions.
t = FermionState(Sector.R, 0, (2,), (-2,))
print(t.to_text(tilde=True), "=")
for st, coeff in tilde_embed(t).items():
    print(f"  {coeff.to_text():>20}  {st}")

# omega acting on |4>.
for st, coeff in omega_op(Sector.R).act(vacuum(Sector.R, 4)).items():
    print(f"omega|4> contains {coeff.to_text()} * {st.to_text(tilde=True)}")

# The anticommutation relations and the sl2 triple, checked as exact matrix identities.
print(car_check(Sector.R, mode_cutoff=8, max_energy=3).summary())
for N in (1, 2, 3):
    print(sl2_check(Sector.R, N).summary())

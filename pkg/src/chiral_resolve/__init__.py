"""Exact, energy-by-energy verification of the structure of chiral spaces of local fields.

The main entry points are re-exported here; see the submodules for the rest.
"""

from .characters import PowerSeriesZ, closed_form, compare, d_character, euler_inv
from .fock import FermionState, Sector, apply_mode, enumerate_basis, vacuum
from .homology import (a_space_dims, derham_check, derham_cohomology_dims, highest_cohomology_check,
                       koszul_exactness_check, odd_freeness_check, resolution_check, w_dims, w_space)
from .linalg import Quotient, SparseMatrix, complement_basis, kernel_basis, quotient_dim, rank
from .poly import T, WeightedPolynomial, monomials_of_energy
from .report import VerificationReport
from .symplectic import fundamental_dim, stabilization_injectivity, w_filtration_compare

__all__ = [
    "FermionState", "PowerSeriesZ", "Quotient", "Sector", "SparseMatrix", "T", "VerificationReport",
    "WeightedPolynomial", "a_space_dims", "apply_mode", "closed_form", "compare", "complement_basis",
    "d_character", "derham_check", "derham_cohomology_dims", "enumerate_basis", "euler_inv",
    "fundamental_dim", "highest_cohomology_check", "kernel_basis", "koszul_exactness_check",
    "monomials_of_energy", "odd_freeness_check", "quotient_dim", "rank", "resolution_check",
    "stabilization_injectivity", "vacuum", "w_dims", "w_filtration_compare", "w_space",
]

__version__ = "0.1.0"

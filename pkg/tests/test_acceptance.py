"""Acceptance criteria 1-14, each checked exactly.

Run with pytest (one PASS/FAIL line per criterion is printed in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import os
import subprocess
import sys
import tempfile

import pytest

from chiral_resolve import checks, homology, symplectic
from chiral_resolve.characters import closed_form
from chiral_resolve.fock import Sector
from chiral_resolve.report import VerificationReport

RESULTS: dict[int, tuple[bool, str]] = {}
R, NS = Sector.R, Sector.NS


def _all_pass(reports: list[VerificationReport]) -> tuple[bool, str]:
    bad = [r for r in reports if not r.passed]
    cells = sum(len(r.cells) for r in reports)
    if bad:
        return False, bad[0].summary()
    return True, f"{len(reports)} reports, {cells} cells"


def c01():
    for m in (0, 1, 2):
        dims = homology.a_space_dims(R, m, 12)
        if dims != closed_form("A", R, m, order=12).to_list():
            return False, f"m={m}: {dims}"
    frozen = [1, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12]
    ok = homology.a_space_dims(R, 0, 10) == frozen
    return ok, "m=0,1,2 to energy 12"


def c02():
    for m in (0, 1):
        if homology.a_space_dims(NS, m, 12) != closed_form("A", NS, m, order=12).to_list():
            return False, f"m={m}"
    ok = homology.a_space_dims(NS, 0, 10) == [1, 1, 1, 2, 3, 4, 6, 8, 11, 15, 20]
    return ok, "m=0,1 to energy 12"


def c03():
    return _all_pass([homology.resolution_check(m, 3, 10) for m in (0, 1)])


def c04():
    sectors = homology.koszul_sectors(2, 10)
    rep = homology.koszul_exactness_check(sectors, max_energy=10, positions=(1, 2))
    ok = rep.passed and all(c["expected"] == 0 for c in rep.cells)
    return ok, f"{len(sectors)} hole sectors, {len(rep.cells)} cells"


def c05():
    return _all_pass([checks.omega_injectivity_check((1, 2, 3), 12)])


def c06():
    # derham_cohomology_dims raises if d^2 != 0 on any piece
    return _all_pass([homology.derham_check(R, m, 2, 10) for m in (0, 1)])


def c07():
    return _all_pass([homology.derham_check(NS, m, 2, 10) for m in (0, 1)])


def c08():
    return _all_pass([homology.odd_freeness_check(m, 10) for m in (0, 1)])


def c09():
    return _all_pass([homology.highest_cohomology_check(s, m, 10) for s in (R, NS) for m in (0, 1, 2)])


def c10():
    reps = [checks.car_check(s, 10, 4) for s in (R, NS)]
    reps += [checks.sl2_check(s, N) for s in (R, NS) for N in (1, 2, 3, 4)]
    return _all_pass(reps)


def c11():
    reps = [checks.oracle_check(s, 8) for s in (R, NS)]
    ok, msg = _all_pass(reps)
    scalars = {r.parameters["scalar"] for r in reps}
    return ok and len(scalars) == 1, f"{msg}, scalar {sorted(scalars)}"


def c12():
    return _all_pass([checks.bf_check(s, 8) for s in (R, NS)])


def c13():
    reps = []
    dims = VerificationReport("fundamental")
    for N in range(1, 6):
        for k in range(N + 1):
            dims.add({"N": N, "k": k}, symplectic.fundamental_dim_formula(N, k), symplectic.fundamental_dim(N, k))
    reps.append(dims)
    for N in range(1, 6):
        for Np in range(N + 1, 6):
            for m in range(N + 1):
                reps.append(symplectic.stabilization_injectivity(N, Np, m))
    for s in (R, NS):
        for m in (0, 1):
            lo = m if s is R else m + 1
            for N in range(max(lo, 1), 5):
                reps.append(symplectic.w_filtration_compare(s, m, N, 10))
    return _all_pass(reps)


def c14():
    outs = []
    with tempfile.TemporaryDirectory() as tmp:
        for i in range(2):
            path = os.path.join(tmp, f"run{i}.jsonl")
            res = subprocess.run([sys.executable, "-m", "chiral_resolve", "verify", "all", "--cutoff", "10",
                                  "--m-max", "2", "--no-timestamp", "--report", path],
                                 capture_output=True, check=False)
            if res.returncode != 0:
                return False, f"run {i} exited {res.returncode}"
            with open(path, "rb") as fh:
                outs.append((fh.read(), res.stdout))
    same = outs[0] == outs[1]
    n_lines = len(outs[0][0].splitlines())
    return same, f"{n_lines} report lines, byte-identical={same}"


CRITERIA = {
    1: ("even A characters", c01),
    2: ("odd A characters", c02),
    3: ("free resolution exactness", c03),
    4: ("Koszul exactness", c04),
    5: ("injectivity of omega", c05),
    6: ("de Rham cohomology, even", c06),
    7: ("odd vanishing", c07),
    8: ("odd freeness", c08),
    9: ("highest cohomology", c09),
    10: ("tilde CAR and sl2", c10),
    11: ("integral oracle", c11),
    12: ("boson-fermion square", c12),
    13: ("symplectic dimensions and filtration", c13),
    14: ("determinism of verify all", c14),
}


def line(n: int) -> str:
    ok, msg = RESULTS[n]
    return f"criterion {n:2d} {'PASS' if ok else 'FAIL'} {CRITERIA[n][0]}: {msg}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    RESULTS[n] = CRITERIA[n][1]()
    print(line(n))
    assert RESULTS[n][0], line(n)


if __name__ == "__main__":
    failed = 0
    for n in sorted(CRITERIA):
        RESULTS[n] = CRITERIA[n][1]()
        print(line(n), flush=True)
        failed += not RESULTS[n][0]
    sys.exit(1 if failed else 0)

"""Named verification suites and a deterministic task runner.

A suite expands into a list of independent tasks ``(function, args)``.  Tasks
may run in a process pool; reports are always returned in task order.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import checks, homology, symplectic
from .characters import closed_form, compare
from .fock import Sector, as_sector
from .graded import piece
from .report import VerificationReport

SUITES = ("car", "sl2", "koszul", "resolution", "derham", "odd-free", "characters", "sp",
          "bf-correspondence")


@dataclass(frozen=True)
class Options:
    cutoff: int = 10
    m_max: int = 2
    p_max: int = 2
    terms: int = 3
    mode_cutoff: int = 10


Task = tuple[Callable[..., VerificationReport], tuple]


# ---------------------------------------------------------------------------
# report builders for the characters suite

def space_dims(space: str, sector, m: int, max_energy: int, p_index: int = 0) -> list[int]:
    """Computed graded dimensions of one of the character spaces."""
    sec = as_sector(sector)
    c = homology.base_charge(sec, m)
    if space == "A":
        return homology.a_space_dims(sec, m, max_energy)
    if space == "W":
        return homology.w_dims(sec, c, max_energy)
    if space == "Htilde":
        # the full label space; in the odd sector W lives inside its psi~_1-free part
        return [piece(sec, c, e, False).dim for e in range(max_energy + 1)]
    if space == "Hcoh":
        d = homology.derham_cohomology_dims(sec, m, p_index, max_energy)
        return [d[(p_index, e)] for e in range(max_energy + 1)]
    raise ValueError(f"unknown space {space!r}")


def character_report(space: str, sector, m: int, max_energy: int, p_index: int = 0) -> VerificationReport:
    sec = as_sector(sector)
    params = {"space": space, "sector": sec.label, "m": m, "cutoff": max_energy}
    if space == "Hcoh":
        params["p"] = p_index
    dims = space_dims(space, sec, m, max_energy, p_index)
    return compare(closed_form(space, sec, m, p_index, max_energy), dims, "character", params)


def w_image_report(m: int, max_energy: int) -> VerificationReport:
    """``dim W(2m) = dim H~(2m) - dim H~(2m+4)`` per energy."""
    rep = VerificationReport("w-image", {"m": m, "cutoff": max_energy})
    ht = space_dims("Htilde", Sector.R, m, max_energy)
    ht4 = space_dims("Htilde", Sector.R, m + 2, max_energy)
    wd = space_dims("W", Sector.R, m, max_energy)
    for e in range(max_energy + 1):
        rep.add({"energy": e}, ht[e] - ht4[e], wd[e])
    return rep


def fundamental_report(N_max: int) -> VerificationReport:
    rep = VerificationReport("sp-fundamental", {"N_max": N_max})
    for N in range(1, N_max + 1):
        for k in range(N + 1):
            rep.add({"N": N, "k": k}, symplectic.fundamental_dim_formula(N, k), symplectic.fundamental_dim(N, k))
    return rep


def koszul_report(max_k: int, max_m: int, max_energy: int) -> VerificationReport:
    sectors = homology.koszul_sectors(max_k, max_energy)
    return homology.koszul_exactness_check(sectors, max_m, max_energy)


# ---------------------------------------------------------------------------
# suite expansion

def _sectors():
    return (Sector.R, Sector.NS)


def suite_tasks(name: str, opt: Options) -> list[Task]:
    E, M = opt.cutoff, opt.m_max
    if name == "car":
        out: list[Task] = []
        for s in _sectors():
            out.append((checks.car_check, (s, opt.mode_cutoff, min(E, 4))))
            out.append((checks.screening_check, (s, min(E, 8))))
        return out
    if name == "sl2":
        out = [(checks.sl2_check, (s, N)) for s in _sectors() for N in range(1, 5)]
        out.append((checks.omega_injectivity_check, (tuple(range(1, M + 2)), E + 2)))
        return out
    if name == "koszul":
        return [(koszul_report, (2, M, E))]
    if name == "resolution":
        return [(homology.resolution_check, (m, opt.terms, E)) for m in range(min(M, 1) + 1)]
    if name == "derham":
        out = [(homology.derham_check, (s, m, opt.p_max, E)) for s in _sectors() for m in range(min(M, 1) + 1)]
        out += [(homology.highest_cohomology_check, (s, m, E)) for s in _sectors() for m in range(M + 1)]
        return out
    if name == "odd-free":
        return [(homology.odd_freeness_check, (m, E)) for m in range(M + 1)]
    if name == "characters":
        out = []
        for s in _sectors():
            for space in ("A", "W", "Htilde"):
                for m in range(M + 1):
                    out.append((character_report, (space, s, m, E + 2 if space == "A" else E)))
        out += [(w_image_report, (m, E)) for m in range(M + 1)]
        return out
    if name == "sp":
        out = [(fundamental_report, (5,))]
        for N in range(1, 6):
            for Np in range(N + 1, 6):
                for m in range(N + 1):
                    out.append((symplectic.stabilization_injectivity, (N, Np, m)))
        for s in _sectors():
            for N in range(1, 4):
                for k in range(N + 1):
                    out.append((symplectic.intertwining_check, (s, N, k)))
        for s in _sectors():
            for m in range(min(M, 1) + 1):
                lo = m if s is Sector.R else m + 1
                for N in range(max(lo, 1), 5):
                    out.append((symplectic.w_filtration_compare, (s, m, N, E)))
        return out
    if name == "bf-correspondence":
        out = []
        for s in _sectors():
            out.append((checks.bf_check, (s, min(E, 8))))
            out.append((checks.oracle_check, (s, min(E, 8))))
        return out
    raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)} or all")


def all_tasks(names, opt: Options) -> list[Task]:
    names = list(SUITES) if names == "all" or names == ["all"] else ([names] if isinstance(names, str) else names)
    out: list[Task] = []
    for n in names:
        out.extend(suite_tasks(n, opt))
    return out


def _run_one(task: Task) -> VerificationReport:
    fn, args = task
    return fn(*args)


def default_jobs() -> int:
    raw = os.environ.get("CHIRAL_RESOLVE_JOBS")
    if raw is None:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"CHIRAL_RESOLVE_JOBS must be an integer, got {raw!r}") from None


def run_tasks(tasks: list[Task], jobs: int = 1) -> list[VerificationReport]:
    """Run tasks, possibly in parallel; the result order is the task order."""
    if jobs <= 1 or len(tasks) <= 1:
        return [_run_one(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, tasks))

"""Cross-method verification suite.

Runs every structural claim the package rests on — projector idempotence,
diagonality/symmetry/realness/non-negativity of the dense build, the
diagonal-equals-energy identity, kernel/image complementarity, agreement of
the three counting methods, and the complementary-counting identity — and
reports one pass/fail row per claim.  A deliberately corrupted window
projector can be injected to prove the suite actually detects violations.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .core import BasisState, LatticeSpec, LocalOperatorMatrix, local_matrix, total_energy
from .degeneracy import count_enumerate, count_modular, count_recurrence, identity_check
from .dense import DENSE_CAP, build_dense, check_structure, kernel_vs_image
from .errors import CapacityError, DomainError

CROSS_CAP = 24
IDENTITY_MAX = 60


@dataclass(frozen=True)
class CheckResult:
    name: str
    claim: str
    passed: bool
    detail: str
    ms: float


def _result(name: str, claim: str, failures: list[str], scope: str, t0: float) -> CheckResult:
    detail = scope if not failures else "; ".join(failures[:8])
    return CheckResult(
        name=name,
        claim=claim,
        passed=not failures,
        detail=detail,
        ms=(time.perf_counter() - t0) * 1000.0,
    )


def run_all(
    dense_max: int = 10,
    cross_max: int = 20,
    identity_max: int = IDENTITY_MAX,
    fault: LocalOperatorMatrix | None = None,
) -> list[CheckResult]:
    """Run the full suite and return one CheckResult per claim.

    ``fault`` replaces the window projector in dense builds with a matching
    window length — the negative-control hook.
    """
    if dense_max > DENSE_CAP:
        raise CapacityError(
            f"dense checks are capped at n = {DENSE_CAP}, got {dense_max}", cap=DENSE_CAP
        )
    if cross_max > CROSS_CAP:
        raise CapacityError(
            f"cross-method checks are capped at n = {CROSS_CAP}, got {cross_max}", cap=CROSS_CAP
        )
    if dense_max < 2 or cross_max < 2:
        raise DomainError("verification needs dense and cross bounds >= 2")

    results: list[CheckResult] = []

    def projector_for(k: int) -> LocalOperatorMatrix:
        if fault is not None and fault.k == k:
            return fault
        return local_matrix(k)

    # Window projector is idempotent: A @ A = A.
    t0 = time.perf_counter()
    failures = []
    for k in range(2, 6):
        a = np.diag(np.asarray(projector_for(k).diagonal, dtype=np.int64))
        if not np.array_equal(a @ a, a):
            failures.append(f"k={k}")
    results.append(_result(
        "projector-idempotent", "the window projector squares to itself",
        failures, "k = 2..5", t0,
    ))

    # Dense structural claims, energy agreement, kernel/image split.
    structure_fails: list[str] = []
    energy_fails: list[str] = []
    split_fails: list[str] = []
    count_fails: list[str] = []
    census_fails: list[str] = []
    t_struct = time.perf_counter()
    for n in range(2, dense_max + 1):
        for k in range(2, n + 1):
            spec = LatticeSpec(n, k)
            h = build_dense(spec, local=projector_for(k))
            rep = check_structure(h)
            if not rep.all_hold:
                structure_fails.append(f"n={n},k={k}:{rep}")
            diag = np.diagonal(h.entries)
            expect = np.fromiter(
                (total_energy(BasisState(n, s), spec) for s in range(spec.dimension)),
                dtype=np.int64,
                count=spec.dimension,
            )
            if not np.array_equal(diag, expect):
                energy_fails.append(f"n={n},k={k}")
            ki = kernel_vs_image(h)
            if not (ki.orthogonal and ki.complete):
                split_fails.append(f"n={n},k={k}:{ki}")
            if ki.dim_ker != count_enumerate(spec).count:
                count_fails.append(
                    f"n={n},k={k}: dim_ker={ki.dim_ker} "
                    f"count={count_enumerate(spec).count}"
                )
            if k == 2:
                top = int(diag.max())
                hits = int(np.count_nonzero(diag == top))
                if top != n - 1 or hits != 1:
                    census_fails.append(f"n={n}: max={top} attained {hits}x")
    scope = f"n = 2..{dense_max}, k = 2..n"
    results.append(_result(
        "dense-structure",
        "the dense Hamiltonian is diagonal, symmetric, real Hermitian, non-negative",
        structure_fails, scope, t_struct,
    ))
    results.append(_result(
        "dense-energy",
        "every diagonal entry equals the window-count energy of its basis state",
        energy_fails, scope, t_struct,
    ))
    results.append(_result(
        "kernel-image-split",
        "kernel and image are orthogonal and their dimensions sum to 2^n",
        split_fails, scope, t_struct,
    ))
    results.append(_result(
        "kernel-dimension",
        "dim ker of the dense build equals the enumeration count",
        count_fails, scope, t_struct,
    ))
    results.append(_result(
        "top-eigenvalue",
        "the largest eigenvalue n-1 is attained exactly once (all-ones state)",
        census_fails, f"n = 2..{dense_max}, k = 2", t_struct,
    ))

    # Three counting methods agree (k = 2).
    t0 = time.perf_counter()
    failures = []
    for n in range(2, cross_max + 1):
        e = count_enumerate(LatticeSpec(n, 2)).count
        r = count_recurrence(n, 2).count
        m = count_modular(n).count
        if not (e == r == m):
            failures.append(f"n={n}: enumerate={e} recurrence={r} modular={m}")
    results.append(_result(
        "cross-method-agreement",
        "enumeration, recurrence, and modular counting return the same count",
        failures, f"n = 2..{cross_max}, k = 2", t0,
    ))

    # Complementary-counting identity in exact integers.
    t0 = time.perf_counter()
    failures = []
    for n in range(2, identity_max + 1):
        chk = identity_check(n)
        if not chk.holds:
            failures.append(f"n={n}: lhs={chk.lhs} rhs={chk.rhs}")
    results.append(_result(
        "power-sum-identity",
        "count(n) = 2^n - sum of 2^(n-2-j) * count-seeds (complement identity)",
        failures, f"n = 2..{identity_max}", t0,
    ))

    return results

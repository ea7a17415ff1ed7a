"""Ground-state counting by three independent methods.

The ground states of the window-projector chain are exactly the basis states
with no all-ones window of length k, so dim(ker H) is the number of n-bit
strings avoiding a k-run of ones.  Three routes compute it:

* :func:`count_enumerate` scans all 2^n basis indices (capped at n = 40),
* :func:`count_recurrence` runs the k-step Fibonacci recurrence
  S_n = S_{n-1} + ... + S_{n-k} in exact big integers (no cap),
* :func:`count_modular` counts row labels surviving a family of modular
  conditions (k = 2 only, capped at n = 30).

Any disagreement between them is a bug by construction; the verification
suite exercises exactly that.

Fibonacci indexing note: throughout this package F_0 = F_1 = 1, F_2 = 2, ...
(one step ahead of the classical convention that starts 0, 1).  Under it the
k = 2 ground-state count for n sites is literally F_{n+1}.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import ENUMERATION_CAP, BasisState, LatticeSpec, run_mask
from .errors import CapacityError, DomainError, UnsupportedMethodError

#: count_modular materializes/streams row labels 1..2^n; cap the stream.
MODULAR_CAP = 30

#: Environment variable selecting the enumeration worker count.
WORKERS_ENV_VAR = "QDEGEN_WORKERS"

_CHUNK = 1 << 20


@dataclass(frozen=True)
class DegeneracyResult:
    """Exact ground-state count for an (n, k) chain and the method used."""

    n: int
    k: int
    count: int
    method: str


@dataclass(frozen=True)
class RecurrenceSeeds:
    """Seeds S_0 .. S_{k-1} of the k-step recurrence.

    S_m = 2^m for m < k: every string shorter than the window trivially
    avoids a k-run of ones.
    """

    k: int
    seeds: tuple[int, ...]

    @classmethod
    def for_window(cls, k: int) -> "RecurrenceSeeds":
        if k < 2:
            raise DomainError(f"window length must be >= 2, got {k}")
        return cls(k=k, seeds=tuple(1 << m for m in range(k)))


@dataclass(frozen=True)
class IdentityCheck:
    """Both sides of the power-of-two complementary-counting identity."""

    n: int
    lhs: int
    rhs: int
    holds: bool


def fibonacci(j: int) -> int:
    """F_j under the F_0 = F_1 = 1 convention, as an exact big integer."""
    if j < 0:
        raise DomainError(f"index must be >= 0, got {j}")
    a, b = 1, 1
    for _ in range(j):
        a, b = b, a + b
    return a


def resolve_workers(workers: int | None = None) -> int:
    """Worker count for enumeration: explicit arg, else env var, else CPUs."""
    if workers is None:
        env = os.environ.get(WORKERS_ENV_VAR, "").strip()
        workers = int(env) if env else (os.cpu_count() or 1)
    if workers < 1:
        raise DomainError(f"worker count must be >= 1, got {workers}")
    return workers


def _count_zero_energy_range(lo: int, hi: int, k: int) -> int:
    """Number of indices in [lo, hi) whose bit pattern has no k-run of ones.

    Vectorized shift-and-mask over uint64 chunks; exact because every index
    is < 2^ENUMERATION_CAP << 2^64.
    """
    total = 0
    for start in range(lo, hi, _CHUNK):
        stop = min(start + _CHUNK, hi)
        x = np.arange(start, stop, dtype=np.uint64)
        mask = x
        got = 1
        while got < k:
            step = min(got, k - got)
            mask = mask & (mask >> np.uint64(step))
            got += step
        total += int(np.count_nonzero(mask == 0))
    return total


def count_enumerate(spec: LatticeSpec, workers: int | None = None) -> DegeneracyResult:
    """Ground-state count by scanning all 2^n basis indices.

    The index space is partitioned into ``workers`` disjoint ranges whose
    partial counts are summed, so the result is independent of the worker
    count.  Capped at n = 40.
    """
    if spec.n > ENUMERATION_CAP:
        raise CapacityError(
            f"enumeration is capped at n = {ENUMERATION_CAP}, got n = {spec.n}",
            cap=ENUMERATION_CAP,
            hint="use count_recurrence, which has no cap",
        )
    workers = resolve_workers(workers)
    dim = spec.dimension
    bounds = [dim * w // workers for w in range(workers + 1)]
    ranges = [(bounds[w], bounds[w + 1]) for w in range(workers)
              if bounds[w] < bounds[w + 1]]
    if len(ranges) <= 1:
        count = _count_zero_energy_range(0, dim, spec.k)
    else:
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            parts = pool.map(
                lambda r: _count_zero_energy_range(r[0], r[1], spec.k), ranges
            )
            count = sum(parts)
    return DegeneracyResult(n=spec.n, k=spec.k, count=count, method="enumerate")


def count_recurrence(n: int, k: int) -> DegeneracyResult:
    """Ground-state count via S_n = S_{n-1} + ... + S_{n-k}, exact for any n.

    Seeds are S_m = 2^m for m < k; for k = 2 the result is the Fibonacci
    number F_{n+1}.
    """
    if n < 0:
        raise DomainError(f"site count must be >= 0, got {n}")
    seeds = RecurrenceSeeds.for_window(k).seeds
    if n < k:
        return DegeneracyResult(n=n, k=k, count=seeds[n], method="recurrence")
    window = list(seeds)
    acc = sum(window)
    for _ in range(n - k):
        window.append(acc)
        acc += acc - window.pop(0)
    return DegeneracyResult(n=n, k=k, count=acc, method="recurrence")


def count_modular(n: int, k: int = 2) -> DegeneracyResult:
    """Ground-state count via modular row conditions (k = 2 only).

    Labels the 2^n rows 1..2^n and keeps those with
    (r mod 4x) in {1, ..., 3x} for every x in {1, 2, 4, ..., 2^(n-2)};
    the survivors are exactly the zero rows of the image column, so their
    number equals the kernel dimension.  x ranges over powers of two because
    the repeated-block construction only produces block sizes 4x = 2^j.
    """
    if k != 2:
        raise UnsupportedMethodError(
            f"the modular method applies to window length 2 only, got k = {k}"
        )
    if n < 2:
        raise DomainError(f"the modular method needs n >= 2, got {n}")
    if n > MODULAR_CAP:
        raise CapacityError(
            f"the modular method is capped at n = {MODULAR_CAP}, got n = {n}",
            cap=MODULAR_CAP,
            hint="use count_recurrence, which has no cap",
        )
    xs = [1 << j for j in range(n - 1)]  # x = 1, 2, ..., 2^(n-2)
    total = 0
    dim = 1 << n
    for start in range(1, dim + 1, _CHUNK):
        stop = min(start + _CHUNK, dim + 1)
        rows = np.arange(start, stop, dtype=np.uint64)
        for x in xs:
            residue = rows & np.uint64(4 * x - 1)
            rows = rows[(residue >= 1) & (residue <= np.uint64(3 * x))]
            if rows.size == 0:
                break
        total += int(rows.size)
    return DegeneracyResult(n=n, k=2, count=total, method="modular")


def kernel_basis(spec: LatticeSpec, limit: int | None = None) -> Iterator[BasisState]:
    """Yield the zero-energy basis states in ascending index order.

    Yields at most ``limit`` states when given; the unlimited stream has
    exactly count_enumerate(spec) items.  Capped at n = 40.
    """
    if spec.n > ENUMERATION_CAP:
        raise CapacityError(
            f"kernel enumeration is capped at n = {ENUMERATION_CAP}, got n = {spec.n}",
            cap=ENUMERATION_CAP,
        )
    if limit is not None and limit < 0:
        raise DomainError(f"limit must be >= 0, got {limit}")
    if limit == 0:
        return
    yielded = 0
    k = spec.k
    for index in range(spec.dimension):
        if run_mask(index, k) == 0:
            yield BasisState(n=spec.n, index=index)
            yielded += 1
            if limit is not None and yielded >= limit:
                return


def identity_check(n: int) -> IdentityCheck:
    """Check F_{n+1} = 2^n - sum_{j=0}^{n-2} 2^(n-2-j) F_j in exact arithmetic.

    The right-hand side counts, by complement, the rows excluded by the
    modular conditions.  Valid for n >= 2.
    """
    if n < 2:
        raise DomainError(f"the identity is stated for n >= 2, got {n}")
    lhs = count_recurrence(n, 2).count
    fibs = [1, 1]
    while len(fibs) < n - 1:
        fibs.append(fibs[-1] + fibs[-2])
    rhs = (1 << n) - sum((1 << (n - 2 - j)) * fibs[j] for j in range(n - 1))
    return IdentityCheck(n=n, lhs=lhs, rhs=rhs, holds=lhs == rhs)

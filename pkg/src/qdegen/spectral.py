"""Asymptotics of the ground-state count: characteristic roots and Pisot checks.

The k-step recurrence S_n = S_{n-1} + ... + S_{n-k} has characteristic
polynomial p(x) = x^k - x^{k-1} - ... - 1.  Its single root in (1, 2) is the
limiting number of ground states per site; the remaining k - 1 roots all lie
strictly inside the unit disk, which makes the dominant root a Pisot number.
This module computes the dominant root by a bracketed search, the full root
set by simultaneous Weierstrass iteration, and the finite-n per-site sequence
S_n^(1/n) from the exact big-integer counts.

Two deliberate numerical choices:

* the dominant root is found twice (bracket + polish, and as one of the
  simultaneous roots) and the two values are cross-checked;
* the per-site sequence takes log(S_n) from the integer's bit length plus its
  leading 64 bits, never by converting the full integer to floating point,
  so n in the thousands works without overflow.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .degeneracy import count_recurrence, fibonacci
from .errors import DomainError, RootFindingError

#: Simultaneous root finding in double precision is reliable up to here;
#: beyond k = 32 the conjugates crowd the unit circle too tightly.
ROOTS_K_CAP = 32

#: per_site_sequence cap on the chain length.
PER_SITE_N_CAP = 10_000

#: binet_estimate cap; the float estimate itself overflows near n = 1470.
BINET_N_CAP = 1_000

_DEFAULT_TOL = 1e-12
_MAX_TOL = 1e-6


@dataclass(frozen=True)
class CharPoly:
    """p(x) = x^k - x^{k-1} - ... - x - 1 in descending-degree coefficients."""

    k: int

    def __post_init__(self):
        if self.k < 2:
            raise DomainError(f"order must be >= 2, got {self.k}")

    @property
    def coefficients(self) -> tuple[int, ...]:
        return (1,) + (-1,) * self.k

    def __call__(self, x):
        """Evaluate p(x) by Horner; works for real and complex x."""
        acc = 1
        for _ in range(self.k):
            acc = acc * x - 1
        return acc

    def derivative(self, x):
        """Evaluate p'(x) alongside Horner's recurrence."""
        acc = 1
        dacc = 0
        for _ in range(self.k):
            dacc = dacc * x + acc
            acc = acc * x - 1
        return dacc

    def aux(self, x):
        """The equivalent (x - 1) p(x) = x^{k+1} - 2 x^k + 1, stabler near 2."""
        return (x - 2.0) * x**self.k + 1.0


@dataclass(frozen=True)
class RootSolve:
    """All k roots with per-root residuals |p(z)| and a joint error bound."""

    k: int
    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    error_bound: float


@dataclass(frozen=True)
class PisotReport:
    """Dominant root and conjugate moduli for one recurrence order."""

    k: int
    dominant_root: float
    conjugates: tuple[complex, ...]
    max_conjugate_modulus: float
    root_error_bound: float
    is_pisot: bool


@dataclass(frozen=True)
class ConvergencePoint:
    """Ground states per site at chain length n and its gap to the limit."""

    n: int
    per_site: float
    gap: float


def _check_tol(tol: float) -> None:
    if not 0.0 < tol <= _MAX_TOL:
        raise DomainError(f"tolerance must be in (0, {_MAX_TOL}], got {tol}")


def dominant_root(k: int, tol: float = _DEFAULT_TOL) -> float:
    """The unique root of x^k - x^{k-1} - ... - 1 in (1, 2).

    p(1) = 1 - k < 0 and p(2) = 1 > 0, so bisection on [1, 2] brackets the
    root; a few Newton steps then polish it to the residual criterion
    |p(r)| <= tol * max(|p'(r)|, 1).
    """
    p = CharPoly(k)
    _check_tol(tol)
    lo, hi = 1.0, 2.0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if p(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15:
            break
    r = 0.5 * (lo + hi)
    for _ in range(8):
        residual = p(r)
        slope = p.derivative(r)
        if abs(residual) <= tol * max(abs(slope), 1.0):
            return r
        step = residual / slope
        nxt = r - step
        if not lo <= nxt <= hi:
            nxt = 0.5 * (lo + hi)
        r = nxt
    if abs(p(r)) <= tol * max(abs(p.derivative(r)), 1.0):
        return r
    raise RootFindingError(
        f"dominant root polish did not converge for k = {k}", bracket=(lo, hi)
    )


def solve_all_roots(k: int, tol: float = _DEFAULT_TOL) -> RootSolve:
    """All k characteristic roots by simultaneous Weierstrass iteration.

    Starts from randomized distinct points on a circle (seeded by k, so runs
    are reproducible) and updates every approximation by its Weierstrass
    correction W_j = p(z_j) / prod_{i != j} (z_j - z_i) until the largest
    correction falls under the tolerance.  The returned error bound is
    k * max|W_j|, the classical simultaneous inclusion-disk radius, floored
    at a few ulps to stay honest about double precision.
    """
    _check_tol(tol)
    p = CharPoly(k)
    if k > ROOTS_K_CAP:
        raise DomainError(
            f"simultaneous root finding is capped at k = {ROOTS_K_CAP}, got {k}"
        )
    rng = random.Random(k)
    jitter = [rng.uniform(0.1, 0.9) for _ in range(k)]
    z = [1.3 * cmath.exp(2j * cmath.pi * (j + jitter[j]) / k) for j in range(k)]
    corrections = [complex(0.0)] * k
    for _ in range(400):
        worst = 0.0
        for j in range(k):
            denom = complex(1.0)
            for i in range(k):
                if i != j:
                    denom *= z[j] - z[i]
            if denom == 0:
                raise RootFindingError(
                    f"two approximations coincided during iteration for k = {k}"
                )
            w = p(z[j]) / denom
            corrections[j] = w
            z[j] -= w
            worst = max(worst, abs(w))
        if worst <= tol:
            break
    else:
        raise RootFindingError(
            f"simultaneous iteration did not converge for k = {k} (tol {tol})"
        )
    min_sep = min(
        abs(z[j] - z[i]) for j in range(k) for i in range(j + 1, k)
    )
    if min_sep <= tol:
        raise RootFindingError(
            f"duplicate collapse: two roots within {tol} for k = {k}"
        )
    # One final Weierstrass evaluation at the settled points for the bound.
    final = []
    for j in range(k):
        denom = complex(1.0)
        for i in range(k):
            if i != j:
                denom *= z[j] - z[i]
        final.append(abs(p(z[j]) / denom))
    bound = max(k * max(final), 4.0 * k * 2.2e-16)
    order = sorted(range(k), key=lambda j: (-abs(z[j]), cmath.phase(z[j])))
    roots = tuple(z[j] for j in order)
    residuals = tuple(abs(p(r)) for r in roots)
    return RootSolve(k=k, roots=roots, residuals=residuals, error_bound=bound)


def all_roots(k: int, tol: float = _DEFAULT_TOL) -> list[complex]:
    """The k roots of the characteristic polynomial, largest modulus first."""
    return list(solve_all_roots(k, tol).roots)


def pisot_check(k: int, tol: float = _DEFAULT_TOL) -> PisotReport:
    """Verify that the dominant root is Pisot: all conjugates inside |z| < 1.

    The dominant root comes from the bracketed search; the conjugates come
    from the simultaneous solve after dropping the root nearest that value,
    and the two dominant estimates must agree within the error bound.  The
    verdict is error-aware: is_pisot requires
    max|conjugate| + error_bound < 1, not a bare comparison.
    """
    solve = solve_all_roots(k, tol)
    dom = dominant_root(k, tol)
    nearest = min(range(k), key=lambda j: abs(solve.roots[j] - dom))
    slack = max(10.0 * solve.error_bound, 1e-9)
    if abs(solve.roots[nearest] - dom) > slack:
        raise RootFindingError(
            f"bracketed and simultaneous dominant roots disagree for k = {k}: "
            f"{dom!r} vs {solve.roots[nearest]!r}"
        )
    conjugates = tuple(r for j, r in enumerate(solve.roots) if j != nearest)
    max_mod = max(abs(r) for r in conjugates)
    is_pisot = dom > 1.0 and (max_mod + solve.error_bound) < 1.0
    return PisotReport(
        k=k,
        dominant_root=dom,
        conjugates=conjugates,
        max_conjugate_modulus=max_mod,
        root_error_bound=solve.error_bound,
        is_pisot=is_pisot,
    )


def log_of_integer(value: int) -> float:
    """Natural log of a positive big integer via bit length + leading bits.

    Avoids float conversion of the full integer, which overflows once the
    count has more than ~300 digits.
    """
    if value <= 0:
        raise DomainError(f"logarithm needs a positive integer, got {value}")
    shift = max(0, value.bit_length() - 64)
    return math.log(value >> shift) + shift * math.log(2.0)


def sample_lengths(n_max: int, samples: int) -> list[int]:
    """Geometric subsample of [2, n_max], endpoints included, deduplicated."""
    if n_max < 2:
        raise DomainError(f"n_max must be >= 2, got {n_max}")
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples}")
    if samples == 1 or n_max == 2:
        return [n_max]
    lo, hi = math.log(2.0), math.log(float(n_max))
    points = {
        round(math.exp(lo + (hi - lo) * i / (samples - 1)))
        for i in range(samples)
    }
    points |= {2, n_max}
    return sorted(min(max(p, 2), n_max) for p in points)


def per_site_sequence(
    k: int,
    n_max: int,
    samples: int = 32,
    ns: list[int] | None = None,
) -> list[ConvergencePoint]:
    """Ground states per site S_n^(1/n) at a subsample of lengths up to n_max.

    ``ns`` overrides the sampling schedule.  One recurrence sweep supplies
    every S_n exactly; the gap column is the distance to the dominant root.
    """
    if n_max > PER_SITE_N_CAP:
        raise DomainError(f"n_max is capped at {PER_SITE_N_CAP}, got {n_max}")
    wanted = sorted(set(ns)) if ns is not None else sample_lengths(n_max, samples)
    if not wanted or wanted[0] < 2 or wanted[-1] > n_max:
        raise DomainError(f"sample lengths must lie in [2, {n_max}], got {wanted}")
    limit = dominant_root(k)
    points = []
    for n in wanted:
        count = count_recurrence(n, k).count
        per_site = math.exp(log_of_integer(count) / n)
        points.append(ConvergencePoint(n=n, per_site=per_site, gap=abs(per_site - limit)))
    return points


@dataclass(frozen=True)
class BinetEstimate:
    """Exact F_n against the single-power approximation phi^(n+1)/sqrt(5)."""

    n: int
    exact: int
    estimate: float
    relative_error: float


def binet_estimate(n: int) -> BinetEstimate:
    """Compare exact F_n (F_0 = F_1 = 1) with phi^(n+1)/sqrt(5).

    The +1 exponent reconciles the F_0 = 1 convention with the classical
    closed form.  The relative error shrinks geometrically, by a factor of
    about phi^-2 per step, until it reaches double-precision rounding.
    """
    if not 0 <= n <= BINET_N_CAP:
        raise DomainError(
            f"n must be in [0, {BINET_N_CAP}], got {n} "
            f"(the float estimate overflows near n = 1470)"
        )
    exact = fibonacci(n)
    phi = dominant_root(2)
    estimate = phi ** (n + 1) / math.sqrt(5.0)
    relative_error = abs(estimate - float(exact)) / float(exact)
    return BinetEstimate(n=n, exact=exact, estimate=estimate, relative_error=relative_error)

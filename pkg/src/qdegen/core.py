"""Lattice model, basis-state indexing, and the exact integer energy function.

The model is a chain of ``n`` qubit sites.  Every window of ``k`` adjacent
sites carries a projector that fixes the all-ones pattern on the window and
annihilates every other pattern, so the full Hamiltonian is diagonal in the
standard basis and the energy of a basis state is simply the number of
length-``k`` runs of ones it contains.

Sites are numbered 1..n left to right and site 1 is the most significant bit
of the basis index, so the all-zeros state has index 0 and the all-ones state
has index 2^n - 1.

All operations here are pure functions of their inputs and safe to call from
any number of concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ContractError, DomainError

#: Enumeration over basis indices is capped here; beyond it use the recurrence.
ENUMERATION_CAP = 40


@dataclass(frozen=True)
class LatticeSpec:
    """Chain length ``n`` and interaction window length ``k``."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"site count must be >= 0, got {self.n}")
        if self.k < 2:
            raise DomainError(f"window length must be >= 2, got {self.k}")

    @property
    def dimension(self) -> int:
        """Dimension of the full state space, 2^n."""
        return 1 << self.n

    @property
    def num_windows(self) -> int:
        """Number of length-k windows on the chain (0 when n < k)."""
        return max(0, self.n - self.k + 1)


@dataclass(frozen=True)
class BasisState:
    """One of the 2^n standard basis states of an n-site chain.

    ``index`` is the value of the site bits read as a big-endian binary
    numeral (site 1 = most significant bit).
    """

    n: int
    index: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"site count must be >= 0, got {self.n}")
        if not 0 <= self.index < (1 << self.n):
            raise DomainError(
                f"index {self.index} out of range for {self.n} sites"
            )

    @classmethod
    def from_bits(cls, bits) -> "BasisState":
        """Build a state from an iterable of 0/1 site values, site 1 first."""
        bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in bits):
            raise DomainError(f"bits must all be 0 or 1, got {bits}")
        index = 0
        for b in bits:
            index = (index << 1) | b
        return cls(n=len(bits), index=index)

    @cached_property
    def bits(self) -> tuple[int, ...]:
        """Site values as a tuple, site 1 first."""
        return tuple((self.index >> (self.n - 1 - i)) & 1 for i in range(self.n))

    @property
    def bitstring(self) -> str:
        """Site values as a string like ``'10110'`` (empty for n = 0)."""
        return format(self.index, f"0{self.n}b") if self.n else ""

    def __str__(self) -> str:
        return f"|{self.bitstring}>"


@dataclass(frozen=True)
class LocalOperatorMatrix:
    """Diagonal of the 2^k x 2^k window projector.

    As produced by :func:`local_matrix` every entry is 0 except the last,
    which is 1: the projector fixes the all-ones window pattern only.  The
    matrix it represents is diagonal, symmetric, Hermitian, and idempotent.
    """

    k: int
    diagonal: tuple[int, ...]

    def __post_init__(self):
        if self.k < 2:
            raise DomainError(f"window length must be >= 2, got {self.k}")
        if len(self.diagonal) != (1 << self.k):
            raise ContractError(
                f"diagonal must have 2^{self.k} = {1 << self.k} entries, "
                f"got {len(self.diagonal)}"
            )


def local_matrix(k: int) -> LocalOperatorMatrix:
    """Window projector for k adjacent sites: diag(0, ..., 0, 1)."""
    if k < 2:
        raise DomainError(f"window length must be >= 2, got {k}")
    diagonal = (0,) * ((1 << k) - 1) + (1,)
    return LocalOperatorMatrix(k=k, diagonal=diagonal)


def run_mask(index: int, k: int) -> int:
    """Bitmask whose bit p is set iff bits p..p+k-1 of ``index`` are all set.

    Shift-and-mask with doubling, so the cost is O(log k) word operations
    rather than O(n*k) per state.
    """
    mask = index
    got = 1
    while got < k and mask:
        step = min(got, k - got)
        mask &= mask >> step
        got += step
    return mask if got >= k else 0


def window_energy(state: BasisState, i: int, k: int) -> int:
    """1 iff sites i..i+k-1 of ``state`` are all 1, else 0 (i is 1-based)."""
    if k < 2:
        raise DomainError(f"window length must be >= 2, got {k}")
    if not 1 <= i <= state.n - k + 1:
        raise DomainError(
            f"window start {i} out of range [1, {state.n - k + 1}] "
            f"for n={state.n}, k={k}"
        )
    mask = ((1 << k) - 1) << (state.n - i - k + 1)
    return 1 if (state.index & mask) == mask else 0


def total_energy(state: BasisState, spec: LatticeSpec) -> int:
    """Energy eigenvalue of ``state``: the number of all-ones k-windows.

    Equals the sum of :func:`window_energy` over every window position;
    0 when n < k because no windows exist.
    """
    if state.n != spec.n:
        raise ContractError(
            f"state has {state.n} sites but the lattice expects {spec.n}"
        )
    if spec.n < spec.k:
        return 0
    return run_mask(state.index, spec.k).bit_count()

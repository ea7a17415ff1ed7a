"""Explicit 2^n x 2^n Hamiltonian built by Kronecker lifting, for small n.

This is the verification oracle: it constructs H = sum_i I x ... x A x ... x I
(window projector A on sites i..i+k-1) as a dense integer matrix and checks
the structural claims — diagonality, symmetry, realness, non-negativity,
kernel/image complementarity — directly against it.  Exact integer arithmetic
throughout; no floating-point eigensolvers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import LatticeSpec, LocalOperatorMatrix, local_matrix
from .errors import CapacityError, DomainError

#: Largest dense dimension kept desk-scale: 2^12 = 4096.
DENSE_CAP = 12


@dataclass(frozen=True)
class DenseHamiltonian:
    """Dense integer matrix of the chain Hamiltonian."""

    n: int
    k: int
    entries: np.ndarray


@dataclass(frozen=True)
class StructureReport:
    diagonal: bool
    symmetric: bool
    hermitian_real: bool
    nonnegative: bool

    @property
    def all_hold(self) -> bool:
        return self.diagonal and self.symmetric and self.hermitian_real and self.nonnegative


@dataclass(frozen=True)
class KernelImageReport:
    dim_ker: int
    dim_im: int
    orthogonal: bool
    complete: bool


def kron(a, b) -> np.ndarray:
    """Kronecker product: block (r, c) of the result is a[r, c] * b.

    For an m x n ``a`` and j x k ``b`` the result is mj x nk.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or b.ndim != 2:
        raise DomainError("kron expects two 2-D matrices")
    if a.size == 0 or b.size == 0:
        raise DomainError("kron is undefined for empty matrices")
    m, n = a.shape
    j, k = b.shape
    return (a[:, None, :, None] * b[None, :, None, :]).reshape(m * j, n * k)


def build_dense(spec: LatticeSpec, local: LocalOperatorMatrix | None = None) -> DenseHamiltonian:
    """Materialize the full Hamiltonian by summing Kronecker-lifted windows.

    ``local`` overrides the window projector (used for fault injection in the
    verification suite); by default it is local_matrix(spec.k).  Capped at
    n = 12 (4096 x 4096).
    """
    if spec.n > DENSE_CAP:
        raise CapacityError(
            f"dense construction is capped at n = {DENSE_CAP}, got n = {spec.n}",
            cap=DENSE_CAP,
            hint="the counting methods have no dense cap",
        )
    if local is None:
        local = local_matrix(spec.k)
    elif local.k != spec.k:
        raise DomainError(
            f"local operator is for window length {local.k}, lattice has {spec.k}"
        )
    dim = spec.dimension
    h = np.zeros((dim, dim), dtype=np.int64)
    a = np.diag(np.asarray(local.diagonal, dtype=np.int64))
    for i in range(1, spec.num_windows + 1):
        left = np.eye(1 << (i - 1), dtype=np.int64)
        right = np.eye(1 << (spec.n - i - spec.k + 1), dtype=np.int64)
        h += kron(kron(left, a), right)
    return DenseHamiltonian(n=spec.n, k=spec.k, entries=h)


def check_structure(h: DenseHamiltonian) -> StructureReport:
    """Verify diagonality, symmetry, realness, and non-negativity.

    Each flag is computed independently: diagonality by scanning
    off-diagonals, symmetry by transpose comparison, Hermitian-realness by
    symmetry plus integer entries, non-negativity by a diagonal scan (a valid
    semidefiniteness certificate once diagonality holds).
    """
    e = h.entries
    diag = np.diagonal(e)
    diagonal = int(np.count_nonzero(e)) == int(np.count_nonzero(diag))
    symmetric = bool(np.array_equal(e, e.T))
    hermitian_real = symmetric and np.issubdtype(e.dtype, np.integer)
    nonnegative = bool(np.all(diag >= 0))
    return StructureReport(
        diagonal=diagonal,
        symmetric=symmetric,
        hermitian_real=hermitian_real,
        nonnegative=nonnegative,
    )


def kernel_vs_image(h: DenseHamiltonian) -> KernelImageReport:
    """Kernel and image dimensions of a diagonal H, with orthogonality check.

    The kernel basis vectors are the standard vectors at zero diagonal
    entries and the image is spanned by the columns at nonzero entries, so
    orthogonality reduces to the kernel-row/image-column submatrix being
    zero; that is checked explicitly rather than assumed.
    """
    e = h.entries
    diag = np.diagonal(e)
    ker_idx = np.flatnonzero(diag == 0)
    im_idx = np.flatnonzero(diag != 0)
    if ker_idx.size and im_idx.size:
        orthogonal = not np.any(e[np.ix_(ker_idx, im_idx)])
    else:
        orthogonal = True
    return KernelImageReport(
        dim_ker=int(ker_idx.size),
        dim_im=int(im_idx.size),
        orthogonal=bool(orthogonal),
        complete=int(ker_idx.size + im_idx.size) == e.shape[0],
    )


def diagonal_csv(h: DenseHamiltonian) -> str:
    """The diagonal as one line of comma-separated integers (golden files)."""
    return ",".join(str(int(v)) for v in np.diagonal(h.entries))

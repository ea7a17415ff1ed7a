"""Exact ground-state degeneracy toolkit for projector-sum qubit chains.

Builds diagonal projector-sum Hamiltonians on qubit chains, counts their
zero-energy states by three independent exact methods, verifies the dense
Kronecker construction against the counts, and analyzes the per-site
asymptotics through characteristic-polynomial roots and Pisot checks.
"""

from .core import (
    ENUMERATION_CAP,
    BasisState,
    LatticeSpec,
    LocalOperatorMatrix,
    local_matrix,
    total_energy,
    window_energy,
)
from .degeneracy import (
    MODULAR_CAP,
    DegeneracyResult,
    IdentityCheck,
    RecurrenceSeeds,
    count_enumerate,
    count_modular,
    count_recurrence,
    fibonacci,
    identity_check,
    kernel_basis,
)
from .dense import (
    DENSE_CAP,
    DenseHamiltonian,
    KernelImageReport,
    StructureReport,
    build_dense,
    check_structure,
    diagonal_csv,
    kernel_vs_image,
    kron,
)
from .errors import (
    CapacityError,
    ContractError,
    DomainError,
    QdegenError,
    RootFindingError,
    UnsupportedMethodError,
)
from .spectral import (
    ROOTS_K_CAP,
    BinetEstimate,
    CharPoly,
    ConvergencePoint,
    PisotReport,
    RootSolve,
    all_roots,
    binet_estimate,
    dominant_root,
    per_site_sequence,
    pisot_check,
    solve_all_roots,
)

__version__ = "0.1.0"

__all__ = [
    "BasisState",
    "BinetEstimate",
    "CapacityError",
    "CharPoly",
    "ContractError",
    "ConvergencePoint",
    "DegeneracyResult",
    "DenseHamiltonian",
    "DomainError",
    "IdentityCheck",
    "KernelImageReport",
    "LatticeSpec",
    "LocalOperatorMatrix",
    "PisotReport",
    "QdegenError",
    "RecurrenceSeeds",
    "RootFindingError",
    "RootSolve",
    "StructureReport",
    "UnsupportedMethodError",
    "all_roots",
    "binet_estimate",
    "build_dense",
    "check_structure",
    "count_enumerate",
    "count_modular",
    "count_recurrence",
    "diagonal_csv",
    "dominant_root",
    "fibonacci",
    "identity_check",
    "kernel_basis",
    "kernel_vs_image",
    "kron",
    "local_matrix",
    "per_site_sequence",
    "pisot_check",
    "solve_all_roots",
    "total_energy",
    "window_energy",
    "ENUMERATION_CAP",
    "MODULAR_CAP",
    "DENSE_CAP",
    "ROOTS_K_CAP",
]

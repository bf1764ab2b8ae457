"""Small dense complex linear algebra: kets, operators and density matrices.

Kets are 1-D ``complex128`` arrays, operators are 2-D ``complex128`` arrays.
Tensor products use the first factor as the slow (major) index, so
``|i> (x) |j>`` lives at flat index ``i * d2 + j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import DimensionMismatch, InvalidInput, NotHermitian, NotPositive, TraceNotOne

NORM_ATOL = 1e-12
DENSITY_ATOL = 1e-10


def as_matrix(m) -> np.ndarray:
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2:
        raise InvalidInput(f"expected a 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInput("matrix has non-finite entries")
    return arr


def ket(amplitudes) -> np.ndarray:
    """Return ``amplitudes`` as a finite 1-D complex array (not normalized)."""
    v = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
    if v.size == 0 or not np.all(np.isfinite(v)):
        raise InvalidInput("ket must be non-empty and finite")
    return v


def basis_ket(dim: int, index: int) -> np.ndarray:
    v = np.zeros(dim, dtype=np.complex128)
    v[index] = 1.0
    return v


def normalize(v) -> np.ndarray:
    v = ket(v)
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise InvalidInput("cannot normalize the zero vector")
    return v / norm


def tensor(*factors) -> np.ndarray:
    """Kronecker product of kets or matrices, left factor major."""
    if not factors:
        raise InvalidInput("tensor() needs at least one factor")
    return reduce(np.kron, (np.asarray(f, dtype=np.complex128) for f in factors))


def projector(v) -> np.ndarray:
    """Rank-one projector ``|v><v|``; ``v`` must already be normalized."""
    v = ket(v)
    if abs(np.vdot(v, v).real - 1.0) > NORM_ATOL:
        raise InvalidInput("projector() requires a normalized ket")
    return np.outer(v, v.conj())


def dagger(m) -> np.ndarray:
    return np.asarray(m).conj().T


def hermitian_eigh(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and column eigenvectors of a Hermitian matrix."""
    m = as_matrix(m)
    # symmetrize so rounding noise in the input cannot leak into the spectrum
    return np.linalg.eigh((m + dagger(m)) / 2)


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """A validated density matrix. Construct through :func:`validate_density`."""

    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def eigenvalues(self) -> np.ndarray:
        return hermitian_eigh(self.matrix)[0]

    def expectation(self, operator) -> float:
        return float(np.trace(self.matrix @ operator).real)


def validate_density(m, atol: float = DENSITY_ATOL) -> DensityOperator:
    """Check that ``m`` is a density matrix and wrap it.

    Raises NotHermitian, TraceNotOne or NotPositive, each carrying the
    measured deviation.
    """
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"density matrix must be square, got {m.shape}")
    herm_dev = float(np.max(np.abs(m - dagger(m))))
    if herm_dev > atol:
        raise NotHermitian(herm_dev)
    trace_dev = abs(complex(np.trace(m)) - 1.0)
    if trace_dev > atol:
        raise TraceNotOne(trace_dev, f"trace = {np.trace(m).real:.12g}")
    lowest = float(hermitian_eigh(m)[0][0])
    if lowest < -atol:
        raise NotPositive(-lowest, f"smallest eigenvalue {lowest:.3e}")
    frozen = m.copy()
    frozen.setflags(write=False)
    return DensityOperator(frozen)


def _matrix_of(rho) -> np.ndarray:
    return rho.matrix if isinstance(rho, DensityOperator) else as_matrix(rho)


def trace_distance(a, b) -> float:
    """Half the trace norm of ``a - b``."""
    ma, mb = _matrix_of(a), _matrix_of(b)
    if ma.shape != mb.shape:
        raise DimensionMismatch(f"shapes differ: {ma.shape} vs {mb.shape}")
    eigs = hermitian_eigh(ma - mb)[0]
    return float(0.5 * np.sum(np.abs(eigs)))


def partial_trace(rho, dims: tuple[int, int], keep: int) -> np.ndarray:
    """Reduced state of party ``keep`` (1 or 2) of a bipartite operator."""
    d1, d2 = dims
    r = _matrix_of(rho).reshape(d1, d2, d1, d2)
    if keep == 1:
        return np.einsum("ijkj->ik", r)
    if keep == 2:
        return np.einsum("ijil->jl", r)
    raise InvalidInput("keep must be 1 or 2")

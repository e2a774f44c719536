"""Dense complex linear algebra for small quantum systems (dimension <= 16).

All carriers are plain numpy complex128 arrays. Composite indices are
big-endian over the subsystem list: the first subsystem is the most
significant digit, which matches numpy's kron/reshape ordering. Every
function here is pure, so concurrent callers never interfere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
EIG_CLAMP = 1e-12  # eigenvalues with |lam| below this count as exact zeros
EIG_NEG_TOL = 1e-10  # most negative eigenvalue tolerated on a density matrix

_JACOBI_TOL = 1e-14
_JACOBI_MAX_SWEEPS = 100


class NonHermitianError(ValueError):
    """Raised when an operation that requires a Hermitian matrix gets one that is not."""


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with complex output."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace matrix together with its subsystem dimensions."""

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=complex)
        dims = tuple(int(d) for d in self.dims)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {m.shape}")
        if not dims or any(d < 1 for d in dims) or math.prod(dims) != m.shape[0]:
            raise ValueError(f"subsystem dims {dims} do not factor dimension {m.shape[0]}")
        if np.abs(m - m.conj().T).max() > HERMITICITY_TOL:
            raise NonHermitianError("matrix is not Hermitian within 1e-12")
        tr = complex(m.trace())
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"trace must be 1 within 1e-12, got {tr}")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def partial_trace(rho: DensityMatrix, keep) -> DensityMatrix:
    """Reduce onto the kept subsystems, summing out the rest.

    `keep` is any nonempty collection of subsystem indices; the kept
    subsystems stay in their original order.
    """
    n = len(rho.dims)
    kept = sorted({int(k) for k in keep})
    if not kept:
        raise ValueError("keep must name at least one subsystem")
    if kept[0] < 0 or kept[-1] >= n:
        raise ValueError(f"keep indices {kept} out of range for {n} subsystems")
    if len(kept) == n:
        return rho
    dims = list(rho.dims)
    t = rho.matrix.reshape(dims + dims)
    # trace removes an axis pair but leaves the order of the others alone
    for ax in reversed([i for i in range(n) if i not in kept]):
        t = np.trace(t, axis1=ax, axis2=ax + len(dims))
        del dims[ax]
    d = math.prod(dims)
    return DensityMatrix(t.reshape(d, d), tuple(dims))


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, ascending.

    Cyclic Jacobi: each rotation is a phase times a plane rotation that
    zeroes one off-diagonal pair exactly; sweeps repeat until the largest
    off-diagonal magnitude falls below 1e-14 (scaled up only for matrices
    far above unit entry scale), capped at 100 sweeps.
    """
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if np.abs(a - a.conj().T).max() > HERMITICITY_TOL:
        raise NonHermitianError("matrix is not Hermitian within 1e-12")
    n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0].real])
    tol = _JACOBI_TOL * max(1.0, float(np.abs(a).max()))
    for _ in range(_JACOBI_MAX_SWEEPS):
        off = a - np.diag(np.diag(a))
        if np.abs(off).max() <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = a[p, q]
                h = abs(g)
                if h <= tol:
                    continue
                theta = 0.5 * math.atan2(2.0 * h, (a[p, p] - a[q, q]).real)
                c = math.cos(theta)
                s = math.sin(theta)
                phase = g / h
                pc = phase.conjugate()
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p + pc * s * col_q
                a[:, q] = -s * col_p + pc * c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p + phase * s * row_q
                a[q, :] = -s * row_p + phase * c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    else:
        raise ArithmeticError("Jacobi eigensolver did not converge within 100 sweeps")
    return np.sort(np.diag(a).real)

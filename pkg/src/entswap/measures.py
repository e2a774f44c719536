"""Complementarity quantifiers and the triality bookkeeping for one state.

All entropic quantities are in bits. The two sums C_re + P_vn + S_vn and
C_hs + P_l + S_l are reported exactly as computed, never coerced to their
bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import EIG_CLAMP, EIG_NEG_TOL, DensityMatrix, hermitian_eigenvalues


@dataclass(frozen=True)
class MeasureReport:
    """Every quantifier of one density matrix plus the two triality sums."""

    c_re: float
    p_vn: float
    s_vn: float
    vn_sum: float
    c_hs: float
    p_l: float
    s_l: float
    l_sum: float
    dim: int


def _entropy_bits(eigs) -> float:
    total = 0.0
    for lam in eigs:
        lam = float(lam)
        if lam < -EIG_NEG_TOL:
            raise ValueError(f"eigenvalue {lam} is below -1e-10; not a density matrix")
        if lam < EIG_CLAMP:  # tiny magnitudes count as exact zeros, 0*log(0) = 0
            continue
        total -= lam * math.log2(lam)
    return total


def svn(rho: DensityMatrix) -> float:
    """von Neumann entropy -Tr(rho log2 rho)."""
    return _entropy_bits(hermitian_eigenvalues(rho.matrix))


def sl(rho: DensityMatrix) -> float:
    """Linear entropy 1 - Tr(rho^2)."""
    return float(1.0 - np.trace(rho.matrix @ rho.matrix).real)


def diagonal_part(rho: DensityMatrix) -> DensityMatrix:
    """Same diagonal, zero off-diagonals."""
    return DensityMatrix(np.diag(np.diag(rho.matrix)), rho.dims)


def cre(rho: DensityMatrix) -> float:
    """Relative entropy of coherence S(rho_diag) - S(rho)."""
    return svn(diagonal_part(rho)) - svn(rho)


def chs(rho: DensityMatrix) -> float:
    """Hilbert-Schmidt coherence: summed squared magnitudes off the diagonal."""
    sq = np.abs(rho.matrix) ** 2
    return float(sq.sum() - np.trace(sq))


def pvn(rho: DensityMatrix) -> float:
    """Predictability log2(d) - S(rho_diag)."""
    return math.log2(rho.dim) - svn(diagonal_part(rho))


def pl(rho: DensityMatrix) -> float:
    """Linear predictability (d-1)/d - S_l(rho_diag)."""
    d = rho.dim
    return (d - 1) / d - sl(diagonal_part(rho))


def report(rho: DensityMatrix) -> MeasureReport:
    """All quantifiers at once."""
    diag = diagonal_part(rho)
    s = svn(rho)
    s_diag = svn(diag)
    d = rho.dim
    c_re = s_diag - s
    p_vn = math.log2(d) - s_diag
    s_l = sl(rho)
    c_hs = chs(rho)
    p_l = (d - 1) / d - sl(diag)
    return MeasureReport(
        c_re=c_re,
        p_vn=p_vn,
        s_vn=s,
        vn_sum=c_re + p_vn + s,
        c_hs=c_hs,
        p_l=p_l,
        s_l=s_l,
        l_sum=c_hs + p_l + s_l,
        dim=d,
    )

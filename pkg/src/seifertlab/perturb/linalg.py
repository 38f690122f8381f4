"""Small helpers for symmetric eigen-analysis: inertia, kernels, pseudo-inverse."""

from __future__ import annotations

import numpy as np

__all__ = ["inertia_counts", "kernel_basis", "pinv_solve"]


def inertia_counts(evals: np.ndarray, gap: float) -> tuple[int, int, int]:
    """(negative, near-zero, positive) eigenvalue counts with band |x| <= gap."""
    neg = int(np.sum(evals < -gap))
    null = int(np.sum(np.abs(evals) <= gap))
    pos = int(np.sum(evals > gap))
    return neg, null, pos


def kernel_basis(H: np.ndarray, rtol: float = 1e-8) -> np.ndarray:
    """Orthonormal basis (columns) of the numerical kernel of symmetric H.

    The cutoff is relative: eigenvalues of magnitude <= rtol * max|eig| count
    as zero.  Returns a (d, k) array, possibly with k = 0.
    """
    evals, vecs = np.linalg.eigh(np.asarray(H, dtype=float))
    scale = float(np.max(np.abs(evals))) if evals.size else 0.0
    cutoff = rtol * max(scale, 1e-300)
    mask = np.abs(evals) <= cutoff
    return vecs[:, mask]


def pinv_solve(H: np.ndarray, b: np.ndarray, rtol: float = 1e-8) -> np.ndarray:
    """Minimal-norm least-squares solution of H x = b for symmetric H.

    Spectral pseudo-inverse with relative rank cutoff rtol * max|eig|; kernel
    directions receive no component, which is what makes the solution
    minimal-norm.
    """
    H = np.asarray(H, dtype=float)
    b = np.asarray(b, dtype=float)
    evals, vecs = np.linalg.eigh(H)
    scale = float(np.max(np.abs(evals))) if evals.size else 0.0
    cutoff = rtol * max(scale, 1e-300)
    coeffs = vecs.T @ b
    inv = np.where(np.abs(evals) > cutoff, coeffs / np.where(evals == 0, 1.0, evals), 0.0)
    return vecs @ inv

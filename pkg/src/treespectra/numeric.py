"""Floating-point spectral routines, independent of the exact module.

The eigensolver is a cyclic Jacobi iteration written out in full so the
numeric route shares no code with the exact one; the two are compared
against each other in the test suite.  Vectors are indexed by
``label - 1`` throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyInput, NoConvergence, NonSymmetric, ZeroVector
from .exact import laplacian
from .trees import Tree

__all__ = [
    "Spectrum",
    "eigen_symmetric",
    "cluster_multiplicity",
    "residual_norm",
    "numeric_rank",
]

_SWEEP_CAP = 100


@dataclass(frozen=True)
class Spectrum:
    """Sorted eigenvalues plus their clustering at tolerance ``tau``.

    ``clusters`` holds (representative, multiplicity) pairs where the
    representative is the cluster mean; consecutive eigenvalues belong to
    one cluster while their gap stays within tau.  ``vectors`` (when
    requested) has one orthonormal column per eigenvalue, in the same
    order.
    """

    eigenvalues: tuple[float, ...]
    clusters: tuple[tuple[float, int], ...]
    tau: float
    vectors: np.ndarray | None = field(default=None, compare=False, repr=False)


def eigen_symmetric(matrix, tol: float = 1e-12, want_vectors: bool = False) -> Spectrum:
    """Diagonalize a symmetric matrix by cyclic Jacobi rotations.

    Convergence: off-diagonal Frobenius mass below ``tol`` times the
    Frobenius norm of the input, within 100 sweeps (else NoConvergence).
    The clustering tolerance is ``tau = max(1e-8, 1e3 * tol * ||M||)``.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSymmetric(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise NonSymmetric("matrix is not symmetric")
    n = a.shape[0]
    norm = float(np.linalg.norm(a))
    vecs = np.eye(n) if want_vectors else None

    off_mask = ~np.eye(n, dtype=bool)
    sweeps = 0
    while True:
        # Off-diagonal Frobenius mass measured directly; subtracting the
        # diagonal from the full norm would cancel catastrophically.
        off = float(np.linalg.norm(a[off_mask]))
        if off <= tol * norm:
            break
        if sweeps >= _SWEEP_CAP:
            raise NoConvergence(f"off-diagonal mass {off:.3e} after {sweeps} sweeps")
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:  # theta**2 would overflow; use the limit
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                a[p, q] = a[q, p] = 0.0
                if vecs is not None:
                    vp = vecs[:, p].copy()
                    vq = vecs[:, q].copy()
                    vecs[:, p] = c * vp - s * vq
                    vecs[:, q] = s * vp + c * vq
        sweeps += 1

    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    if vecs is not None:
        vecs = vecs[:, order]

    tau = max(1e-8, 1e3 * tol * norm)
    clusters = _cluster(eigenvalues, tau)
    return Spectrum(
        eigenvalues=tuple(float(x) for x in eigenvalues),
        clusters=clusters,
        tau=tau,
        vectors=vecs,
    )


def _cluster(sorted_values, tau: float) -> tuple[tuple[float, int], ...]:
    clusters = []
    start = 0
    for i in range(1, len(sorted_values) + 1):
        if i == len(sorted_values) or sorted_values[i] - sorted_values[i - 1] > tau:
            block = sorted_values[start:i]
            clusters.append((float(np.mean(block)), len(block)))
            start = i
    return tuple(clusters)


def cluster_multiplicity(spectrum: Spectrum, value: float) -> int:
    """Multiplicity of the cluster containing ``value`` (0 if none is close)."""
    for rep, mult in spectrum.clusters:
        if abs(rep - value) <= spectrum.tau:
            return mult
    return 0


def residual_norm(tree: Tree, lam: float, vector) -> float:
    """max-norm of L*x - lam*x, scaled by the max-norm of x."""
    x = np.asarray(vector, dtype=float)
    scale = float(np.max(np.abs(x))) if x.size else 0.0
    if scale == 0.0:
        raise ZeroVector("residual of the zero vector is undefined")
    lap = np.array(laplacian(tree), dtype=float)
    res = lap @ x - lam * x
    return float(np.max(np.abs(res)) / scale)


def numeric_rank(vectors, tol: float = 1e-10) -> int:
    """Numerical rank of a family of vectors (rows), by pivoted orthogonalization.

    A column counts toward the rank while its projection onto the
    complement of the span so far exceeds ``tol`` times the largest
    original column norm.
    """
    vectors = list(vectors)
    if not vectors:
        raise EmptyInput("rank of an empty family is undefined")
    v = np.array(vectors, dtype=float).T  # columns are the vectors
    norms0 = np.linalg.norm(v, axis=0)
    ref = float(np.max(norms0))
    if ref == 0.0:
        return 0
    remaining = list(range(v.shape[1]))
    rank = 0
    while remaining:
        norms = {j: float(np.linalg.norm(v[:, j])) for j in remaining}
        best = max(remaining, key=lambda j: norms[j])
        if norms[best] <= tol * ref:
            break
        u = v[:, best] / norms[best]
        remaining.remove(best)
        for j in remaining:
            v[:, j] -= (u @ v[:, j]) * u
        rank += 1
    return rank

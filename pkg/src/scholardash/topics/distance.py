"""Intertopic distances and their 2D projection.

Topic pairs are compared with Jensen-Shannon divergence (natural log,
so values live in [0, log 2]), and the divergence matrix is embedded
with classical multidimensional scaling (principal coordinates).
"""
from __future__ import annotations

import numpy as np


def _kl(p: np.ndarray, m: np.ndarray) -> float:
    mask = p > 0
    return float(np.sum(p[mask] * np.log(p[mask] / m[mask])))


def jensen_shannon(p, q) -> float:
    """JSD(p, q) = 0.5*KL(p||m) + 0.5*KL(q||m) with m the midpoint."""
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    m = 0.5 * (p + q)
    return 0.5 * _kl(p, m) + 0.5 * _kl(q, m)


def jsd_matrix(rows: np.ndarray) -> np.ndarray:
    """Symmetric zero-diagonal divergence matrix over distribution rows."""
    n = rows.shape[0]
    dist = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i + 1, n):
            d = jensen_shannon(rows[i], rows[j])
            dist[i, j] = d
            dist[j, i] = d
    return dist


def principal_coordinates(dist: np.ndarray, n_components: int = 2) -> np.ndarray:
    """Classical MDS of a distance matrix.

    Double-centers -0.5*D^2, keeps the top eigenpairs, scales
    eigenvectors by sqrt(eigenvalue). Negative eigenvalues (the matrix
    need not be Euclidean) clamp to zero, collapsing that axis.
    """
    squared = -0.5 * dist.astype(np.float64) ** 2
    row_means = squared.mean(axis=1, keepdims=True)
    col_means = squared.mean(axis=0, keepdims=True)
    centered = squared - row_means - col_means + squared.mean()
    eigvals, eigvecs = np.linalg.eigh(centered)
    order = np.argsort(eigvals)[::-1][:n_components]
    scale = np.sqrt(np.clip(eigvals[order], 0.0, None))
    return eigvecs[:, order] * scale


def project_topics(phi: np.ndarray, marginal: np.ndarray) -> np.ndarray:
    """K x 2 topic positions with a deterministic orientation.

    Eigenvector signs are arbitrary, so each axis is flipped to make the
    heaviest topic's coordinate non-negative (falling back to the first
    topic with a nonzero coordinate when the heaviest sits at zero).
    """
    coords = principal_coordinates(jsd_matrix(phi), n_components=2)
    anchor = int(np.argmax(marginal))
    for axis in range(coords.shape[1]):
        value = coords[anchor, axis]
        if value == 0.0:
            nonzero = np.nonzero(coords[:, axis])[0]
            if nonzero.size == 0:
                continue
            value = coords[nonzero[0], axis]
        if value < 0:
            coords[:, axis] = -coords[:, axis]
    return coords

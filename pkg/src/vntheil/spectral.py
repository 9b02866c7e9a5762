"""Graph density matrices and their von Neumann / Renyi entropies.

All entropies are in nats, with ``0 ln 0 = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyGraph, InvalidOrder, NotPSDAfterClamp, NotSymmetric
from .graph import Graph, laplacian

SYMMETRY_TOL = 1e-12
CLAMP_TOL = 1e-10


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues; ``clamped_count`` tiny negatives were lifted to zero."""

    eigenvalues: np.ndarray
    clamped_count: int = 0

    def __len__(self):
        return len(self.eigenvalues)

    def zero_multiplicity(self, tol: float = 1e-9) -> int:
        scale = max(1.0, float(np.max(np.abs(self.eigenvalues), initial=0.0)))
        return int(np.sum(np.abs(self.eigenvalues) <= tol * scale))


def density_matrix(g: Graph) -> np.ndarray:
    """``L / trace(L)``; the trace is ``2m``."""
    if g.m == 0:
        raise EmptyGraph("graph has no edges; its Laplacian has zero trace")
    return laplacian(g) / (2.0 * g.m)


def eigenvalues_sym(matrix, psd: bool = True) -> Spectrum:
    """Eigenvalues of a real symmetric matrix, sorted ascending.

    With ``psd=True`` negatives inside ``[-1e-10 * max(1, lambda_max), 0)`` are
    set to zero and counted; anything more negative raises NotPSDAfterClamp.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a), initial=0.0)))
    if a.size and np.max(np.abs(a - a.T)) > SYMMETRY_TOL * scale:
        raise NotSymmetric("matrix is not symmetric within tolerance")
    lam = np.linalg.eigvalsh(a)  # LAPACK syevd, ascending
    if not psd:
        return Spectrum(lam, 0)
    window = CLAMP_TOL * max(1.0, float(lam[-1]) if lam.size else 1.0)
    if lam.size and lam[0] < -window:
        raise NotPSDAfterClamp(f"eigenvalue {lam[0]:.3e} below clamp window -{window:.1e}")
    neg = lam < 0
    lam = np.where(neg, 0.0, lam)
    return Spectrum(lam, int(np.count_nonzero(neg)))


def density_spectrum(g: Graph) -> Spectrum:
    return eigenvalues_sym(density_matrix(g))


def _spectrum_of(rho) -> np.ndarray:
    if isinstance(rho, Spectrum):
        return rho.eigenvalues
    if isinstance(rho, Graph):
        return density_spectrum(rho).eigenvalues
    return eigenvalues_sym(rho).eigenvalues


def shannon_entropy(probs) -> float:
    p = np.asarray(probs, dtype=float)
    p = p[p > 0]
    return float(-np.sum(p * np.log(p)))


def von_neumann_entropy(rho) -> float:
    """``-sum(lambda ln lambda)`` over the spectrum of ``rho``.

    ``rho`` may be a density matrix, a precomputed :class:`Spectrum`, or a Graph.
    """
    return shannon_entropy(_spectrum_of(rho))


def renyi_entropy(rho, p: float) -> float:
    """``ln(sum(lambda**p)) / (1 - p)`` for order ``p > 0``, ``p != 1``."""
    if not p > 0 or p == 1:
        raise InvalidOrder(f"Renyi order must be positive and not 1, got {p}")
    lam = _spectrum_of(rho)
    lam = lam[lam > 0]
    return float(np.log(np.sum(lam**p)) / (1.0 - p))


def renyi2_entropy_degree_form(d) -> float:
    """Order-2 Renyi entropy of a graph from its degrees alone.

    ``Tr(rho^2) = (sum d + sum d^2) / (sum d)^2`` since ``Tr(L^2) = sum(d_i^2 + d_i)``.
    """
    d = np.asarray(d, dtype=float)
    s = d.sum()
    if s <= 0:
        raise EmptyGraph("degree sum is zero")
    return float(np.log(s * s / (s + np.dot(d, d))))

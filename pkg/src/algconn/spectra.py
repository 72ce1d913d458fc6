"""Laplacian spectra: full eigendecompositions, algebraic connectivity, Fiedler vectors.

The Laplacian of a graph is L = D - A (degree matrix minus adjacency).  Its
eigenvalues are reported in descending order lambda_1 >= ... >= lambda_n = 0;
the second-smallest, lambda_{n-1}, is the algebraic connectivity alpha, which
is positive exactly when the graph is connected.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedGraphError, NumericalError
from .graphs import Graph, complement, is_connected

__all__ = [
    "Spectrum",
    "FiedlerVector",
    "laplacian",
    "eig_sym",
    "algebraic_connectivity",
    "fiedler_vector",
    "lambda_max",
    "complement_alpha_check",
    "MULTIPLICITY_TOL",
]

#: Eigenvalues within this distance of alpha count toward its multiplicity.
MULTIPLICITY_TOL = 1e-7

_SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending with an aligned orthonormal eigenvector set."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def alpha(self) -> float:
        """Second-smallest eigenvalue (lambda_{n-1})."""
        if self.n < 2:
            raise ValueError("alpha needs order >= 2")
        return float(self.eigenvalues[-2])


@dataclass(frozen=True)
class FiedlerVector:
    """Unit eigenvector for alpha, sign-normalized, with the eigenvalue's multiplicity."""

    values: np.ndarray
    alpha: float
    multiplicity: int


def laplacian(g: Graph) -> np.ndarray:
    """Laplacian matrix D - A as a dense float array with exact zero row sums."""
    out = np.zeros((g.n, g.n))
    for v in range(g.n):
        row = g.rows[v]
        for u in range(g.n):
            if row >> u & 1:
                out[v, u] = -1.0
        out[v, v] = float(row.bit_count())
    return out


def eig_sym(m: np.ndarray, tol: float = 1e-8) -> Spectrum:
    """Full eigendecomposition of a symmetric matrix, eigenvalues descending.

    Backed by LAPACK via numpy.  The input must be symmetric to within
    1e-12; the result is residual-checked against `tol` (scaled by the
    matrix norm) so a failed factorization cannot go unnoticed.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    asym = np.max(np.abs(m - m.T)) if m.size else 0.0
    if asym > _SYMMETRY_TOL:
        raise ValueError(f"matrix not symmetric: max asymmetry {asym:.3e}")
    try:
        vals, vecs = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver did not converge: {exc}") from None
    vals = vals[::-1].copy()
    vecs = vecs[:, ::-1].copy()
    scale = max(1.0, float(np.linalg.norm(m)))
    resid = np.max(np.abs(m @ vecs - vecs * vals))
    if resid > tol * scale:
        raise NumericalError(f"residual {resid:.3e} exceeds {tol:.1e} * norm")
    return Spectrum(vals, vecs)


def algebraic_connectivity(g: Graph) -> float:
    """alpha(g) = lambda_{n-1} of the Laplacian; exactly 0 for disconnected graphs."""
    if g.n < 2:
        raise ValueError("algebraic connectivity needs order >= 2")
    if not is_connected(g):
        # Structural zero; skips eigensolver noise around the double root at 0.
        return 0.0
    vals = np.linalg.eigvalsh(laplacian(g))
    return float(vals[1])


def fiedler_vector(g: Graph) -> FiedlerVector:
    """Unit eigenvector for alpha, orthogonal to the all-ones vector.

    The sign is fixed so the first coordinate of nonnegligible size is
    positive.  `multiplicity` counts eigenvalues within MULTIPLICITY_TOL of
    alpha; sign-structure conclusions are only meaningful when it is 1.
    """
    if g.n < 2:
        raise ValueError("Fiedler vector needs order >= 2")
    if not is_connected(g):
        raise DisconnectedGraphError("Fiedler vector undefined for disconnected graphs")
    spec = eig_sym(laplacian(g))
    vals = spec.eigenvalues
    alpha = spec.alpha
    vec = spec.eigenvectors[:, -2].copy()
    multiplicity = int(np.sum(np.abs(vals - alpha) <= MULTIPLICITY_TOL))
    for x in vec:
        if abs(x) > 1e-9:
            if x < 0:
                vec = -vec
            break
    return FiedlerVector(vec, alpha, multiplicity)


def lambda_max(g: Graph) -> float:
    """Largest Laplacian eigenvalue lambda_1 (0 for a single vertex)."""
    vals = np.linalg.eigvalsh(laplacian(g))
    return float(vals[-1])


def complement_alpha_check(g: Graph) -> tuple[float, float]:
    """Return (alpha(g), n - lambda_1 of the complement).

    L(G) + L(G-complement) = n*I - J, so the two values agree for every
    graph; comparing them cross-checks the eigensolver against itself on a
    different matrix.
    """
    if g.n < 2:
        raise ValueError("needs order >= 2")
    return algebraic_connectivity(g), g.n - lambda_max(complement(g))

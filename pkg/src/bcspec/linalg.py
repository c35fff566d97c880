"""Dense complex linear algebra over C1.

Everything the componentwise bicomplex computations need: determinants,
rank-revealing nullspaces and column spaces, an eigensolver with
multiplicity clustering, and subspace sum/intersection arithmetic.
Factorizations are delegated to LAPACK (partially pivoted LU for
determinants, Hessenberg + shifted QR with deflation for eigenvalues,
column-pivoted QR for rank decisions).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ConvergenceError, NonSquareError
from .core import DEFAULT_TOL

#: Default relative tolerance for merging eigenvalues into multiplicities and
#: for membership tests against a spectrum.  Shared with the spectra module.
DEFAULT_CLUSTER_TOL = 1e-8


def as_cmatrix(a) -> np.ndarray:
    """Coerce to a finite 2-d complex128 array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got ndim={m.ndim}")
    if not (np.all(np.isfinite(m.real)) and np.all(np.isfinite(m.imag))):
        raise ValueError("matrix entries must be finite")
    return m


def frobenius(a) -> float:
    return float(np.linalg.norm(np.asarray(a)))


def _require_square(a: np.ndarray, op: str) -> int:
    if a.shape[0] != a.shape[1]:
        raise NonSquareError(f"{op} requires a square matrix, got shape {a.shape}")
    return a.shape[0]


@dataclass(eq=False)
class CSubspace:
    """Subspace of C1^n held as an orthonormal basis (columns); may be zero-dimensional."""

    ambient_dim: int
    basis: np.ndarray  # shape (ambient_dim, dim), orthonormal columns

    def __post_init__(self):
        self.basis = np.asarray(self.basis, dtype=np.complex128)
        if self.basis.ndim != 2 or self.basis.shape[0] != self.ambient_dim:
            raise ValueError(
                f"basis shape {self.basis.shape} inconsistent with ambient dim {self.ambient_dim}"
            )

    @classmethod
    def zero(cls, ambient_dim: int) -> "CSubspace":
        return cls(ambient_dim, np.zeros((ambient_dim, 0), dtype=np.complex128))

    @classmethod
    def full(cls, ambient_dim: int) -> "CSubspace":
        return cls(ambient_dim, np.eye(ambient_dim, dtype=np.complex128))

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def vectors(self) -> list[np.ndarray]:
        return [self.basis[:, k].copy() for k in range(self.dim)]

    def project(self, v: np.ndarray) -> np.ndarray:
        if self.dim == 0:
            return np.zeros(self.ambient_dim, dtype=np.complex128)
        return self.basis @ (self.basis.conj().T @ v)

    def contains(self, v, rel_tol: float = 1e-8) -> bool:
        v = np.asarray(v, dtype=np.complex128)
        nv = float(np.linalg.norm(v))
        if nv == 0.0:
            return True
        return float(np.linalg.norm(v - self.project(v))) <= rel_tol * nv

    def gram_defect(self) -> float:
        """Deviation of the basis Gram matrix from the identity."""
        if self.dim == 0:
            return 0.0
        g = self.basis.conj().T @ self.basis
        return float(np.linalg.norm(g - np.eye(self.dim)))


@dataclass(frozen=True)
class EigenSet:
    """Clustered spectrum: (eigenvalue, algebraic multiplicity) pairs.

    Representatives are pairwise separated by more than the clustering
    tolerance used to build the set, and multiplicities sum to the matrix
    dimension.
    """

    values: tuple[tuple[complex, int], ...]

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.values)

    def value_list(self) -> list[complex]:
        return [v for v, _ in self.values]

    def multiset(self) -> list[complex]:
        """Eigenvalues repeated by multiplicity."""
        out: list[complex] = []
        for v, m in self.values:
            out.extend([v] * m)
        return out

    def distance(self, lam) -> float:
        lam = complex(lam)
        if not self.values:
            return math.inf
        return min(abs(lam - v) for v, _ in self.values)

    def contains(self, lam, tol_abs: float) -> bool:
        """Membership at absolute tolerance; a tie at the boundary is a member."""
        return self.distance(lam) <= tol_abs

    def nearest(self, lam) -> complex:
        lam = complex(lam)
        return min((v for v, _ in self.values), key=lambda v: abs(lam - v))


def determinant(a) -> complex:
    """Determinant via partially pivoted LU."""
    a = as_cmatrix(a)
    _require_square(a, "determinant")
    if a.shape[0] == 0:
        return 1.0 + 0.0j
    return complex(np.linalg.det(a))


def is_singular_matrix(a, tol: float = DEFAULT_TOL) -> bool:
    """Determinant-based singularity test; ties at the threshold count as singular.

    |det A| is at most sigma_min * ||A||_F**(n-1), so comparing it against
    tol * max(||A||_F, 1) * ||A||_F**(n-1) fires whenever the smallest
    singular direction drops below the floored relative threshold (the same
    floor-at-1 convention the scalar classifier uses for near-zero inputs).
    """
    a = as_cmatrix(a)
    n = _require_square(a, "is_singular_matrix")
    if n == 0:
        return False
    s = frobenius(a)
    if s == 0.0:
        return True
    return abs(determinant(a)) <= tol * max(s, 1.0) * s ** (n - 1)


def nullspace(a, tol: float = DEFAULT_TOL, threshold: float | None = None) -> CSubspace:
    """Orthonormal basis of {v : A v ≈ 0}.

    Rank is decided by column-pivoted QR: diagonal entries of R at or
    below the threshold (default tol * max(||A||_F, 1) * max(rows, cols))
    count as zero, so the decision errs toward a larger nullspace.  The
    floor at 1 keeps near-zero matrices consistent with the scalar
    classifier and the determinant route.
    """
    a = as_cmatrix(a)
    m, n = a.shape
    if n == 0:
        return CSubspace.zero(0)
    if threshold is None:
        threshold = tol * max(frobenius(a), 1.0) * max(m, n)
    if m == 0:
        return CSubspace.full(n)

    q, r, piv = scipy.linalg.qr(a, mode="economic", pivoting=True)
    diag = np.abs(np.diag(r))
    rank = int(np.sum(diag > threshold))
    if rank == n:
        return CSubspace.zero(n)
    if rank == 0:
        return CSubspace.full(n)

    # Null vectors in pivoted coordinates: [x; e_j] with R11 x = -R12 e_j.
    x = scipy.linalg.solve_triangular(r[:rank, :rank], -r[:rank, rank:])
    permuted = np.vstack([x, np.eye(n - rank, dtype=np.complex128)])
    basis = np.zeros((n, n - rank), dtype=np.complex128)
    basis[piv, :] = permuted
    ortho, _ = np.linalg.qr(basis)
    return CSubspace(n, ortho)


def column_space(a, tol: float = DEFAULT_TOL, threshold: float | None = None) -> CSubspace:
    """Orthonormal basis of the range of A, rank-revealed by pivoted QR."""
    a = as_cmatrix(a)
    m, n = a.shape
    if m == 0 or n == 0:
        return CSubspace.zero(m)
    if threshold is None:
        threshold = tol * max(frobenius(a), 1.0) * max(m, n)
    q, r, _ = scipy.linalg.qr(a, mode="economic", pivoting=True)
    diag = np.abs(np.diag(r))
    rank = int(np.sum(diag > threshold))
    return CSubspace(m, q[:, :rank])


def cluster_points(points, tol_abs: float) -> list[tuple[complex, int]]:
    """Agglomerate complex points whose representatives sit within tol_abs.

    Returns (representative, count) pairs, pairwise separated by more than
    tol_abs, sorted by (real, imag).  Representatives are count-weighted means.
    """
    clusters = [[complex(p), 1] for p in points]
    while len(clusters) > 1:
        best = None
        for i in range(len(clusters)):
            for j in range(i + 1, len(clusters)):
                d = abs(clusters[i][0] - clusters[j][0])
                if best is None or d < best[0]:
                    best = (d, i, j)
        if best is None or best[0] > tol_abs:
            break
        _, i, j = best
        ci, cj = clusters[i], clusters[j]
        total = ci[1] + cj[1]
        rep = (ci[0] * ci[1] + cj[0] * cj[1]) / total
        clusters[i] = [rep, total]
        del clusters[j]
    merged = [(rep, count) for rep, count in clusters]
    merged.sort(key=lambda vc: (vc[0].real, vc[0].imag))
    return merged


def cluster_tolerance(a, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> float:
    """Absolute clustering/membership tolerance for a matrix: tol * (1 + ||A||_F)."""
    return cluster_tol * (1.0 + frobenius(a))


def eigenvalues(a, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> EigenSet:
    """Clustered spectrum of a square matrix."""
    a = as_cmatrix(a)
    n = _require_square(a, "eigenvalues")
    if n == 0:
        return EigenSet(())
    try:
        vals = np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:  # deflation budget exhausted inside LAPACK
        raise ConvergenceError(f"eigenvalue iteration failed: {exc}") from exc
    merged = cluster_points(vals, cluster_tolerance(a, cluster_tol))
    return EigenSet(tuple(merged))


def eigen_decompose(
    a, cluster_tol: float = DEFAULT_CLUSTER_TOL
) -> tuple[EigenSet, list[CSubspace]]:
    """Clustered spectrum plus the geometric eigenspace of each cluster.

    Eigenvectors come from the nullspace of A - lam*I at the clustering
    threshold, so geometric dimension never exceeds what the residual bound
    1e-8 * (1 + ||A||) supports.
    """
    a = as_cmatrix(a)
    n = _require_square(a, "eigen_decompose")
    es = eigenvalues(a, cluster_tol)
    thr = cluster_tolerance(a, cluster_tol)
    eye = np.eye(n, dtype=np.complex128)
    spaces = [nullspace(a - lam * eye, threshold=thr) for lam, _ in es.values]
    return es, spaces


def subspace_sum(u: CSubspace, w: CSubspace, tol: float = DEFAULT_TOL) -> CSubspace:
    """Smallest subspace containing both operands."""
    if u.ambient_dim != w.ambient_dim:
        raise ValueError("subspace sum needs a common ambient space")
    if u.dim == 0:
        return CSubspace(w.ambient_dim, w.basis.copy())
    if w.dim == 0:
        return CSubspace(u.ambient_dim, u.basis.copy())
    stacked = np.hstack([u.basis, w.basis])
    return column_space(stacked, tol)


def subspace_intersection(u: CSubspace, w: CSubspace, tol: float = DEFAULT_TOL) -> CSubspace:
    """Intersection via the nullspace of the stacked-basis system [U | -W]."""
    if u.ambient_dim != w.ambient_dim:
        raise ValueError("subspace intersection needs a common ambient space")
    if u.dim == 0 or w.dim == 0:
        return CSubspace.zero(u.ambient_dim)
    stacked = np.hstack([u.basis, -w.basis])
    coeffs = nullspace(stacked, tol)
    if coeffs.dim == 0:
        return CSubspace.zero(u.ambient_dim)
    vectors = u.basis @ coeffs.basis[: u.dim, :]
    ortho, _ = np.linalg.qr(vectors)
    return CSubspace(u.ambient_dim, ortho)

"""Vectors in C2^n, matrices over C2, and operators T = e1*T1 + e2*T2.

Applying such an operator is componentwise on the idempotent split of the
argument: the minus components go through T1, the plus components through
T2.  Kernel and image therefore split as idempotent products of the
component kernels/images, and T is singular exactly when one of the
components is.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import DEFAULT_TOL, Bicomplex, IdealClass
from .errors import DimensionMismatchError, NonSquareError
from .linalg import CSubspace, column_space, is_singular_matrix, nullspace


def _as_cvector(v) -> np.ndarray:
    arr = np.asarray(v, dtype=np.complex128)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d vector, got ndim={arr.ndim}")
    if not (np.all(np.isfinite(arr.real)) and np.all(np.isfinite(arr.imag))):
        raise ValueError("vector entries must be finite")
    return arr


def _as_cmatrix2(a) -> np.ndarray:
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got ndim={arr.ndim}")
    if not (np.all(np.isfinite(arr.real)) and np.all(np.isfinite(arr.imag))):
        raise ValueError("matrix entries must be finite")
    return arr


class VectorClass(Enum):
    """Singularity classification of a vector in C2^n."""

    ZERO = "Zero"
    SINGULAR_NONZERO = "SingularNonzero"
    NONSINGULAR = "NonSingular"


@dataclass(eq=False)
class BicomplexVector:
    """Element of C2^n as the pair of its idempotent component vectors."""

    minus: np.ndarray
    plus: np.ndarray

    def __post_init__(self):
        self.minus = _as_cvector(self.minus)
        self.plus = _as_cvector(self.plus)
        if self.minus.shape != self.plus.shape:
            raise DimensionMismatchError(
                f"component lengths differ: {self.minus.shape[0]} vs {self.plus.shape[0]}"
            )

    @classmethod
    def from_entries(cls, entries) -> "BicomplexVector":
        entries = list(entries)
        return cls(
            np.array([e.minus for e in entries], dtype=np.complex128),
            np.array([e.plus for e in entries], dtype=np.complex128),
        )

    @classmethod
    def zero(cls, n: int) -> "BicomplexVector":
        return cls(np.zeros(n, dtype=np.complex128), np.zeros(n, dtype=np.complex128))

    @classmethod
    def from_minus(cls, u) -> "BicomplexVector":
        """e1 * u for a complex vector u."""
        u = _as_cvector(u)
        return cls(u, np.zeros_like(u))

    @classmethod
    def from_plus(cls, w) -> "BicomplexVector":
        """e2 * w for a complex vector w."""
        w = _as_cvector(w)
        return cls(np.zeros_like(w), w)

    @property
    def n(self) -> int:
        return self.minus.shape[0]

    def entry(self, i: int) -> Bicomplex:
        return Bicomplex(complex(self.minus[i]), complex(self.plus[i]))

    def entries(self) -> list[Bicomplex]:
        return [self.entry(i) for i in range(self.n)]

    def norm(self) -> float:
        """Euclidean norm of the concatenated component vectors."""
        return float(np.sqrt(np.linalg.norm(self.minus) ** 2 + np.linalg.norm(self.plus) ** 2))

    def is_exact_zero(self) -> bool:
        return not (np.any(self.minus) or np.any(self.plus))

    def scale(self, kappa) -> "BicomplexVector":
        """Multiply every entry by a bicomplex (or complex) scalar."""
        if not isinstance(kappa, Bicomplex):
            kappa = Bicomplex.from_complex(kappa)
        return BicomplexVector(kappa.minus * self.minus, kappa.plus * self.plus)

    def __add__(self, other: "BicomplexVector") -> "BicomplexVector":
        return BicomplexVector(self.minus + other.minus, self.plus + other.plus)

    def __sub__(self, other: "BicomplexVector") -> "BicomplexVector":
        return BicomplexVector(self.minus - other.minus, self.plus - other.plus)

    def __neg__(self) -> "BicomplexVector":
        return BicomplexVector(-self.minus, -self.plus)


def classify_vector(v: BicomplexVector, tol: float = DEFAULT_TOL) -> VectorClass:
    """Zero if every entry is Zero; non-singular if some entry is; singular otherwise.

    A vector can be nonzero on both component sides and still be singular:
    (e1, e2) has nonzero minus and plus parts but every entry is a zero divisor.
    """
    saw_nonzero = False
    for i in range(v.n):
        cls = v.entry(i).classify(tol)
        if cls is IdealClass.NONSINGULAR:
            return VectorClass.NONSINGULAR
        if cls is not IdealClass.ZERO:
            saw_nonzero = True
    return VectorClass.SINGULAR_NONZERO if saw_nonzero else VectorClass.ZERO


@dataclass(eq=False)
class BicomplexMatrix:
    """Matrix over C2 as the pair of its complex component matrices."""

    minus: np.ndarray
    plus: np.ndarray

    def __post_init__(self):
        self.minus = _as_cmatrix2(self.minus)
        self.plus = _as_cmatrix2(self.plus)
        if self.minus.shape != self.plus.shape:
            raise DimensionMismatchError(
                f"component shapes differ: {self.minus.shape} vs {self.plus.shape}"
            )

    @property
    def shape(self) -> tuple[int, int]:
        return self.minus.shape

    def entry(self, i: int, j: int) -> Bicomplex:
        return Bicomplex(complex(self.minus[i, j]), complex(self.plus[i, j]))

    def as_operator(self) -> "BicomplexOperator":
        return BicomplexOperator(self.minus, self.plus)


@dataclass(eq=False)
class BicomplexOperator:
    """The map T = e1*T1 + e2*T2 stored as the component matrix pair (t1, t2).

    Matrices are relative to the standard basis.  Rectangular pairs are
    admitted for kernel/image work; every spectral operation checks
    squareness first.
    """

    t1: np.ndarray
    t2: np.ndarray

    def __post_init__(self):
        self.t1 = _as_cmatrix2(self.t1)
        self.t2 = _as_cmatrix2(self.t2)
        if self.t1.shape != self.t2.shape:
            raise DimensionMismatchError(
                f"component shapes differ: {self.t1.shape} vs {self.t2.shape}"
            )

    @classmethod
    def identity(cls, n: int) -> "BicomplexOperator":
        eye = np.eye(n, dtype=np.complex128)
        return cls(eye, eye.copy())

    @classmethod
    def zero(cls, n: int, m: int | None = None) -> "BicomplexOperator":
        m = n if m is None else m
        return cls(np.zeros((m, n), dtype=np.complex128), np.zeros((m, n), dtype=np.complex128))

    @property
    def shape(self) -> tuple[int, int]:
        return self.t1.shape

    @property
    def is_square(self) -> bool:
        return self.t1.shape[0] == self.t1.shape[1]

    @property
    def n(self) -> int:
        if not self.is_square:
            raise NonSquareError(f"operator is {self.shape}, not square")
        return self.t1.shape[0]

    def as_matrix(self) -> BicomplexMatrix:
        return BicomplexMatrix(self.t1, self.t2)

    def scale_norm(self) -> float:
        """1 + ||t1||_F + ||t2||_F; the scale used by residual and membership bounds."""
        return 1.0 + float(np.linalg.norm(self.t1)) + float(np.linalg.norm(self.t2))


def apply(op: BicomplexOperator, v: BicomplexVector) -> BicomplexVector:
    """T v = e1*(t1 @ v.minus) + e2*(t2 @ v.plus)."""
    if op.shape[1] != v.n:
        raise DimensionMismatchError(f"operator {op.shape} cannot act on a vector of length {v.n}")
    return BicomplexVector(op.t1 @ v.minus, op.t2 @ v.plus)


def operator_add(a: BicomplexOperator, b: BicomplexOperator) -> BicomplexOperator:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"operator shapes differ: {a.shape} vs {b.shape}")
    return BicomplexOperator(a.t1 + b.t1, a.t2 + b.t2)


def operator_neg(a: BicomplexOperator) -> BicomplexOperator:
    return BicomplexOperator(-a.t1, -a.t2)


def operator_scale(alpha, op: BicomplexOperator) -> BicomplexOperator:
    """Scale by a complex number (acts identically on both components)."""
    alpha = complex(alpha)
    return BicomplexOperator(alpha * op.t1, alpha * op.t2)


def operator_scale_bc(eta: Bicomplex, op: BicomplexOperator) -> BicomplexOperator:
    """Scale by a bicomplex number: eta*T = e1*(eta^- T1) + e2*(eta^+ T2)."""
    return BicomplexOperator(eta.minus * op.t1, eta.plus * op.t2)


def shift(op: BicomplexOperator, kappa) -> BicomplexOperator:
    """T - kappa*I componentwise; a complex kappa embeds diagonally."""
    n = op.n
    if not isinstance(kappa, Bicomplex):
        kappa = Bicomplex.from_complex(kappa)
    eye = np.eye(n, dtype=np.complex128)
    return BicomplexOperator(op.t1 - kappa.minus * eye, op.t2 - kappa.plus * eye)


def kernel(op: BicomplexOperator, tol: float = DEFAULT_TOL) -> tuple[CSubspace, CSubspace]:
    """Component nullspace pair (ker t1, ker t2).

    The bicomplex kernel is exactly {e1*u + e2*w : u in the first, w in the
    second}; its dimension over C1 is the sum of the component nullities.
    """
    return nullspace(op.t1, tol), nullspace(op.t2, tol)


def image(op: BicomplexOperator, tol: float = DEFAULT_TOL) -> tuple[CSubspace, CSubspace]:
    """Component column-space pair (Im t1, Im t2)."""
    return column_space(op.t1, tol), column_space(op.t2, tol)


def assemble_pair_basis(pair: tuple[CSubspace, CSubspace]) -> list[BicomplexVector]:
    """Materialize {e1*u_k} ∪ {e2*w_j} from a component subspace pair."""
    minus_space, plus_space = pair
    out = [BicomplexVector.from_minus(u) for u in minus_space.vectors()]
    out.extend(BicomplexVector.from_plus(w) for w in plus_space.vectors())
    return out


def is_singular_operator(op: BicomplexOperator, tol: float = DEFAULT_TOL) -> bool:
    """True iff t1 or t2 is singular (equivalently, the kernel is nontrivial)."""
    if not op.is_square:
        raise NonSquareError(f"singularity is defined for square operators, got {op.shape}")
    return is_singular_matrix(op.t1, tol) or is_singular_matrix(op.t2, tol)

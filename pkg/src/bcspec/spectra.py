"""Eigenvalues, modified eigenvalues, and (modified) eigenspaces of T = e1*T1 + e2*T2.

Terminology, for an operator acting on C2^n:

* an eigenvalue is a complex lambda with T v = lambda v for some nonzero
  bicomplex v; this happens exactly when lambda belongs to the union of the
  component spectra.
* a modified eigenvalue is a bicomplex kappa = kappa1*e1 + kappa2*e2 with
  T v = kappa v for nonzero v; this happens exactly when kappa1 is an
  eigenvalue of T1 or kappa2 is an eigenvalue of T2.  Writing Y1, Y2 for the
  component spectra, the modified spectrum is the union of two cylinders

      Y = (Y1 xe C1)  ∪  (C1 xe Y2),

  an infinite set that strictly contains the finite grid Y1 xe Y2.
* the modified eigenspace of kappa splits as an idempotent product of the
  component eigenspaces, with {0} on any side whose component is not an
  eigenvalue.  One-sided spaces consist entirely of singular vectors
  (multiples of e1 or of e2).

The modified spectrum is therefore represented intensionally by (Y1, Y2)
plus the cylinder rule; it is never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import DEFAULT_TOL, Bicomplex
from .errors import (
    BaseNotEigenvalueError,
    NonSquareError,
    NotEigenvalueError,
    NotModifiedEigenvalueError,
)
from .linalg import (
    DEFAULT_CLUSTER_TOL,
    CSubspace,
    EigenSet,
    cluster_points,
    cluster_tolerance,
    eigenvalues,
    nullspace,
    subspace_intersection,
    subspace_sum,
)
from .operators import BicomplexOperator, BicomplexVector, apply, assemble_pair_basis


class ModifiedCase(Enum):
    """Which component memberships make kappa a modified eigenvalue."""

    ONLY_MINUS = "OnlyMinus"   # kappa1 in Y1, kappa2 not in Y2
    ONLY_PLUS = "OnlyPlus"     # kappa1 not in Y1, kappa2 in Y2
    BOTH = "Both"


@dataclass(frozen=True)
class ModifiedEigenvalue:
    kappa: Bicomplex
    case: ModifiedCase


@dataclass(frozen=True)
class SpectrumReport:
    """Component spectra of T plus their membership tolerances.

    eigenvalues_of_T is the clustered union of upsilon1 and upsilon2 with
    multiplicities summed across components (the spectrum of the block
    embedding diag(t1, t2) as a multiset).
    """

    upsilon1: EigenSet
    upsilon2: EigenSet
    eigenvalues_of_T: EigenSet
    tol1: float  # absolute membership tolerance for upsilon1
    tol2: float

    def in_upsilon1(self, lam) -> bool:
        return self.upsilon1.contains(lam, self.tol1)

    def in_upsilon2(self, lam) -> bool:
        return self.upsilon2.contains(lam, self.tol2)

    def is_eigenvalue(self, lam) -> bool:
        return self.in_upsilon1(lam) or self.in_upsilon2(lam)

    def classify_modified(self, kappa: Bicomplex) -> ModifiedCase | None:
        """Case tag for kappa, or None when kappa is not modified."""
        m1 = self.in_upsilon1(kappa.minus)
        m2 = self.in_upsilon2(kappa.plus)
        if m1 and m2:
            return ModifiedCase.BOTH
        if m1:
            return ModifiedCase.ONLY_MINUS
        if m2:
            return ModifiedCase.ONLY_PLUS
        return None


def component_spectra(
    op: BicomplexOperator, cluster_tol: float = DEFAULT_CLUSTER_TOL
) -> SpectrumReport:
    """Y1 = spectrum of t1, Y2 = spectrum of t2, and their clustered union."""
    if not op.is_square:
        raise NonSquareError(f"spectra need a square operator, got {op.shape}")
    u1 = eigenvalues(op.t1, cluster_tol)
    u2 = eigenvalues(op.t2, cluster_tol)
    tol1 = cluster_tolerance(op.t1, cluster_tol)
    tol2 = cluster_tolerance(op.t2, cluster_tol)
    combined: list[complex] = u1.multiset() + u2.multiset()
    union = EigenSet(tuple(cluster_points(combined, max(tol1, tol2))))
    return SpectrumReport(u1, u2, union, tol1, tol2)


def is_eigenvalue(
    op: BicomplexOperator,
    lam,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    report: SpectrumReport | None = None,
) -> bool:
    """lambda is an eigenvalue of T iff it lies in Y1 ∪ Y2."""
    if report is None:
        report = component_spectra(op, cluster_tol)
    return report.is_eigenvalue(lam)


def is_modified_eigenvalue(
    op: BicomplexOperator,
    kappa: Bicomplex,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    report: SpectrumReport | None = None,
) -> tuple[bool, ModifiedCase | None]:
    """kappa is modified iff kappa^- in Y1 or kappa^+ in Y2; the case says which."""
    if report is None:
        report = component_spectra(op, cluster_tol)
    case = report.classify_modified(kappa)
    return case is not None, case


def modified_family(
    op: BicomplexOperator,
    from_minus: bool,
    base,
    samples,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    report: SpectrumReport | None = None,
) -> list[ModifiedEigenvalue]:
    """The infinite one-parameter family through a component eigenvalue.

    With base in Y1, every base*e1 + w*e2 is a modified eigenvalue, for all
    complex w; symmetrically for base in Y2.  Returns the family at the given
    sample points.
    """
    if report is None:
        report = component_spectra(op, cluster_tol)
    base = complex(base)
    if from_minus:
        if not report.in_upsilon1(base):
            raise BaseNotEigenvalueError(f"{base} is not in the spectrum of t1")
    else:
        if not report.in_upsilon2(base):
            raise BaseNotEigenvalueError(f"{base} is not in the spectrum of t2")
    out = []
    for w in samples:
        kappa = Bicomplex(base, complex(w)) if from_minus else Bicomplex(complex(w), base)
        case = report.classify_modified(kappa)
        assert case is not None
        out.append(ModifiedEigenvalue(kappa, case))
    return out


@dataclass(frozen=True)
class UpsilonDescription:
    """Intensional description of the modified spectrum: (Y1 xe C1) ∪ (C1 xe Y2)."""

    upsilon1: EigenSet
    upsilon2: EigenSet
    tol1: float
    tol2: float

    def contains(self, kappa: Bicomplex) -> bool:
        return self.upsilon1.contains(kappa.minus, self.tol1) or self.upsilon2.contains(
            kappa.plus, self.tol2
        )

    def symbolic(self) -> str:
        return f"({_set_str(self.upsilon1)} xe C1) U (C1 xe {_set_str(self.upsilon2)})"


def _format_complex(z: complex) -> str:
    if z.imag == 0:
        return f"{z.real:g}"
    if z.real == 0:
        return f"{z.imag:g}i"
    return f"{z.real:g}{z.imag:+g}i"


def _set_str(es: EigenSet) -> str:
    return "{" + ", ".join(_format_complex(v) for v in es.value_list()) + "}"


def upsilon_description(
    op: BicomplexOperator,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    report: SpectrumReport | None = None,
) -> UpsilonDescription:
    """The modified spectrum as a union of two cylinders over (Y1, Y2)."""
    if report is None:
        report = component_spectra(op, cluster_tol)
    return UpsilonDescription(report.upsilon1, report.upsilon2, report.tol1, report.tol2)


@dataclass
class ContainmentRecord:
    """Check of the grid Y1 xe Y2 against the modified spectrum.

    Every grid pair must be a modified eigenvalue (case Both); witness is a
    modified eigenvalue outside the grid, demonstrating proper containment.
    A witness always exists because Y2 is finite while the plus side of the
    cylinder (Y1 xe C1) ranges over all of C1.
    """

    pairs: list[ModifiedEigenvalue]
    all_pairs_modified: bool
    witness: ModifiedEigenvalue | None


def contains_idempotent_product(
    op: BicomplexOperator,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    report: SpectrumReport | None = None,
) -> ContainmentRecord:
    if report is None:
        report = component_spectra(op, cluster_tol)
    pairs = []
    all_ok = True
    for k1 in report.upsilon1.value_list():
        for k2 in report.upsilon2.value_list():
            kappa = Bicomplex(k1, k2)
            case = report.classify_modified(kappa)
            ok = case is ModifiedCase.BOTH
            all_ok = all_ok and ok
            pairs.append(ModifiedEigenvalue(kappa, case if case else ModifiedCase.BOTH))
    witness = None
    if report.upsilon1.values:
        # Plus component pushed past every member of Y2: outside the grid by
        # construction, still modified through the minus side.
        k1 = report.upsilon1.value_list()[0]
        away = max((abs(v) for v in report.upsilon2.value_list()), default=0.0)
        k2 = away + 1.0 + 10.0 * report.tol2
        kappa = Bicomplex(k1, k2)
        case = report.classify_modified(kappa)
        if case is ModifiedCase.ONLY_MINUS:
            witness = ModifiedEigenvalue(kappa, case)
    return ContainmentRecord(pairs, all_ok, witness)


@dataclass(eq=False)
class ModifiedEigenspace:
    """Constructive basis of { v : T v = kappa v }.

    The space splits componentwise: minus_basis spans the t1-eigenspace of
    kappa^- (zero space when kappa^- is not an eigenvalue), plus_basis the
    t2-eigenspace of kappa^+.  assembled holds the lifted basis
    {e1*u_k} ∪ {e2*w_j}; its length is the dimension over C1.

    all_eigenvectors_singular records the structural guarantee of the
    one-sided cases: every member is then a multiple of e1 (or of e2), hence
    a singular vector.  In the Both case the flag is False.
    """

    kappa: Bicomplex
    case: ModifiedCase
    minus_basis: CSubspace
    plus_basis: CSubspace
    assembled: list[BicomplexVector]
    all_eigenvectors_singular: bool

    @property
    def dim(self) -> int:
        return self.minus_basis.dim + self.plus_basis.dim

    def max_residual(self, op: BicomplexOperator) -> float:
        """Largest ||T v - kappa v|| over the assembled basis."""
        worst = 0.0
        for v in self.assembled:
            worst = max(worst, (apply(op, v) - v.scale(self.kappa)).norm())
        return worst


def modified_eigenspace(
    op: BicomplexOperator,
    kappa: Bicomplex,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    report: SpectrumReport | None = None,
) -> ModifiedEigenspace:
    """Component eigenspaces of kappa assembled per the case structure."""
    if report is None:
        report = component_spectra(op, cluster_tol)
    case = report.classify_modified(kappa)
    if case is None:
        raise NotModifiedEigenvalueError(f"{kappa} is not a modified eigenvalue")
    n = op.n
    eye = np.eye(n, dtype=np.complex128)
    if case in (ModifiedCase.ONLY_MINUS, ModifiedCase.BOTH):
        minus_basis = nullspace(
            op.t1 - kappa.minus * eye, threshold=cluster_tolerance(op.t1, cluster_tol)
        )
    else:
        minus_basis = CSubspace.zero(n)
    if case in (ModifiedCase.ONLY_PLUS, ModifiedCase.BOTH):
        plus_basis = nullspace(
            op.t2 - kappa.plus * eye, threshold=cluster_tolerance(op.t2, cluster_tol)
        )
    else:
        plus_basis = CSubspace.zero(n)
    assembled = assemble_pair_basis((minus_basis, plus_basis))
    return ModifiedEigenspace(
        kappa=kappa,
        case=case,
        minus_basis=minus_basis,
        plus_basis=plus_basis,
        assembled=assembled,
        all_eigenvectors_singular=case is not ModifiedCase.BOTH,
    )


def eigenspace(
    op: BicomplexOperator,
    lam,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    report: SpectrumReport | None = None,
) -> ModifiedEigenspace:
    """Eigenspace of a complex eigenvalue: the modified eigenspace of its diagonal embedding."""
    if report is None:
        report = component_spectra(op, cluster_tol)
    lam = complex(lam)
    if not report.is_eigenvalue(lam):
        raise NotEigenvalueError(f"{lam} is not an eigenvalue")
    return modified_eigenspace(op, Bicomplex.from_complex(lam), cluster_tol, report)


@dataclass(frozen=True)
class EigenspaceSumReport:
    """Dimensions of the sum and intersection of two modified eigenspaces.

    Computed per idempotent component (both spaces split componentwise), so
    sum_dim and intersection_dim are sums over the two sides.  is_direct
    states the computed finding for this pair only; nothing is claimed about
    whether such sums are direct in general.
    """

    kappa: Bicomplex
    kappa_prime: Bicomplex
    dim_first: int
    dim_second: int
    sum_dim: int
    intersection_dim: int
    is_direct: bool


def eigenspace_sum(
    op: BicomplexOperator,
    kappa: Bicomplex,
    kappa_prime: Bicomplex,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    tol: float = DEFAULT_TOL,
    report: SpectrumReport | None = None,
) -> EigenspaceSumReport:
    if kappa == kappa_prime:
        raise ValueError("the two modified eigenvalues must differ")
    if report is None:
        report = component_spectra(op, cluster_tol)
    first = modified_eigenspace(op, kappa, cluster_tol, report)
    second = modified_eigenspace(op, kappa_prime, cluster_tol, report)
    sum_dim = 0
    inter_dim = 0
    for a, b in (
        (first.minus_basis, second.minus_basis),
        (first.plus_basis, second.plus_basis),
    ):
        sum_dim += subspace_sum(a, b, tol).dim
        inter_dim += subspace_intersection(a, b, tol).dim
    return EigenspaceSumReport(
        kappa=kappa,
        kappa_prime=kappa_prime,
        dim_first=first.dim,
        dim_second=second.dim,
        sum_dim=sum_dim,
        intersection_dim=inter_dim,
        is_direct=inter_dim == 0,
    )

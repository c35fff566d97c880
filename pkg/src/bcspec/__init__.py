"""bcspec: bicomplex algebra and the spectral theory of T = e1*T1 + e2*T2."""

from .core import DEFAULT_TOL, E1, E2, ONE, ZERO, Bicomplex, IdealClass
from .errors import (
    BaseNotEigenvalueError,
    BcspecError,
    ConvergenceError,
    DimensionMismatchError,
    NonFiniteValueError,
    NonSquareError,
    NotEigenvalueError,
    NotModifiedEigenvalueError,
    ParseError,
    SingularElementError,
    ZeroVectorError,
)
from .linalg import (
    DEFAULT_CLUSTER_TOL,
    CSubspace,
    EigenSet,
    column_space,
    determinant,
    eigen_decompose,
    eigenvalues,
    is_singular_matrix,
    nullspace,
    subspace_intersection,
    subspace_sum,
)
from .operators import (
    BicomplexMatrix,
    BicomplexOperator,
    BicomplexVector,
    VectorClass,
    apply,
    assemble_pair_basis,
    classify_vector,
    image,
    is_singular_operator,
    kernel,
    operator_add,
    operator_neg,
    operator_scale,
    operator_scale_bc,
    shift,
)
from .spectra import (
    ContainmentRecord,
    EigenspaceSumReport,
    ModifiedCase,
    ModifiedEigenspace,
    ModifiedEigenvalue,
    SpectrumReport,
    UpsilonDescription,
    component_spectra,
    contains_idempotent_product,
    eigenspace,
    eigenspace_sum,
    is_eigenvalue,
    is_modified_eigenvalue,
    modified_eigenspace,
    modified_family,
    upsilon_description,
)

__version__ = "0.1.0"

__all__ = [
    "Bicomplex",
    "IdealClass",
    "E1",
    "E2",
    "ONE",
    "ZERO",
    "DEFAULT_TOL",
    "DEFAULT_CLUSTER_TOL",
    "BcspecError",
    "NonFiniteValueError",
    "SingularElementError",
    "DimensionMismatchError",
    "NonSquareError",
    "ConvergenceError",
    "ZeroVectorError",
    "BaseNotEigenvalueError",
    "NotEigenvalueError",
    "NotModifiedEigenvalueError",
    "ParseError",
    "CSubspace",
    "EigenSet",
    "determinant",
    "nullspace",
    "column_space",
    "eigenvalues",
    "eigen_decompose",
    "is_singular_matrix",
    "subspace_sum",
    "subspace_intersection",
    "BicomplexVector",
    "BicomplexMatrix",
    "BicomplexOperator",
    "VectorClass",
    "apply",
    "operator_add",
    "operator_neg",
    "operator_scale",
    "operator_scale_bc",
    "shift",
    "kernel",
    "image",
    "assemble_pair_basis",
    "is_singular_operator",
    "classify_vector",
    "SpectrumReport",
    "ModifiedCase",
    "ModifiedEigenvalue",
    "ModifiedEigenspace",
    "UpsilonDescription",
    "ContainmentRecord",
    "EigenspaceSumReport",
    "component_spectra",
    "is_eigenvalue",
    "is_modified_eigenvalue",
    "modified_family",
    "upsilon_description",
    "contains_idempotent_product",
    "modified_eigenspace",
    "eigenspace",
    "eigenspace_sum",
]

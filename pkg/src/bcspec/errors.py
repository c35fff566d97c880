"""Exception hierarchy shared by all bcspec modules."""


class BcspecError(Exception):
    """Base class for every error raised by this package."""


class NonFiniteValueError(BcspecError):
    """A NaN or infinity was offered to a constructor; the algebra admits neither."""


class SingularElementError(BcspecError):
    """Inverse requested for a zero divisor (an element of I1 or I2) or zero."""


class DimensionMismatchError(BcspecError):
    """Operand shapes are incompatible."""


class NonSquareError(BcspecError):
    """Operation defined for square matrices/operators only."""


class ConvergenceError(BcspecError):
    """The eigenvalue iteration exhausted its sweep budget without deflating."""


class ZeroVectorError(BcspecError):
    """A nonzero vector was required."""


class BaseNotEigenvalueError(BcspecError):
    """The base scalar of a modified-eigenvalue family is not a component eigenvalue."""


class NotEigenvalueError(BcspecError):
    """The given scalar is not an eigenvalue of the operator."""


class NotModifiedEigenvalueError(BcspecError):
    """The given bicomplex scalar is not a modified eigenvalue of the operator."""


class ParseError(BcspecError):
    """Malformed JSON input; the message carries field or position context."""

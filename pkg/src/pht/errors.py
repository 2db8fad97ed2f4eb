"""Exception taxonomy for metric construction and symmetry analysis.

Every failure mode that callers may want to branch on gets its own class;
all of them derive from :class:`PHTError` so ``except PHTError`` catches
anything raised deliberately by this package.
"""


class PHTError(Exception):
    """Base class for all errors raised by this package."""


class NonFiniteError(PHTError, ValueError):
    """A matrix or state vector contains NaN or infinite entries."""


class NotDiagonalizableError(PHTError):
    """The eigenvector matrix is too ill-conditioned to invert reliably."""


class ComplexSpectrumError(PHTError):
    """A real spectrum was required but complex eigenvalues are present."""


class NotHermitianError(PHTError, ValueError):
    """An operator that must be Hermitian is not, beyond tolerance."""


class NotPositiveDefiniteError(PHTError):
    """An operator that must be positive definite has non-positive spectrum."""


class SingularWeightError(PHTError):
    """An inner-product weight operator is numerically singular."""


class NotPseudoHermitianError(PHTError):
    """The Hamiltonian is not pseudo-Hermitian with respect to the given metric."""


class DimensionMismatchError(PHTError, ValueError):
    """Operands have incompatible dimensions."""


class NotPTSymmetricError(PHTError):
    """The Hamiltonian does not commute with the given antilinear symmetry."""


class SingularParityError(PHTError):
    """The parity operator of a parity-conjugation pair is singular."""


class ExceptionalPointError(PHTError):
    """Two-level family parameters sit at (or beyond) the symmetry-breaking boundary."""


class DegenerateDirectionError(PHTError):
    """The reduction direction is undefined because both mixing couplings vanish."""


class BrokenSymmetryParamsError(PHTError):
    """Family parameters lie in the spontaneously broken regime."""


class InvalidAxisError(PHTError, ValueError):
    """A Pauli axis index outside {1, 2, 3} was requested."""


class OutOfRangeError(PHTError, ValueError):
    """A requested evolution time lies outside the configured window."""


class NoPositiveMetricError(PHTError):
    """No positive-definite metric exists for the given Hamiltonian."""

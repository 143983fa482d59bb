"""Exception types shared across the package."""


class LieClassError(Exception):
    pass


class DimensionMismatch(LieClassError, ValueError):
    pass


class JacobiError(LieClassError):
    """Structure constants that do not satisfy the Jacobi identity."""

    def __init__(self, violations, message=None):
        self.violations = violations
        super().__init__(message or f"Jacobi identity fails on {len(violations)} triple(s)")


class NotAnIdeal(LieClassError):
    pass


class ZeroForm(LieClassError, ValueError):
    pass


class NotNilpotent(LieClassError):
    pass


class InDerivedAlgebra(LieClassError, ValueError):
    pass


class NotClosed(LieClassError):
    pass


class NotSymplectic(LieClassError):
    pass


class OddDimension(LieClassError, ValueError):
    pass


class SingularScaling(LieClassError, ValueError):
    pass


class BadParams(LieClassError, ValueError):
    pass


class PaperInconsistency(LieClassError):
    """A faithful transcription of a published family fails the Jacobi identity.

    ``defects`` holds the violating triples with their cyclic-sum vectors.
    """

    def __init__(self, entry_id, defects, message=None):
        self.entry_id = entry_id
        self.defects = defects
        super().__init__(message or f"{entry_id}: transcription fails Jacobi on {len(defects)} triple(s)")

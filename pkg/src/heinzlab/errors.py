"""Exception hierarchy shared by every heinzlab module."""


class HeinzLabError(Exception):
    """Base class for library errors."""


class DimensionError(HeinzLabError, ValueError):
    pass


class ParameterError(HeinzLabError, ValueError):
    pass


class NotHermitianError(HeinzLabError, ValueError):
    def __init__(self, defect, message=None):
        self.defect = float(defect)
        super().__init__(message or f"matrix is not Hermitian (defect {self.defect:.3e})")


class NotPositiveError(HeinzLabError, ValueError):
    def __init__(self, min_eigenvalue, message=None):
        self.min_eigenvalue = float(min_eigenvalue)
        super().__init__(
            message or f"matrix is not positive (min eigenvalue {self.min_eigenvalue:.3e})"
        )


class DomainError(HeinzLabError, ValueError):
    """A spectral function is undefined (or non-finite) on the spectrum."""


class SingularMatrixError(DomainError):
    pass


class ConvergenceError(HeinzLabError, ArithmeticError):
    def __init__(self, residual, sweeps):
        self.residual = float(residual)
        self.sweeps = int(sweeps)
        super().__init__(
            f"Jacobi iteration did not converge after {sweeps} sweeps "
            f"(off-diagonal residual {self.residual:.3e})"
        )


class PreconditionError(HeinzLabError, ValueError):
    """Operands do not satisfy the hypotheses of the statement being checked."""


class ContractError(HeinzLabError):
    pass

"""Exception types shared across the package."""


class SqueezeParameterError(ValueError):
    """Squeezing parameter outside the normalizable disc |zeta| < 1, or at a
    singular point of a closed-form expression."""


class SingularPairError(ValueError):
    """Pair of squeezing parameters with 1 - zeta*conj(xi) (numerically) zero,
    where overlap formulas have no finite limit."""


class CutoffError(RuntimeError):
    """Fock-space truncation too small for the requested accuracy."""


class DivergentIntegralError(ValueError):
    """Gaussian integral with non-decaying weight (Re of quadratic coefficient <= 0)."""


class SingularMatrixError(ValueError):
    """Matrix inversion required by a closed form is impossible."""


class ConsistencyError(RuntimeError):
    """Internal cross-check failed (e.g. imaginary residue of a nominally
    real quantity above threshold)."""

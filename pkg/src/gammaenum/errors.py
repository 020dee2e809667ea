"""Exception hierarchy shared by all gammaenum modules."""


class GammaEnumError(Exception):
    """Base class for all errors raised by this package."""


class ZeroConstantTerm(GammaEnumError):
    """A series with zero constant term cannot be inverted."""


class NonzeroInnerConstant(GammaEnumError):
    """Series composition requires the inner series to vanish at 0."""


class CapExceeded(GammaEnumError):
    """An exhaustive enumeration was requested beyond its configured cap."""


class NonIntegralDivision(GammaEnumError):
    """An integer recursion produced a non-integer value (implementation bug)."""


class PolynomialityViolation(GammaEnumError):
    """A series expected to truncate to a polynomial has nonzero tail terms."""


class NonIntegerCoefficient(GammaEnumError):
    """A counting series produced a coefficient outside the nonnegative integers."""


class FixedPointDivergence(GammaEnumError):
    """A fixed-point series iteration failed to stabilize (transcription bug)."""


class ShadowSetIncomplete(GammaEnumError):
    """Shadow polynomials required by a construction were not supplied."""


class NoConsistentRoot(GammaEnumError):
    """No positive root of the discriminant matches the coefficient-ratio estimate."""


class ConditionViolated(GammaEnumError):
    """A nondegeneracy condition for the square-root expansion failed."""


class NoRootBeforePole(GammaEnumError):
    """The inner substitution reaches its pole before hitting the outer singularity."""

"""Shared value types and exceptions."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


class HypConfluenceError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class PoleError(HypConfluenceError, ValueError):
    code = "pole"


class ParameterDegenerate(HypConfluenceError, ValueError):
    code = "parameter_degenerate"


class ExtrapolationUnstable(HypConfluenceError, ArithmeticError):
    code = "extrapolation_unstable"


class SeriesUnreachable(HypConfluenceError, ArithmeticError):
    code = "series_unreachable"


class OutOfDisk(HypConfluenceError, ValueError):
    code = "out_of_disk"


class BasisInvalid(HypConfluenceError, ValueError):
    code = "basis_invalid"


class CoefficientPole(HypConfluenceError, ValueError):
    code = "coefficient_pole"


class IndeterminateZeroOverZero(HypConfluenceError, ArithmeticError):
    code = "indeterminate_zero_over_zero"


class SingularTransform(HypConfluenceError, ValueError):
    code = "singular_transform"


class ContinuationFailure(HypConfluenceError, ArithmeticError):
    code = "continuation_failure"


class SingularDirection(HypConfluenceError, ValueError):
    code = "singular_direction"


class QuadratureNonconvergent(HypConfluenceError, ArithmeticError):
    code = "quadrature_nonconvergent"


class DegenerateParameters(HypConfluenceError, ValueError):
    code = "degenerate_parameters"


class OnCut(HypConfluenceError, ValueError):
    code = "on_cut"


class StepUnderflow(HypConfluenceError, ArithmeticError):
    code = "step_underflow"


class IllConditionedBasis(HypConfluenceError, ArithmeticError):
    code = "ill_conditioned_basis"


class BasisZero(HypConfluenceError, ArithmeticError):
    code = "basis_zero"


class BranchDisagreement(HypConfluenceError, AssertionError):
    code = "branch_disagreement"


class ConfigInvalid(HypConfluenceError, ValueError):
    code = "config_invalid"


@dataclass(frozen=True)
class BranchedPoint:
    """A nonzero complex number together with a chosen (unwrapped) argument.

    The argument is never reduced modulo 2*pi, so powers and logarithms
    evaluated through it are single valued.
    """

    modulus: float
    argument: float

    def __post_init__(self):
        if not (self.modulus > 0 and math.isfinite(self.modulus)):
            raise ValueError(f"modulus must be positive and finite, got {self.modulus!r}")
        if not math.isfinite(self.argument):
            raise ValueError("argument must be finite")

    @classmethod
    def from_complex(cls, z, near=None):
        """Lift ``z``; the argument is principal, or the lift closest to ``near``."""
        z = complex(z)
        if z == 0:
            raise ValueError("cannot lift 0")
        arg = cmath.phase(z)
        if near is not None:
            arg += 2 * math.pi * round((near - arg) / (2 * math.pi))
        return cls(abs(z), arg)

    @classmethod
    def polar(cls, modulus, argument):
        return cls(float(modulus), float(argument))

    def value(self):
        return cmath.rect(self.modulus, self.argument)

    def __complex__(self):
        return self.value()

    def log(self):
        return complex(math.log(self.modulus), self.argument)

    def rotate(self, angle):
        """Same point reached after turning by ``angle`` around 0."""
        return BranchedPoint(self.modulus, self.argument + angle)

    def scale(self, factor):
        """Multiply by a positive real factor."""
        return BranchedPoint(self.modulus * factor, self.argument)

    def mul(self, other):
        return BranchedPoint(self.modulus * other.modulus, self.argument + other.argument)

    def div(self, other):
        return BranchedPoint(self.modulus / other.modulus, self.argument - other.argument)

    def inv(self):
        return BranchedPoint(1.0 / self.modulus, -self.argument)

    def sheet(self):
        """Number of full turns separating the argument from the principal one."""
        return round((self.argument - cmath.phase(self.value())) / (2 * math.pi))

    def as_pair(self):
        return (self.modulus, self.argument)


def as_branched(x):
    """Accept a BranchedPoint, or lift a complex number with its principal argument."""
    if isinstance(x, BranchedPoint):
        return x
    return BranchedPoint.from_complex(x)


@dataclass(frozen=True)
class EvalResult:
    """A value with an a-posteriori error estimate.

    When ``reciprocal`` is true the number stored in ``value`` is 1/f rather
    than f; this represents a point of the Riemann sphere near infinity.
    """

    value: complex
    error: float = 0.0
    reciprocal: bool = False

    def sphere(self):
        """The represented value as a complex number (``inf`` at the pole)."""
        if not self.reciprocal:
            return self.value
        if self.value == 0:
            return complex(math.inf, 0.0)
        return 1.0 / self.value

    def inverse(self):
        """EvalResult representing 1/f."""
        if self.reciprocal:
            return EvalResult(self.value, self.error, False)
        if self.value != 0 and abs(self.value) > 1e-300:
            v = 1.0 / self.value
            return EvalResult(v, self.error * abs(v) ** 2, False)
        return EvalResult(self.value, self.error, True)

    def __complex__(self):
        return complex(self.sphere())

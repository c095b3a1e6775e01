"""Exception hierarchy.

Two broad classes matter to callers (and fix the CLI exit codes): malformed
input (bad expression text, wrong degrees, unknown names) and mathematical
failure (non-isolated singularities, common components, splitting failures).
Everything derives from :class:`FreecurveError`.
"""

from __future__ import annotations

__all__ = [
    "FreecurveError",
    "InputError",
    "MathError",
    "ParseError",
    "NotHomogeneous",
    "DegreeMismatch",
    "OutOfRange",
    "UnknownEntry",
    "CatalogMissing",
    "ZeroInverse",
    "ZeroDivisor",
    "DegreeTooSmall",
    "CharDividesExponent",
    "NotOnCurve",
    "IncompleteSplit",
    "NotIsolated",
    "CommonComponent",
    "NotTangent",
    "HessianVanishes",
    "SingularPoint",
    "LineComponent",
    "NoStabilization",
    "NoCase",
    "Inconsistent",
    "TangencyDegenerate",
    "NotSplit",
    "NotReduced",
]


class FreecurveError(Exception):
    """Base class for all package errors."""

    exit_code = 3


class InputError(FreecurveError):
    """Malformed input: text, parameters, or references."""

    exit_code = 2


class MathError(FreecurveError):
    """A computation cannot proceed for mathematical reasons."""

    exit_code = 3


class ParseError(InputError):
    """Syntax error in polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotHomogeneous(InputError):
    """A homogeneous polynomial was requested but two terms disagree in degree."""

    def __init__(self, term_a, term_b):
        super().__init__(
            f"terms of different total degree: {term_a} and {term_b}"
        )
        self.terms = (term_a, term_b)


class DegreeMismatch(InputError):
    """Degrees do not satisfy the required relation."""


class OutOfRange(InputError):
    """A numeric parameter lies outside its admissible range."""


class UnknownEntry(InputError):
    """No catalog entry or construction family under the given name."""


class CatalogMissing(FreecurveError):
    """The catalog data file cannot be read."""

    exit_code = 4


class ZeroInverse(MathError):
    """Inversion of zero."""


class ZeroDivisor(MathError):
    """Inversion hit a zero divisor over a reducible extension modulus.

    Carries the discovered nontrivial factor of the modulus so the caller can
    restart over the smaller field.
    """

    def __init__(self, factor):
        super().__init__(f"zero divisor; modulus factor found: {factor}")
        self.factor = factor


class DegreeTooSmall(MathError):
    """Operation requires a higher degree (e.g. Hessian of a linear form)."""


class CharDividesExponent(MathError):
    """Squarefree part is unreliable: the characteristic divides an exponent."""


class NotOnCurve(MathError):
    """The germ does not vanish at the origin."""


class IncompleteSplit(MathError):
    """An initial form does not factor into linear forms over the field.

    Carries the residual (nonlinear) factor; callers may supply the missing
    lines explicitly.
    """

    def __init__(self, factor):
        super().__init__(f"does not split over the field; residual factor: {factor}")
        self.factor = factor


class NotIsolated(MathError):
    """Colength failed to stabilize: the ideal does not cut out an isolated point."""


class CommonComponent(MathError):
    """Two germs (or curves) share a component through the point."""


class NotTangent(MathError):
    """The given line does not divide the tangent cone."""


class HessianVanishes(MathError):
    """The Hessian determinant is identically zero."""


class SingularPoint(MathError):
    """A smooth point was required."""


class LineComponent(MathError):
    """A line component of the curve makes the quantity infinite."""


class NoStabilization(MathError):
    """The graded dimension scan ran past its window without stabilizing."""


class NoCase(MathError):
    """Data fits none of the trichotomy cases; hypotheses are violated."""


class Inconsistent(MathError):
    """Computed values contradict a proven bound; indicates an upstream bug."""


class TangencyDegenerate(MathError):
    """Tangency parameters collide (repeated tangent line)."""


class NotSplit(MathError):
    """Tangency parameters need a field extension; carries the quadratic."""

    def __init__(self, quadratic):
        super().__init__(f"tangency parameters not in the field: {quadratic}")
        self.quadratic = quadratic


class NotReduced(MathError):
    """The construction would produce a non-squarefree polynomial."""

"""Exception types raised across the package.

Every error derives from :class:`WPRMError` so the CLI can map any of them to
a usage diagnostic with a single ``except`` clause.  :class:`OracleDisagreement`
is the one exception that signals an internal inconsistency rather than bad
input.
"""

from __future__ import annotations


class WPRMError(ValueError):
    """Base class for all errors raised by :mod:`wprm`."""


# finite fields
class NotPrimePower(WPRMError):
    pass


class ReducibleModulus(WPRMError):
    pass


class NoBuiltinModulus(WPRMError):
    pass


class DivisionByZero(WPRMError, ZeroDivisionError):
    pass


# weighted projective spaces
class NonTrivialGcd(WPRMError):
    pass


class EmptyWeights(WPRMError):
    pass


class ZeroLambda(WPRMError):
    pass


class ZeroPoint(WPRMError):
    pass


class WrongWeights(WPRMError):
    pass


class BudgetExceeded(WPRMError):
    pass


# polynomials and ideals
class MismatchedAmbient(WPRMError):
    pass


class GcdViolation(WPRMError):
    pass


class NegativeExponent(WPRMError):
    pass


class NotDivisible(WPRMError):
    pass


# hilbert functions and codes
class UnsupportedRegime(WPRMError):
    pass


class UnsupportedDegree(WPRMError):
    pass


class OracleDisagreement(WPRMError):
    """Two independent computations of the same quantity disagree."""

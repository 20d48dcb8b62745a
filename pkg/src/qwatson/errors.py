"""Exception types shared across the package."""

from __future__ import annotations

from fractions import Fraction


class QWatsonError(Exception):
    """Base class for all package-specific errors."""


class DegenerateDenominator(QWatsonError):
    """A denominator q-factorial (base; q)_count evaluated to zero.

    Carries the offending base so callers (and the CLI) can name the
    vanishing factor.  Degenerate evaluation points are an expected
    outcome of random sampling and are resampled by the verifier.
    """

    def __init__(self, base: Fraction, count: int):
        self.base = base
        self.count = count
        super().__init__(f"denominator factor ({base}; q)_{count} = 0")


class ConstraintViolated(QWatsonError):
    """The evaluation point violates an identity's stated hypotheses."""


class UnknownIdentity(QWatsonError):
    """Requested catalog key does not exist."""

    def __init__(self, key: str):
        self.key = key
        super().__init__(f"unknown identity id: {key!r}")


class UnsatisfiableConstraints(QWatsonError):
    """No valid point exists within the sampling configuration."""


class ResampleBudgetExhausted(QWatsonError):
    """Degenerate points kept appearing past the resample budget."""

    def __init__(self, key: str, last_point):
        self.key = key
        self.last_point = last_point
        super().__init__(
            f"resample budget exhausted for {key!r}; last degenerate point: {last_point}"
        )

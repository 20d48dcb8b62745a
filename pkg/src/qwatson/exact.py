"""Exact rational arithmetic and the q-factorial primitives.

All values are fractions.Fraction: arbitrary-precision, always in canonical
form (positive denominator, gcd 1), so every equality test below is exact.
Evaluation points restrict the parameters a and c to squares of rationals,
a = A**2 and c = C**2, which makes every square root that appears in the
identities (sqrt(a), sqrt(c), sqrt(qac)) itself a rational.  Both sides of
each identity are rational functions of (q, A, C) for fixed integer (n, eps),
so nothing is lost by verifying at rational points only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from qwatson._backend import kernels
from qwatson.errors import DegenerateDenominator

RationalValue = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def qpow(q: Fraction, m: int) -> Fraction:
    """q**m exactly, for any integer m (q != 0 when m < 0)."""
    q = _as_fraction(q)
    return Fraction(*kernels.qpow_qq(q.numerator, q.denominator, m))


def qpoch(x: Fraction, q: Fraction, n: int) -> Fraction:
    """Rising q-factorial (x; q)_n = prod_{i=0}^{n-1} (1 - x q^i).

    (x; q)_0 = 1.  The result may legitimately be zero.
    """
    if n < 0:
        raise ValueError("q-factorial length must be nonnegative")
    x = _as_fraction(x)
    q = _as_fraction(q)
    return Fraction(*kernels.qpoch_qq(x.numerator, x.denominator, q.numerator, q.denominator, n))


def qpoch_desc(x: Fraction, q: Fraction, n: int) -> Fraction:
    """Falling q-factorial <x; q>_n = prod_{i=0}^{n-1} (1 - x q^-i)."""
    if n < 0:
        raise ValueError("q-factorial length must be nonnegative")
    x = _as_fraction(x)
    q = _as_fraction(q)
    if q == 0 and n > 0:
        raise ZeroDivisionError("descending q-factorial needs q != 0")
    return Fraction(
        *kernels.qpoch_desc_qq(x.numerator, x.denominator, q.numerator, q.denominator, n)
    )


def poch_fraction(
    nums: list[Fraction], dens: list[Fraction], q: Fraction, n: int
) -> Fraction:
    """prod (a; q)_n over nums divided by prod (d; q)_n over dens.

    Raises DegenerateDenominator naming the first base whose q-factorial
    vanishes.
    """
    q = _as_fraction(q)
    den = Fraction(1)
    for d in dens:
        f = qpoch(d, q, n)
        if f == 0:
            raise DegenerateDenominator(_as_fraction(d), n)
        den *= f
    num = Fraction(1)
    for a in nums:
        num *= qpoch(a, q, n)
    return num / den


def qbinom(n: int, k: int, q: Fraction) -> Fraction:
    """Gaussian binomial (q; q)_n / ((q; q)_k (q; q)_{n-k}).

    Returns 0 outside 0 <= k <= n, mirroring the vanishing of the
    (q^-k; q)_i factors it stands in for.  Requires q not in {0, 1, -1}.
    """
    if n < 0:
        raise ValueError("upper index must be nonnegative")
    q = _as_fraction(q)
    if q == 0 or q == 1 or q == -1:
        raise ValueError("Gaussian binomial needs q outside {0, 1, -1}")
    return Fraction(*kernels.qbinom_qq(n, k, q.numerator, q.denominator))


def rational_sqrt(x: Fraction) -> Fraction | None:
    """The nonnegative rational square root of x, or None if none exists."""
    x = _as_fraction(x)
    if x < 0:
        return None
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class ParamPoint:
    """A concrete evaluation point (q, A, C, n, eps) with a = A^2, c = C^2.

    Requires q outside {0, 1, -1} (so q^m != 1 for m >= 1 and (q; q)_k never
    vanishes), nonzero A and C, and nonnegative n and eps.  sqrt(a) is +A and
    -sqrt(a) is -A consistently everywhere; likewise for c.
    """

    q: Fraction
    A: Fraction
    C: Fraction
    n: int
    eps: int = 0

    def __post_init__(self):
        object.__setattr__(self, "q", _as_fraction(self.q))
        object.__setattr__(self, "A", _as_fraction(self.A))
        object.__setattr__(self, "C", _as_fraction(self.C))
        if self.q == 0 or self.q == 1 or self.q == -1:
            raise ValueError("q must lie outside {0, 1, -1}")
        if self.A == 0:
            raise ValueError("A must be nonzero")
        if self.C == 0:
            raise ValueError("C must be nonzero")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.eps < 0:
            raise ValueError("eps must be nonnegative")

    @property
    def a(self) -> Fraction:
        return self.A * self.A

    @property
    def c(self) -> Fraction:
        return self.C * self.C

    def sqrt_q(self) -> Fraction | None:
        """sqrt(q) when q is a perfect rational square, else None."""
        return rational_sqrt(self.q)

    def __str__(self) -> str:
        return f"(q={self.q}, A={self.A}, C={self.C}, n={self.n}, eps={self.eps})"

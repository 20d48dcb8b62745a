"""Independent brute-force evaluators and point generators for the tests.

naive_phi_eval recomputes a terminating series term by term from the
definition (per-term q-factorial products, no term-ratio recurrence), so it
shares no algorithm with series.phi_eval.  naive_qpoch multiplies plain
Fractions and is the ground truth for the arithmetic kernels themselves.
"""

from __future__ import annotations

import random
from fractions import Fraction

from qwatson.exact import poch_fraction
from qwatson.series import SeriesSpec


def naive_qpoch(x: Fraction, q: Fraction, n: int) -> Fraction:
    total = Fraction(1)
    for i in range(n):
        total *= 1 - x * q**i
    return total


def naive_qpoch_desc(x: Fraction, q: Fraction, n: int) -> Fraction:
    total = Fraction(1)
    for i in range(n):
        total *= 1 - x * q**-i
    return total


def naive_qbinom(n: int, k: int, q: Fraction) -> Fraction:
    if k < 0 or k > n:
        return Fraction(0)
    return naive_qpoch(q, q, n) / (naive_qpoch(q, q, k) * naive_qpoch(q, q, n - k))


def naive_phi_eval(spec: SeriesSpec, q: Fraction) -> Fraction:
    """Direct term-by-term summation of the series definition.

    poch_fraction checks every denominator factorial before dividing, so
    degenerate specs raise DegenerateDenominator here exactly when the
    recurrence path raises.
    """
    total = Fraction(0)
    for k in range(spec.bound + 1):
        total += (
            poch_fraction(
                list(spec.numer_params), [q, *spec.denom_params], q, k
            )
            * spec.argument**k
        )
    return total


def rational(rng: random.Random, height: int = 10, signed: bool = True) -> Fraction:
    sign = rng.choice((1, -1)) if signed else 1
    return Fraction(sign * rng.randint(1, height), rng.randint(1, height))


def base_q(rng: random.Random, height: int = 10, square: bool = False) -> Fraction:
    while True:
        q = rational(rng, height)
        if abs(q) != 1:
            return q * q if square else q

"""Terminating basic hypergeometric series and finite weighted sums.

A series here is always a finite sum with an explicit bound: the catalog
supplies the termination index from the identity's structure (the q^-n style
upper parameter), never by inspecting parameters at run time.  phi_eval
implements

    sum_{k=0}^{bound} [nums; q, dens]_k * z^k

with the (q; q)_k factor joining the denominator, computed by the term-ratio
recurrence t_{k+1} = t_k * z * prod(1 - a_i q^k) / [(1 - q^{k+1}) prod(1 - b_j q^k)].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from qwatson._backend import kernels
from qwatson.exact import ParamPoint, _as_fraction

# Rule mapping (point, summation index) to an exact term value; may raise
# DegenerateDenominator.
TermGenerator = Callable[[ParamPoint, int], Fraction]


@dataclass(frozen=True)
class SeriesSpec:
    """A fully evaluated terminating series: parameters, argument, bound."""

    numer_params: tuple[Fraction, ...]
    denom_params: tuple[Fraction, ...]
    argument: Fraction
    bound: int

    def __post_init__(self):
        object.__setattr__(
            self, "numer_params", tuple(_as_fraction(x) for x in self.numer_params)
        )
        object.__setattr__(
            self, "denom_params", tuple(_as_fraction(x) for x in self.denom_params)
        )
        object.__setattr__(self, "argument", _as_fraction(self.argument))
        if self.bound < 0:
            raise ValueError("series bound must be nonnegative")


def _check_q(q: Fraction) -> Fraction:
    q = _as_fraction(q)
    if q == 0 or q == 1 or q == -1:
        raise ValueError("series base q must lie outside {0, 1, -1}")
    return q


def phi_eval(spec: SeriesSpec, q: Fraction) -> Fraction:
    """Exact value of the terminating series described by spec, base q.

    If a numerator factor vanishes at some index k0 <= bound, every later
    term is zero and summation stops early.  A denominator factor vanishing
    at or before that index raises DegenerateDenominator (at the same index
    the pending terms are 0/0, which the side condition excludes).
    """
    q = _check_q(q)
    nums = [(p.numerator, p.denominator) for p in spec.numer_params]
    dens = [(p.numerator, p.denominator) for p in spec.denom_params]
    z = spec.argument
    return Fraction(
        *kernels.phi_sum_qq(
            nums, dens, z.numerator, z.denominator, q.numerator, q.denominator, spec.bound
        )
    )


def terminating_bound(
    numer_params: list[Fraction], q: Fraction, max_probe: int
) -> int | None:
    """Smallest n <= max_probe with some parameter exactly q^-n, else None.

    Diagnostic helper only: the catalog always supplies bounds explicitly,
    since several parameters of one series can be negative powers of q.
    """
    q = _check_q(q)
    params = {_as_fraction(p) for p in numer_params}
    power = Fraction(1)  # q^-n
    for n in range(max_probe + 1):
        if power in params:
            return n
        power /= q
    return None


def weighted_sum(gen: TermGenerator, point: ParamPoint, lo: int, hi: int) -> Fraction:
    """Exact sum of gen(point, i) for i in lo..hi inclusive; empty range is 0."""
    if lo > hi + 1:
        raise ValueError("lower bound exceeds upper bound by more than one")
    total = Fraction(0)
    for i in range(lo, hi + 1):
        total += gen(point, i)
    return total

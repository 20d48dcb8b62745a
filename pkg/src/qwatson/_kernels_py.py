"""Pure-Python arithmetic kernels.

Every kernel works on raw (numerator, denominator) integer pairs instead of
Fraction objects: the inner loops multiply unreduced big integers and reduce
once per accumulation step, which avoids the per-operation object and gcd
overhead of Fraction arithmetic.  qwatson._qkernels is a Cython
transliteration of this module with the identical API; qwatson._backend picks
whichever is importable.

Inputs are assumed canonical (denominator > 0, gcd = 1), as produced by
Fraction.  Outputs may carry a common factor or a negative denominator; the
Fraction constructor at the wrapper boundary restores canonical form.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from qwatson.errors import DegenerateDenominator


def _reduce(n: int, d: int) -> tuple[int, int]:
    g = gcd(n, d)
    if g > 1:
        n //= g
        d //= g
    return n, d


def qpow_qq(xn: int, xd: int, m: int) -> tuple[int, int]:
    """x**m for x = xn/xd, any integer m."""
    if m == 0:
        return 1, 1
    if m < 0:
        if xn == 0:
            raise ZeroDivisionError("0 raised to a negative power")
        xn, xd = xd, xn
        m = -m
    return xn**m, xd**m


def qpoch_qq(xn: int, xd: int, qn: int, qd: int, n: int) -> tuple[int, int]:
    """Rising q-factorial (x; q)_n = prod_{i<n} (1 - x q^i)."""
    pn, pd = 1, 1
    rn, rd = 1, 1  # q^i
    for _ in range(n):
        pn *= xd * rd - xn * rn
        pd *= xd * rd
        rn *= qn
        rd *= qd
    return pn, pd


def qpoch_desc_qq(xn: int, xd: int, qn: int, qd: int, n: int) -> tuple[int, int]:
    """Falling q-factorial <x; q>_n = prod_{i<n} (1 - x q^-i)."""
    if qn == 0 and n > 0:
        raise ZeroDivisionError("descending q-factorial needs q != 0")
    pn, pd = 1, 1
    rn, rd = 1, 1  # q^-i, tracked as a raw pair (sign may sit in rd)
    for _ in range(n):
        pn *= xd * rd - xn * rn
        pd *= xd * rd
        rn *= qd
        rd *= qn
    if pd < 0:
        pn, pd = -pn, -pd
    return pn, pd


def qbinom_qq(n: int, k: int, qn: int, qd: int) -> tuple[int, int]:
    """Gaussian binomial [n choose k]_q; 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0, 1
    if n - k < k:
        k = n - k
    # prod_{j=1..k} (1 - q^{n-k+j}) / (1 - q^j)
    pn, pd = 1, 1
    lo_n, lo_d = qn, qd  # q^j
    hi_n, hi_d = qn ** (n - k + 1), qd ** (n - k + 1)  # q^{n-k+j}
    for _ in range(k):
        pn *= hi_d - hi_n
        pd *= hi_d
        pn *= lo_d
        pd *= lo_d - lo_n
        pn, pd = _reduce(pn, pd)
        lo_n *= qn
        lo_d *= qd
        hi_n *= qn
        hi_d *= qd
    if pd < 0:
        pn, pd = -pn, -pd
    return pn, pd


def phi_sum_qq(
    nums: list[tuple[int, int]],
    dens: list[tuple[int, int]],
    zn: int,
    zd: int,
    qn: int,
    qd: int,
    bound: int,
) -> tuple[int, int]:
    """Terminating basic hypergeometric sum by term-ratio iteration.

    Computes sum_{k=0}^{bound} prod(nums; q)_k / [(q; q)_k prod(dens; q)_k]
    * z^k.  A vanishing numerator factor at step k zeroes every later term
    and stops accumulating, but denominator factors are still scanned across
    the whole nominal range 0..bound-1: a zero anywhere there makes the
    displayed sum ill-posed (terms past a truncation become 0/0, whose limit
    need not be zero) and raises DegenerateDenominator.
    """
    sn, sd = 1, 1  # running sum, starts at the k=0 term
    tn, td = 1, 1  # current term
    rn, rd = 1, 1  # q^k
    truncated = False
    for k in range(bound):
        fn, fd = zn, zd  # ratio t_{k+1} / t_k
        for bn, bd in dens:
            v = bd * rd - bn * rn
            if v == 0:
                raise DegenerateDenominator(Fraction(bn, bd), k + 1)
            if not truncated:
                fd *= v
                fn *= bd * rd
        if not truncated:
            for an, ad in nums:
                u = ad * rd - an * rn
                if u == 0:
                    truncated = True
                    break
                fn *= u
                fd *= ad * rd
        rn *= qn
        rd *= qd
        if truncated:
            continue
        fd *= rd - rn  # the (q; q)_k factor advances: 1 - q^{k+1}
        fn *= rd
        tn *= fn
        td *= fd
        tn, td = _reduce(tn, td)
        sn = sn * td + tn * sd
        sd *= td
        sn, sd = _reduce(sn, sd)
    if sd < 0:
        sn, sd = -sn, -sd
    return sn, sd

# cython: language_level=3
# cython: boundscheck=False
"""Compiled arithmetic kernels: a Cython transliteration of _kernels_py.

Same API, same semantics.  The arithmetic stays on arbitrary-precision
Python integers; the win comes from compiled loop and call overhead around
the big-integer operations, which the benchmark in benchmarks/ quantifies.
"""

from fractions import Fraction
from math import gcd

from qwatson.errors import DegenerateDenominator


cdef _reduce(n, d):
    g = gcd(n, d)
    if g > 1:
        n //= g
        d //= g
    return n, d


def qpow_qq(xn, xd, m):
    """x**m for x = xn/xd, any integer m."""
    if m == 0:
        return 1, 1
    if m < 0:
        if xn == 0:
            raise ZeroDivisionError("0 raised to a negative power")
        xn, xd = xd, xn
        m = -m
    return xn**m, xd**m


def qpoch_qq(xn, xd, qn, qd, Py_ssize_t n):
    """Rising q-factorial (x; q)_n = prod_{i<n} (1 - x q^i)."""
    cdef Py_ssize_t i
    pn, pd = 1, 1
    rn, rd = 1, 1
    for i in range(n):
        pn *= xd * rd - xn * rn
        pd *= xd * rd
        rn *= qn
        rd *= qd
    return pn, pd


def qpoch_desc_qq(xn, xd, qn, qd, Py_ssize_t n):
    """Falling q-factorial <x; q>_n = prod_{i<n} (1 - x q^-i)."""
    cdef Py_ssize_t i
    if qn == 0 and n > 0:
        raise ZeroDivisionError("descending q-factorial needs q != 0")
    pn, pd = 1, 1
    rn, rd = 1, 1
    for i in range(n):
        pn *= xd * rd - xn * rn
        pd *= xd * rd
        rn *= qd
        rd *= qn
    if pd < 0:
        pn, pd = -pn, -pd
    return pn, pd


def qbinom_qq(Py_ssize_t n, Py_ssize_t k, qn, qd):
    """Gaussian binomial [n choose k]_q; 0 outside 0 <= k <= n."""
    cdef Py_ssize_t j
    if k < 0 or k > n:
        return 0, 1
    if n - k < k:
        k = n - k
    pn, pd = 1, 1
    lo_n, lo_d = qn, qd
    hi_n, hi_d = qn ** (n - k + 1), qd ** (n - k + 1)
    for j in range(k):
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


def phi_sum_qq(list nums, list dens, zn, zd, qn, qd, Py_ssize_t bound):
    """Terminating basic hypergeometric sum by term-ratio iteration.

    See _kernels_py.phi_sum_qq for the truncation and degeneracy policy.
    """
    cdef Py_ssize_t k, j, n_nums, n_dens
    cdef bint truncated
    n_nums = len(nums)
    n_dens = len(dens)
    sn, sd = 1, 1
    tn, td = 1, 1
    rn, rd = 1, 1
    truncated = False
    for k in range(bound):
        fn, fd = zn, zd
        for j in range(n_dens):
            bn, bd = <tuple> dens[j]
            v = bd * rd - bn * rn
            if v == 0:
                raise DegenerateDenominator(Fraction(bn, bd), k + 1)
            if not truncated:
                fd *= v
                fn *= bd * rd
        if not truncated:
            for j in range(n_nums):
                an, ad = <tuple> nums[j]
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
        fd *= rd - rn
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

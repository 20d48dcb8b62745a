"""The identity catalog: every verified summation formula as an IdentityCase.

Each case pairs a left-hand side with a right-hand side that are evaluated
independently:

* the LHS is always the "dumb" defining sum -- a SeriesSpec fed to phi_eval
  (or, for the partition-of-unity lemmas, the literal finite i-sum), so no
  closed-form knowledge can leak into it;
* the RHS is the transcribed closed form (a product of q-factorial fractions,
  or a short i-sum of them for the general theorems).

A transcription mistake on either side therefore shows up as an exact
rational inequality at random points instead of cancelling out.

Catalog keys:

  andrews, jain     the two classical q-Watson evaluations
  phi65             terminating very-well-poised 6phi5 evaluation
  unity-a, unity-b  finite i-sums identically equal to 1
  rel-a .. rel-d    series rearrangement relations (inner series evaluated
                    by brute force, validating the rearrangement alone)
  thm-a .. thm-d    the four general summation theorems
  cor-a1 .. cor-d2  the eight eps in {1, 2} corollaries
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from qwatson.errors import ConstraintViolated, UnknownIdentity
from qwatson.exact import ParamPoint, poch_fraction, qbinom, qpoch, qpoch_desc
from qwatson.series import SeriesSpec, phi_eval, weighted_sum

CATALOG_VERSION = "1"

Evaluator = Callable[[ParamPoint], Fraction]


@dataclass(frozen=True)
class ParityCase:
    """Decomposition n = 2s (even) or n = 1 + 2s (odd)."""

    s: int
    parity: str  # "even" | "odd"

    @classmethod
    def of(cls, n: int) -> "ParityCase":
        return cls(n // 2, "odd" if n % 2 else "even")

    @property
    def n(self) -> int:
        return 2 * self.s + (1 if self.parity == "odd" else 0)


@dataclass(frozen=True)
class IdentityCase:
    """One catalog entry: paired evaluators plus domain constraints."""

    key: str
    ref: str
    lhs: Evaluator
    rhs: Evaluator
    lhs_shape: str
    rhs_shape: str
    constraint_text: str = "none"
    n_min: int = 0
    eps_fixed: int | None = None
    eps_le_n: bool = False
    needs_square_q: bool = False
    # True for the cases whose value changes sign together on both sides
    # under C -> -C (odd powers of C in the closed form).
    c_flip_covariant: bool = False

    def constraints_ok(self, point: ParamPoint) -> bool:
        if point.n < self.n_min:
            return False
        if self.eps_le_n and self.eps_fixed is None and point.eps > point.n:
            return False
        if self.needs_square_q and point.sqrt_q() is None:
            return False
        return True

    def require_constraints(self, point: ParamPoint) -> None:
        if not self.constraints_ok(point):
            raise ConstraintViolated(
                f"point {point} violates constraints of {self.key!r}: {self.constraint_text}"
            )

    def lhs_value(self, point: ParamPoint) -> Fraction:
        self.require_constraints(point)
        return self.lhs(point)

    def rhs_value(self, point: ParamPoint) -> Fraction:
        self.require_constraints(point)
        return self.rhs(point)


# ---------------------------------------------------------------------------
# left-hand sides (defining sums)

def _sqac(p: ParamPoint) -> Fraction:
    """sqrt(q a c) = sqrt(q) * A * C; needs q to be a perfect square."""
    root = p.sqrt_q()
    if root is None:
        raise ConstraintViolated(
            f"q = {p.q} is not a perfect rational square, so sqrt(q*a*c) is irrational"
        )
    return root * p.A * p.C


def watson_series(p: ParamPoint, eps: int) -> SeriesSpec:
    """4phi3 with upper row (q^-n, q^{1+n}a, sqrt(c), -sqrt(c)), lower row
    (q sqrt(a), -q sqrt(a), q^eps c), argument q."""
    q, A, C, n = p.q, p.A, p.C, p.n
    a, c = p.a, p.c
    return SeriesSpec(
        (q**-n, q ** (1 + n) * a, C, -C),
        (q * A, -q * A, q**eps * c),
        q,
        n,
    )


def watson_shifted_series(p: ParamPoint, eps: int) -> SeriesSpec:
    """Variant with the shifted root: upper row (q^-n, q^{1+n}a, q^eps sqrt(c),
    -sqrt(c)), same lower row."""
    q, A, C, n = p.q, p.A, p.C, p.n
    a, c = p.a, p.c
    return SeriesSpec(
        (q**-n, q ** (1 + n) * a, q**eps * C, -C),
        (q * A, -q * A, q**eps * c),
        q,
        n,
    )


def jain_series(p: ParamPoint, eps: int, upper_shift: int = 0) -> SeriesSpec:
    """4phi3 with upper row (a, c, q^{upper_shift - n}, -q^-n), lower row
    (sqrt(qac), -sqrt(qac), q^{eps-2n}), argument q."""
    q, n = p.q, p.n
    a, c = p.a, p.c
    s = _sqac(p)
    return SeriesSpec(
        (a, c, q ** (upper_shift - n), -(q**-n)),
        (s, -s, q ** (eps - 2 * n)),
        q,
        n,
    )


def phi65_series(a: Fraction, root_a: Fraction, b: Fraction, c: Fraction, q: Fraction, eps: int) -> SeriesSpec:
    """The terminating very-well-poised 6phi5 with argument q^{1+eps} a / (b c)."""
    return SeriesSpec(
        (a, q * root_a, -q * root_a, b, c, q**-eps),
        (root_a, -root_a, q * a / b, q * a / c, q ** (1 + eps) * a),
        q ** (1 + eps) * a / (b * c),
        eps,
    )


def _phi65_point_args(p: ParamPoint) -> tuple[Fraction, Fraction, Fraction]:
    # Embedding of the three free 6phi5 parameters into a ParamPoint: a and c
    # are the point's squares, b = q^{1+n} c varies with n and stays even in
    # both A and C (so the sign-flip invariance suite covers this case too).
    return p.a, p.q ** (1 + p.n) * p.c, p.c


def lhs_eval(key: str, point: ParamPoint) -> Fraction:
    """Defining-sum value of the identity's left-hand side at the point."""
    case = get_case(key)
    return case.lhs_value(point)


# ---------------------------------------------------------------------------
# closed forms

def andrews_rhs(p: ParamPoint) -> Fraction:
    """Closed form of the base q-Watson sum (Andrews): 0 for odd n, else a
    c^s-weighted base-q^2 factorial fraction with n = 2s."""
    pc = ParityCase.of(p.n)
    if pc.parity == "odd":
        return Fraction(0)
    q, a, c = p.q, p.a, p.c
    s = pc.s
    return p.C ** (2 * s) * poch_fraction(
        [q, q**2 * a / c], [q**2 * a, q * c], q * q, s
    )


def jain_rhs(p: ParamPoint) -> Fraction:
    """Closed form of the base q-Watson sum (Jain)."""
    q, a, c, n = p.q, p.a, p.c, p.n
    return poch_fraction([q * a, q * c], [q, q * a * c], q * q, n)


def phi65_rhs(a: Fraction, b: Fraction, c: Fraction, q: Fraction, eps: int) -> Fraction:
    """Closed form of the terminating very-well-poised 6phi5."""
    return poch_fraction([q * a, q * a / (b * c)], [q * a / b, q * a / c], q, eps)


def unity_lhs(which: str, p: ParamPoint, k: int) -> Fraction:
    """Full i-sum (0..eps) of a partition-of-unity lemma at cutoff k.

    Variant "a" uses Gaussian binomials and rising factorials; variant "b"
    uses falling factorials and half-integer powers of c (exact integral
    powers of C).  Both sums evaluate to exactly 1 at every non-degenerate
    point.
    """
    if which == "a":
        gen = _unity_a_term(k)
    elif which == "b":
        gen = _unity_b_term(k)
    else:
        raise ValueError(f"unknown unity variant: {which!r}")
    return weighted_sum(gen, p, 0, p.eps)


def _unity_a_term(k: int):
    def term(p: ParamPoint, i: int) -> Fraction:
        q, c, eps = p.q, p.c, p.eps
        val = qbinom(k, i, q) * q ** ((i + eps - 1) * i) * c**i
        val *= poch_fraction([c * q ** (k + i)], [c * q**i], q, eps - i)
        val *= poch_fraction([c * q ** (2 * i - 1)], [c * q ** (i - 1)], q, 1)
        val *= poch_fraction([q**-eps], [q**eps * c], q, i)
        return val

    return term


def _unity_b_term(k: int):
    def term(p: ParamPoint, i: int) -> Fraction:
        q, C, c, eps = p.q, p.C, p.c, p.eps
        sign = -1 if i % 2 else 1
        val = sign * q ** (eps + i * (i - 1) // 2) * C ** (i - eps)
        val *= poch_fraction([c * q ** (2 * i - 1)], [c * q ** (i + eps - 1)], q, 1)
        val *= poch_fraction([q**-eps], [q], q, i)
        val *= poch_fraction([q ** (1 - eps) / C], [q ** (2 - eps - i) / c], q, eps)
        val *= qpoch_desc(q**k, q, i) * qpoch_desc(c * q ** (k + eps - 1), q, eps - i)
        val *= poch_fraction([], [q**k * C], q, eps)
        return val

    return term


def _coeff5_watson(p: ParamPoint, i: int) -> Fraction:
    # shared 5-over-5 factorial fraction of the Watson-side i-sums
    q, A, C, n, eps = p.q, p.A, p.C, p.n, p.eps
    a, c = p.a, p.c
    return poch_fraction(
        [q**-eps, q**-n, q ** (1 + n) * a, C, -C],
        [q, q * A, -q * A, q**eps * c, q ** (i - 1) * c],
        q,
        i,
    )


def _coeff5_jain(p: ParamPoint, i: int) -> Fraction:
    # shared 5-over-5 factorial fraction of the Jain-side i-sums
    q, n, eps = p.q, p.n, p.eps
    a, c = p.a, p.c
    s = _sqac(p)
    return poch_fraction(
        [q**-eps, q**-n, -(q**-n), a, c],
        [q, s, -s, q ** (eps - 2 * n), q ** (i - 1 - 2 * n)],
        q,
        i,
    )


def _andrews_factor(p: ParamPoint, i: int) -> Fraction:
    # the evaluated inner sum of thm-a/thm-b: nonzero only for n - i even
    q, a, c = p.q, p.a, p.c
    s = (p.n - i) // 2
    return poch_fraction(
        [q, q**2 * a / c], [q ** (2 + 2 * i) * a, q ** (1 + 2 * i) * c], q * q, s
    )


def _jain_factor(p: ParamPoint, i: int) -> Fraction:
    # the evaluated inner sum of thm-c/thm-d
    q, a, c, n = p.q, p.a, p.c, p.n
    return poch_fraction(
        [q ** (1 + i) * a, q ** (1 + i) * c], [q, q ** (1 + 2 * i) * a * c], q * q, n - i
    )


def thm_rhs(key: str, p: ParamPoint) -> Fraction:
    """Right-hand i-sum of one of the four summation theorems."""
    q, C, n, eps = p.q, p.C, p.n, p.eps

    def term_a(pt: ParamPoint, i: int) -> Fraction:
        # for i > n the (q^-n; q)_i factor of the coefficient vanishes
        if i > n or (n - i) % 2:
            return Fraction(0)
        return (
            q ** ((eps + n) * i)
            * C ** (n + i)
            * _coeff5_watson(pt, i)
            * _andrews_factor(pt, i)
        )

    def term_b(pt: ParamPoint, i: int) -> Fraction:
        if i > n or (n - i) % 2:
            return Fraction(0)
        sign = -1 if i % 2 else 1
        return (
            sign
            * q ** ((eps + n) * i - i * (i - 1) // 2)
            * C**n
            * _coeff5_watson(pt, i)
            * _andrews_factor(pt, i)
        )

    def term_c(pt: ParamPoint, i: int) -> Fraction:
        return q ** ((i + eps - 2 * n) * i) * _coeff5_jain(pt, i) * _jain_factor(pt, i)

    def term_d(pt: ParamPoint, i: int) -> Fraction:
        sign = -1 if i % 2 else 1
        return (
            sign
            * q ** ((eps - n) * i + i * (i + 1) // 2)
            * _coeff5_jain(pt, i)
            * _jain_factor(pt, i)
        )

    terms = {"thm-a": term_a, "thm-b": term_b, "thm-c": term_c, "thm-d": term_d}
    if key not in terms:
        raise UnknownIdentity(key)
    if key in ("thm-c", "thm-d") and eps > n:
        raise ConstraintViolated(f"{key} requires 0 <= eps <= n, got eps={eps}, n={n}")
    return weighted_sum(terms[key], p, 0, eps)


def rel_rhs(key: str, p: ParamPoint) -> Fraction:
    """Right-hand i-sum of a rearrangement relation, with the inner series
    evaluated by brute force rather than by its closed form."""
    q, A, C, n, eps = p.q, p.A, p.C, p.n, p.eps
    a, c = p.a, p.c

    def inner_watson(i: int) -> Fraction:
        spec = SeriesSpec(
            (q ** (i - n), q ** (1 + n + i) * a, q**i * C, -(q**i * C)),
            (q ** (1 + i) * A, -(q ** (1 + i) * A), q ** (2 * i) * c),
            q,
            n - i,
        )
        return phi_eval(spec, q)

    def inner_jain(i: int) -> Fraction:
        s = _sqac(p)
        spec = SeriesSpec(
            (q**i * a, q**i * c, q ** (i - n), -(q ** (i - n))),
            (q**i * s, -(q**i * s), q ** (2 * i - 2 * n)),
            q,
            n - i,
        )
        return phi_eval(spec, q)

    def term_a(pt: ParamPoint, i: int) -> Fraction:
        # for i > n the (q^-n; q)_i factor of the coefficient vanishes
        if i > n:
            return Fraction(0)
        return q ** ((i + eps) * i) * c**i * _coeff5_watson(pt, i) * inner_watson(i)

    def term_b(pt: ParamPoint, i: int) -> Fraction:
        if i > n:
            return Fraction(0)
        sign = -1 if i % 2 else 1
        return (
            sign
            * q ** (eps * i + i * (i + 1) // 2)
            * C**i
            * _coeff5_watson(pt, i)
            * inner_watson(i)
        )

    def term_c(pt: ParamPoint, i: int) -> Fraction:
        return q ** ((i + eps - 2 * n) * i) * _coeff5_jain(pt, i) * inner_jain(i)

    def term_d(pt: ParamPoint, i: int) -> Fraction:
        sign = -1 if i % 2 else 1
        return (
            sign
            * q ** ((eps - n) * i + i * (i + 1) // 2)
            * _coeff5_jain(pt, i)
            * inner_jain(i)
        )

    terms = {"rel-a": term_a, "rel-b": term_b, "rel-c": term_c, "rel-d": term_d}
    if key not in terms:
        raise UnknownIdentity(key)
    return weighted_sum(terms[key], p, 0, eps)


def cor_rhs(key: str, p: ParamPoint) -> Fraction:
    """Printed closed form of one of the eight corollaries."""
    q, C, n = p.q, p.C, p.n
    a, c = p.a, p.c
    pc = ParityCase.of(n)
    s = pc.s
    qq = q * q

    def base_even() -> Fraction:
        # the shared even branch: c^s [q, q^2 a/c; q^2 a, q c]_{q^2, s}
        return C ** (2 * s) * poch_fraction([q, qq * a / c], [qq * a, q * c], qq, s)

    if key == "cor-a1":
        if pc.parity == "even":
            return base_even()
        return (
            C ** (2 + 2 * s)
            * poch_fraction([q], [q * c], qq, 1 + s)
            * poch_fraction([qq * a / c], [qq * a], qq, s)
        )

    if key == "cor-a2":
        if pc.parity == "even":
            brace = 1 + qq * c * poch_fraction(
                [c, q ** (2 * s), q ** (1 + 2 * s) * a],
                [qq * c, q ** (1 + 2 * s) * c, q ** (2 * s) * a / c],
                q,
                1,
            )
            return brace * base_even()
        return (
            poch_fraction([qq], [qq * c], q, 1)
            * C ** (2 + 2 * s)
            * poch_fraction([q**3, qq * a / c], [qq * a, q**3 * c], qq, s)
        )

    if key == "cor-b1":
        if pc.parity == "even":
            return base_even()
        return (
            -(C ** (1 + 2 * s))
            * poch_fraction([q], [q * c], qq, 1 + s)
            * poch_fraction([qq * a / c], [qq * a], qq, s)
        )

    if key == "cor-b2":
        if pc.parity == "even":
            brace = 1 + q * poch_fraction(
                [c, q ** (2 * s), q ** (1 + 2 * s) * a],
                [qq * c, q ** (1 + 2 * s) * c, q ** (2 * s) * a / c],
                q,
                1,
            )
            return brace * base_even()
        return (
            -poch_fraction([qq], [qq * c], q, 1)
            * C ** (1 + 2 * s)
            * poch_fraction([q**3, qq * a / c], [qq * a, q**3 * c], qq, s)
        )

    jain_full = None
    if key in ("cor-c1", "cor-c2", "cor-d1", "cor-d2"):
        jain_full = poch_fraction([q * a, q * c], [q, q * a * c], qq, n)
        jain_low = poch_fraction([a, c], [q, q * a * c], qq, n)

    if key == "cor-c1":
        return jain_full + jain_low

    if key == "cor-c2":
        head = (1 + q) * poch_fraction([q ** (1 - 2 * n)], [q ** (2 - 2 * n)], q, 1)
        brace = 1 + q * poch_fraction(
            [a, c, q ** (-2 * n)],
            [q ** (2 - 2 * n), a * q ** (2 * n - 1), c * q ** (2 * n - 1)],
            q,
            1,
        )
        return head * jain_low + brace * jain_full

    if key == "cor-d1":
        return jain_full - q**n * jain_low

    if key == "cor-d2":
        head = (1 + q) * (1 - q ** (2 * n - 1)) / (q ** (n - 1) - q ** (1 - n))
        brace = 1 - poch_fraction(
            [a, c, q ** (2 * n)],
            [q ** (2 - 2 * n), a * q ** (2 * n - 1), c * q ** (2 * n - 1)],
            q,
            1,
        )
        return head * jain_low + brace * jain_full

    raise UnknownIdentity(key)


# ---------------------------------------------------------------------------
# catalog assembly

def _with_eps(builder, eps: int) -> Evaluator:
    def lhs(p: ParamPoint) -> Fraction:
        return phi_eval(builder(p, eps), p.q)

    return lhs


def _point_eps(builder) -> Evaluator:
    def lhs(p: ParamPoint) -> Fraction:
        return phi_eval(builder(p, p.eps), p.q)

    return lhs


def _jain_lhs_fixed(eps: int, upper_shift: int) -> Evaluator:
    def lhs(p: ParamPoint) -> Fraction:
        return phi_eval(jain_series(p, eps, upper_shift), p.q)

    return lhs


def _phi65_lhs(p: ParamPoint) -> Fraction:
    a, b, c = _phi65_point_args(p)
    return phi_eval(phi65_series(a, p.A, b, c, p.q, p.eps), p.q)


def _phi65_rhs_case(p: ParamPoint) -> Fraction:
    a, b, c = _phi65_point_args(p)
    return phi65_rhs(a, b, c, p.q, p.eps)


def _build_catalog() -> dict[str, IdentityCase]:
    cases = [
        IdentityCase(
            key="andrews",
            ref="Andrews' q-Watson formula",
            lhs=_with_eps(watson_series, 0),
            rhs=andrews_rhs,
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="parity-split closed product (0 for odd n)",
        ),
        IdentityCase(
            key="jain",
            ref="Jain's q-Watson formula",
            lhs=_jain_lhs_fixed(0, 0),
            rhs=jain_rhs,
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="closed product in base q^2",
            constraint_text="q a perfect rational square",
            needs_square_q=True,
        ),
        IdentityCase(
            key="phi65",
            ref="Terminating very-well-poised 6phi5 sum",
            lhs=_phi65_lhs,
            rhs=_phi65_rhs_case,
            lhs_shape="6phi5(q; q^{1+eps}a/bc), bound eps",
            rhs_shape="closed product of length eps",
        ),
        IdentityCase(
            key="unity-a",
            ref="Partition-of-unity lemma A (rising factorials)",
            lhs=lambda p: unity_lhs("a", p, p.n),
            rhs=lambda p: Fraction(1),
            lhs_shape="i-sum of eps+1 terms, cutoff k = n",
            rhs_shape="1",
        ),
        IdentityCase(
            key="unity-b",
            ref="Partition-of-unity lemma B (falling factorials)",
            lhs=lambda p: unity_lhs("b", p, p.n),
            rhs=lambda p: Fraction(1),
            lhs_shape="i-sum of eps+1 terms, cutoff k = n",
            rhs_shape="1",
        ),
        IdentityCase(
            key="rel-a",
            ref="Rearrangement relation A",
            lhs=_point_eps(watson_series),
            rhs=lambda p: rel_rhs("rel-a", p),
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="i-sum of coeff * inner 4phi3 (brute-forced)",
        ),
        IdentityCase(
            key="rel-b",
            ref="Rearrangement relation B",
            lhs=_point_eps(watson_shifted_series),
            rhs=lambda p: rel_rhs("rel-b", p),
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="i-sum of coeff * inner 4phi3 (brute-forced)",
            c_flip_covariant=True,
        ),
        IdentityCase(
            key="rel-c",
            ref="Rearrangement relation C",
            lhs=_point_eps(jain_series),
            rhs=lambda p: rel_rhs("rel-c", p),
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="i-sum of coeff * inner 4phi3 (brute-forced)",
            constraint_text="0 <= eps <= n; q a perfect rational square",
            eps_le_n=True,
            needs_square_q=True,
        ),
        IdentityCase(
            key="rel-d",
            ref="Rearrangement relation D",
            lhs=lambda p: phi_eval(jain_series(p, p.eps, p.eps), p.q),
            rhs=lambda p: rel_rhs("rel-d", p),
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="i-sum of coeff * inner 4phi3 (brute-forced)",
            constraint_text="0 <= eps <= n; q a perfect rational square",
            eps_le_n=True,
            needs_square_q=True,
        ),
        IdentityCase(
            key="thm-a",
            ref="Theorem 1",
            lhs=_point_eps(watson_series),
            rhs=lambda p: thm_rhs("thm-a", p),
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="i-sum with parity indicator, closed factors",
        ),
        IdentityCase(
            key="thm-b",
            ref="Theorem 2",
            lhs=_point_eps(watson_shifted_series),
            rhs=lambda p: thm_rhs("thm-b", p),
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="i-sum with parity indicator, closed factors",
            c_flip_covariant=True,
        ),
        IdentityCase(
            key="thm-c",
            ref="Theorem 3",
            lhs=_point_eps(jain_series),
            rhs=lambda p: thm_rhs("thm-c", p),
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="i-sum of closed factors in bases q and q^2",
            constraint_text="0 <= eps <= n; q a perfect rational square",
            eps_le_n=True,
            needs_square_q=True,
        ),
        IdentityCase(
            key="thm-d",
            ref="Theorem 4",
            lhs=lambda p: phi_eval(jain_series(p, p.eps, p.eps), p.q),
            rhs=lambda p: thm_rhs("thm-d", p),
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="i-sum of closed factors in bases q and q^2",
            constraint_text="0 <= eps <= n; q a perfect rational square",
            eps_le_n=True,
            needs_square_q=True,
        ),
        IdentityCase(
            key="cor-a1",
            ref="Corollary: eps = 1 in Theorem 1",
            lhs=_with_eps(watson_series, 1),
            rhs=lambda p: cor_rhs("cor-a1", p),
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="parity-split closed product",
            eps_fixed=1,
        ),
        IdentityCase(
            key="cor-a2",
            ref="Corollary: eps = 2 in Theorem 1",
            lhs=_with_eps(watson_series, 2),
            rhs=lambda p: cor_rhs("cor-a2", p),
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="parity-split closed product with brace factor",
            eps_fixed=2,
        ),
        IdentityCase(
            key="cor-b1",
            ref="Corollary: eps = 1 in Theorem 2",
            lhs=_with_eps(watson_shifted_series, 1),
            rhs=lambda p: cor_rhs("cor-b1", p),
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="parity-split closed product (odd powers of C)",
            eps_fixed=1,
            c_flip_covariant=True,
        ),
        IdentityCase(
            key="cor-b2",
            ref="Corollary: eps = 2 in Theorem 2",
            lhs=_with_eps(watson_shifted_series, 2),
            rhs=lambda p: cor_rhs("cor-b2", p),
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="parity-split closed product with brace factor",
            eps_fixed=2,
            c_flip_covariant=True,
        ),
        IdentityCase(
            key="cor-c1",
            ref="Corollary: eps = 1 in Theorem 3",
            lhs=_jain_lhs_fixed(1, 0),
            rhs=lambda p: cor_rhs("cor-c1", p),
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="sum of two closed products in base q^2",
            constraint_text="n >= 1; q a perfect rational square",
            n_min=1,
            eps_fixed=1,
            needs_square_q=True,
        ),
        IdentityCase(
            key="cor-c2",
            ref="Corollary: eps = 2 in Theorem 3",
            lhs=_jain_lhs_fixed(2, 0),
            rhs=lambda p: cor_rhs("cor-c2", p),
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="weighted sum of two closed products",
            constraint_text="n >= 2; q a perfect rational square",
            n_min=2,
            eps_fixed=2,
            needs_square_q=True,
        ),
        IdentityCase(
            key="cor-d1",
            ref="Corollary: eps = 1 in Theorem 4",
            lhs=_jain_lhs_fixed(1, 1),
            rhs=lambda p: cor_rhs("cor-d1", p),
            lhs_shape="4phi3(q; q), bound n",
            rhs_shape="difference of two closed products",
            constraint_text="n >= 1; q a perfect rational square",
            n_min=1,
            eps_fixed=1,
            needs_square_q=True,
        ),
        IdentityCase(
            key="cor-d2",
            ref="Corollary: eps = 2 in Theorem 4",
            lhs=_jain_lhs_fixed(2, 2),
            rhs=lambda p: cor_rhs("cor-d2", p),
            lhs_shape="4phi3(q; q), bound n (upper parameter q^{2-n})",
            rhs_shape="weighted sum of two closed products",
            constraint_text="n >= 2; q a perfect rational square",
            n_min=2,
            eps_fixed=2,
            needs_square_q=True,
        ),
    ]
    return {case.key: case for case in cases}


CATALOG: dict[str, IdentityCase] = _build_catalog()


def get_case(key: str) -> IdentityCase:
    try:
        return CATALOG[key]
    except KeyError:
        raise UnknownIdentity(key) from None


def catalog_keys() -> list[str]:
    return list(CATALOG)

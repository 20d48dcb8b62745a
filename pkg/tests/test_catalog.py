"""Catalog identities: spot values, cross-collapses, parity, sign flips."""

import random
from dataclasses import replace
from fractions import Fraction

import pytest

from qwatson.catalog import (
    CATALOG,
    ParityCase,
    andrews_rhs,
    catalog_keys,
    cor_rhs,
    get_case,
    jain_rhs,
    lhs_eval,
    phi65_rhs,
    phi65_series,
    rel_rhs,
    thm_rhs,
    unity_lhs,
    watson_series,
)
from qwatson.errors import ConstraintViolated, DegenerateDenominator, UnknownIdentity
from qwatson.exact import ParamPoint
from qwatson.series import phi_eval
from qwatson.verify import check_identity, cord2_lhs_variant

from oracles import base_q, naive_phi_eval, rational

F = Fraction

ALL_KEYS = [
    "andrews", "jain", "phi65", "unity-a", "unity-b",
    "rel-a", "rel-b", "rel-c", "rel-d",
    "thm-a", "thm-b", "thm-c", "thm-d",
    "cor-a1", "cor-a2", "cor-b1", "cor-b2",
    "cor-c1", "cor-c2", "cor-d1", "cor-d2",
]


def sample_for(case, rng, n_max=7, eps_max=4):
    """One constraint-satisfying random point for the given catalog case."""
    q = base_q(rng, 8, square=case.needs_square_q)
    A, C = rational(rng, 8), rational(rng, 8)
    n = rng.randint(case.n_min, n_max)
    if case.eps_fixed is not None:
        eps = case.eps_fixed
    elif case.eps_le_n:
        eps = rng.randint(0, min(eps_max, n))
    else:
        eps = rng.randint(0, eps_max)
    return ParamPoint(q, A, C, n, eps)


def checked_points(key, rng, count, **kw):
    """Random non-degenerate points at which the identity was verified."""
    case = get_case(key)
    out = []
    while len(out) < count:
        point = sample_for(case, rng, **kw)
        result = check_identity(key, point)
        assert result.outcome != "fail", (point, result.lhs, result.rhs)
        if result.outcome == "pass":
            out.append(point)
    return out


def test_catalog_has_all_ids_in_order():
    assert catalog_keys() == ALL_KEYS
    assert len(CATALOG) == 21


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        get_case("nosuch")
    with pytest.raises(UnknownIdentity):
        thm_rhs("thm-x", ParamPoint(F(1, 2), 1, 2, 1))


# ---------------------------------------------------------------------------
# base evaluations

def test_andrews_examples():
    rng = random.Random(11)
    for _ in range(10):
        point = ParamPoint(base_q(rng), rational(rng), rational(rng), 2 * rng.randint(0, 4) + 1)
        try:
            assert andrews_rhs(point) == 0
        except DegenerateDenominator:
            continue
    assert andrews_rhs(ParamPoint(F(1, 3), F(2, 5), F(3, 7), 0)) == 1
    # frozen from the naive term-by-term oracle
    point = ParamPoint(F(1, 2), F(1, 3), F(1, 5), 2)
    assert naive_phi_eval(watson_series(point, 0), point.q) == F(11, 1715)
    assert andrews_rhs(point) == F(11, 1715)
    assert lhs_eval("andrews", point) == F(11, 1715)


def test_jain_examples():
    assert jain_rhs(ParamPoint(F(1, 4), F(1, 3), F(1, 5), 0)) == 1
    # frozen: (1 - aq)(1 - cq) / ((1 - q)(1 - acq)) at q = 1/4, a = 1/9, c = 1/25
    point = ParamPoint(F(1, 4), F(1, 3), F(1, 5), 1)
    a, c, q = point.a, point.c, point.q
    expected = (1 - a * q) * (1 - c * q) / ((1 - q) * (1 - a * c * q))
    assert expected == F(1155, 899)
    assert jain_rhs(point) == expected
    assert lhs_eval("jain", point) == expected


def test_jain_matches_series_at_random_points():
    rng = random.Random(22)
    case = get_case("jain")
    done = 0
    while done < 50:
        point = sample_for(case, rng, n_max=6)
        result = check_identity("jain", point)
        if result.outcome == "degenerate":
            continue
        assert result.outcome == "pass"
        done += 1


def test_phi65_closed_form():
    q = F(1, 3)
    assert phi65_rhs(F(2, 5), F(7), F(-3, 2), q, 0) == 1
    # b = qa/c makes qa/(bc) = 1, so the (1; q)_eps numerator factor kills it
    a, c = F(2, 5), F(-3, 2)
    assert phi65_rhs(a, q * a / c, c, q, 2) == 0


def test_phi65_matches_series():
    rng = random.Random(33)
    done = 0
    while done < 30:
        q = base_q(rng, 6)
        root_a = rational(rng, 6)
        b, c = rational(rng, 6), rational(rng, 6)
        eps = rng.randint(0, 4)
        a = root_a * root_a
        spec = phi65_series(a, root_a, b, c, q, eps)
        try:
            lhs = phi_eval(spec, q)
            rhs = phi65_rhs(a, b, c, q, eps)
        except (DegenerateDenominator, ZeroDivisionError):
            continue
        assert lhs == rhs
        done += 1


def test_unity_values():
    # eps = 0 collapses to the single empty-product term
    assert unity_lhs("a", ParamPoint(F(2, 3), 1, F(4, 7), 5, 0), 5) == 1
    assert unity_lhs("b", ParamPoint(F(2, 3), 1, F(4, 7), 5, 0), 5) == 1
    # printed instances
    assert unity_lhs("a", ParamPoint(F(1, 2), 1, F(1, 5), 3, 1), 3) == 1
    assert unity_lhs("b", ParamPoint(F(1, 2), 1, F(1, 5), 4, 2), 4) == 1
    with pytest.raises(ValueError):
        unity_lhs("c", ParamPoint(F(1, 2), 1, F(1, 5), 3), 3)


def test_unity_grid():
    # both unity sums equal 1 for every cutoff k <= 12 and eps <= 4 at 100
    # random (q, C) points, skipping degenerate coincidences
    rng = random.Random(44)
    points = 0
    while points < 100:
        q, C = base_q(rng), rational(rng)
        hit_degenerate = False
        for eps in range(5):
            for k in range(13):
                point = ParamPoint(q, 1, C, k, eps)
                for which in ("a", "b"):
                    try:
                        assert unity_lhs(which, point, k) == 1
                    except DegenerateDenominator:
                        hit_degenerate = True
        if not hit_degenerate:
            points += 1


# ---------------------------------------------------------------------------
# theorem structure

def test_thm_collapse_to_base_formulas():
    rng = random.Random(55)
    for _ in range(100):
        case_a = get_case("thm-a")
        point = replace(sample_for(case_a, rng), eps=0)
        try:
            assert thm_rhs("thm-a", point) == andrews_rhs(point)
        except DegenerateDenominator:
            pass
        case_c = get_case("thm-c")
        point = replace(sample_for(case_c, rng), eps=0)
        try:
            assert thm_rhs("thm-c", point) == jain_rhs(point)
        except DegenerateDenominator:
            pass


COR_PAIRINGS = [
    ("thm-a", 1, "cor-a1"), ("thm-a", 2, "cor-a2"),
    ("thm-b", 1, "cor-b1"), ("thm-b", 2, "cor-b2"),
    ("thm-c", 1, "cor-c1"), ("thm-c", 2, "cor-c2"),
    ("thm-d", 1, "cor-d1"), ("thm-d", 2, "cor-d2"),
]


@pytest.mark.parametrize("thm_key,eps,cor_key", COR_PAIRINGS)
def test_thm_matches_corollary(thm_key, eps, cor_key):
    rng = random.Random(66 + eps)
    cor_case = get_case(cor_key)
    done = 0
    while done < 50:
        point = replace(sample_for(cor_case, rng), eps=eps)
        try:
            assert thm_rhs(thm_key, point) == cor_rhs(cor_key, point)
        except DegenerateDenominator:
            continue
        done += 1


def test_thm_constraints():
    point = ParamPoint(F(1, 4), F(1, 3), F(1, 5), 2, 3)  # eps > n
    for key in ("thm-c", "thm-d"):
        with pytest.raises(ConstraintViolated):
            thm_rhs(key, point)
        with pytest.raises(ConstraintViolated):
            lhs_eval(key, point)
    with pytest.raises(ConstraintViolated):
        lhs_eval("cor-c2", ParamPoint(F(1, 4), F(1, 3), F(1, 5), 1, 2))
    with pytest.raises(ConstraintViolated):
        lhs_eval("cor-d1", ParamPoint(F(1, 4), F(1, 3), F(1, 5), 0, 1))
    # Jain-family ids reject non-square q via ConstraintViolated
    with pytest.raises(ConstraintViolated):
        lhs_eval("thm-c", ParamPoint(F(1, 2), F(1, 3), F(1, 5), 2, 1))


def test_parity_pattern():
    # odd-n zero branch: the defining sum itself vanishes
    rng = random.Random(77)
    for n in (1, 3, 5, 7, 9):
        done = 0
        while done < 4:
            point = ParamPoint(base_q(rng), rational(rng), rational(rng), n)
            try:
                value = lhs_eval("andrews", point)
            except DegenerateDenominator:
                continue
            assert value == 0
            done += 1
    # even-n: the eps = 1 theorem value reduces to the base formula because
    # the i = 1 term carries odd parity and is chi-killed
    for _ in range(20):
        point = ParamPoint(base_q(rng), rational(rng), rational(rng), 2 * rng.randint(0, 3), 1)
        try:
            assert thm_rhs("thm-a", point) == andrews_rhs(point)
            assert thm_rhs("thm-b", point) == andrews_rhs(point)
        except DegenerateDenominator:
            continue


def test_cor_b1_odd_branch_value():
    # n = 1 (s = 0): -sqrt(c) (1 - q) / (1 - qc)
    point = ParamPoint(F(1, 2), F(2, 3), F(3, 4), 1)
    q, C, c = point.q, point.C, point.c
    assert cor_rhs("cor-b1", point) == -C * (1 - q) / (1 - q * c) == F(-12, 23)


def test_frozen_thm_b_value():
    point = ParamPoint(F(1, 2), F(1, 3), F(1, 5), 4, 2)
    assert lhs_eval("thm-b", point) == F(2543, 8745055)
    assert thm_rhs("thm-b", point) == F(2543, 8745055)


def test_rel_identities_hold_and_use_brute_force_inner():
    rng = random.Random(88)
    for key in ("rel-a", "rel-b", "rel-c", "rel-d"):
        for point in checked_points(key, rng, 10):
            assert lhs_eval(key, point) == rel_rhs(key, point)


def test_parity_case():
    even = ParityCase.of(6)
    assert (even.s, even.parity, even.n) == (3, "even", 6)
    odd = ParityCase.of(7)
    assert (odd.s, odd.parity, odd.n) == (3, "odd", 7)


def test_cord2_variant_q_minus_n_equals_cor_c2_series():
    # the printed cor-d2 upper parameter q^(-n) reproduces cor-c2's series
    rng = random.Random(99)
    for point in checked_points("cor-c2", rng, 5):
        assert cord2_lhs_variant(point, "q^(-n)") == lhs_eval("cor-c2", point)
    with pytest.raises(ValueError):
        cord2_lhs_variant(ParamPoint(F(1, 4), 1, 2, 3, 2), "q^(n)")


# ---------------------------------------------------------------------------
# sign-flip structure

C_FLIP_COVARIANT = {"rel-b", "thm-b", "cor-b1", "cor-b2"}


@pytest.mark.parametrize("key", ALL_KEYS)
def test_sign_flip_invariance(key):
    # A appears only through a = A^2 or in conjugate root pairs, so A -> -A
    # never changes a value; same for C except in the covariant cases, where
    # both sides flip together and only the joint identity is asserted
    rng = random.Random(hash(key) % 100000)
    case = get_case(key)
    done = 0
    while done < 6:
        point = sample_for(case, rng)
        flipped_a = replace(point, A=-point.A)
        flipped_c = replace(point, C=-point.C)
        try:
            base_lhs = case.lhs(point)
            base_rhs = case.rhs(point)
            assert case.lhs(flipped_a) == base_lhs
            assert case.rhs(flipped_a) == base_rhs
            if key in C_FLIP_COVARIANT:
                assert case.lhs(flipped_c) == case.rhs(flipped_c)
            else:
                assert case.lhs(flipped_c) == base_lhs
                assert case.rhs(flipped_c) == base_rhs
        except DegenerateDenominator:
            continue
        done += 1

"""Series evaluator: recurrence vs naive oracle, bounds, weighted sums."""

import random
from fractions import Fraction

import pytest

from qwatson.errors import DegenerateDenominator
from qwatson.exact import ParamPoint
from qwatson.series import SeriesSpec, phi_eval, terminating_bound, weighted_sum

from oracles import base_q, naive_phi_eval, rational

F = Fraction


def random_spec(rng, height=8, max_params=3, max_bound=8):
    nums = tuple(rational(rng, height) for _ in range(rng.randint(0, max_params)))
    dens = tuple(rational(rng, height) for _ in range(rng.randint(0, max_params)))
    return SeriesSpec(nums, dens, rational(rng, height), rng.randint(0, max_bound))


def test_bound_zero_is_one():
    spec = SeriesSpec((F(7), F(-2, 3)), (F(5, 4),), F(9), 0)
    assert phi_eval(spec, F(2, 5)) == 1


def test_unit_numerator_parameter_truncates_immediately():
    # (1; q)_k = 0 for k >= 1, so only the k = 0 term survives
    spec = SeriesSpec((F(1), F(3, 7)), (F(2, 9),), F(5, 3), 6)
    assert phi_eval(spec, F(1, 3)) == 1


def test_zero_argument_keeps_only_first_term():
    spec = SeriesSpec((F(2, 3),), (F(3, 5),), F(0), 5)
    assert phi_eval(spec, F(1, 2)) == 1


def test_degenerate_base_rejected():
    spec = SeriesSpec((F(2),), (F(3),), F(1), 2)
    for q in (F(0), F(1), F(-1)):
        with pytest.raises(ValueError):
            phi_eval(spec, q)


def test_negative_bound_rejected():
    with pytest.raises(ValueError):
        SeriesSpec((), (), F(1), -1)


def test_denominator_zero_is_degenerate():
    # denominator parameter 4 with q = 1/2: factor 1 - 4 q^2 = 0 at step 2
    spec = SeriesSpec((F(5),), (F(4),), F(1, 3), 5)
    with pytest.raises(DegenerateDenominator) as exc:
        phi_eval(spec, F(1, 2))
    assert exc.value.base == 4
    assert exc.value.count == 3  # (4; q)_3 is the first vanishing factorial


def test_denominator_zero_after_truncation_still_degenerate():
    # numerator 2 truncates at step 1 (1 - 2q = 0), denominator 8 vanishes
    # later at step 3 (1 - 8 q^3 = 0); the nominal range is ill-posed
    q = F(1, 2)
    spec = SeriesSpec((F(2),), (F(8),), F(1, 3), 5)
    with pytest.raises(DegenerateDenominator):
        phi_eval(spec, q)
    # with the nominal range cut before the zero the same series is fine
    assert phi_eval(SeriesSpec((F(2),), (F(8),), F(1, 3), 2), q) == naive_phi_eval(
        SeriesSpec((F(2),), (F(8),), F(1, 3), 2), q
    )


def test_recurrence_matches_naive_oracle():
    rng = random.Random(606)
    agreements = 0
    degenerate = 0
    while agreements < 200:
        spec = random_spec(rng)
        q = base_q(rng, 8)
        try:
            expected = naive_phi_eval(spec, q)
        except DegenerateDenominator:
            with pytest.raises(DegenerateDenominator):
                phi_eval(spec, q)
            degenerate += 1
            continue
        assert phi_eval(spec, q) == expected
        agreements += 1
    assert degenerate < agreements  # sanity: agreement dominates


def test_early_termination_matches_full_range():
    # a forced q^-m numerator parameter truncates at m; the value must agree
    # with the sum run only to m
    rng = random.Random(707)
    for _ in range(50):
        q = base_q(rng, 8)
        m = rng.randint(0, 4)
        nums = (q**-m, rational(rng, 8))
        dens = (rational(rng, 8),)
        z = rational(rng, 8)
        try:
            long_val = phi_eval(SeriesSpec(nums, dens, z, m + 4), q)
            short_val = phi_eval(SeriesSpec(nums, dens, z, m), q)
        except DegenerateDenominator:
            continue
        assert long_val == short_val


def test_terminating_bound():
    q = F(1, 2)
    assert terminating_bound([F(3), F(8)], q, 10) == 3  # 8 = q^-3
    assert terminating_bound([F(5)], q, 10) is None
    assert terminating_bound([F(1), F(8)], q, 10) == 0  # 1 = q^0
    assert terminating_bound([F(16)], q, 3) is None  # beyond the probe window


def test_weighted_sum():
    p = ParamPoint(F(1, 2), F(1, 3), F(1, 5), 2)
    assert weighted_sum(lambda pt, i: F(1), p, 0, 3) == 4
    assert weighted_sum(lambda pt, i: F(i), p, 3, 2) == 0  # empty range
    with pytest.raises(ValueError):
        weighted_sum(lambda pt, i: F(1), p, 5, 2)

    def bad(pt, i):
        raise DegenerateDenominator(F(1), 1)

    with pytest.raises(DegenerateDenominator):
        weighted_sum(bad, p, 0, 1)

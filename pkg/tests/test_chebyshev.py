import numpy as np
import pytest

from rectperm import (
    GridRect,
    adversary,
    attaining_permuton,
    center_check,
    check_condition_iii,
    check_condition_iv,
    check_halfwidth_rects,
    distance,
    eccentricity,
    frechet_bounds,
    is_half_periodic,
    make_identity,
    make_two_diagonal,
    make_uniform,
    periodize,
    random_sinkhorn,
    rect_mass,
    validate,
)
from rectperm.errors import NotACandidate, OddOrder, RectError

from conftest import random_grid_rect


class TestFrechetBounds:
    def test_half_square(self):
        b = frechet_bounds(4, 2, 2)
        assert (b.lower, b.upper) == (0.0, 0.5)

    def test_large_rect(self):
        b = frechet_bounds(4, 3, 3)
        assert (b.lower, b.upper) == (0.5, 0.75)

    def test_full_width_strip(self):
        b = frechet_bounds(2, 1, 2)
        assert (b.lower, b.upper) == (0.5, 0.5)

    def test_out_of_range(self):
        with pytest.raises(RectError):
            frechet_bounds(4, 0, 2)
        with pytest.raises(RectError):
            frechet_bounds(4, 2, 5)

    def test_ordering_random(self):
        rng = np.random.default_rng(0)
        for _ in range(100):
            n = int(rng.integers(1, 20))
            h = int(rng.integers(1, n + 1))
            w = int(rng.integers(1, n + 1))
            b = frechet_bounds(n, h, w)
            assert 0.0 <= b.lower <= b.upper <= 1.0


class TestAttainingPermuton:
    def test_upper_half_square(self):
        r = GridRect(0, 2, 0, 2)
        nu = attaining_permuton(4, r, "upper")
        assert rect_mass(nu, r) == pytest.approx(0.5, abs=1e-15)

    def test_lower_half_square(self):
        r = GridRect(0, 2, 0, 2)
        nu = attaining_permuton(4, r, "lower")
        assert rect_mass(nu, r) == 0.0

    def test_forced_strip(self):
        r = GridRect(0, 2, 0, 1)
        for target in ("lower", "upper"):
            nu = attaining_permuton(2, r, target)
            assert rect_mass(nu, r) == pytest.approx(0.5, abs=1e-15)

    def test_random_rects_hit_bounds(self):
        rng = np.random.default_rng(1)
        n = 8
        for _ in range(200):
            r = random_grid_rect(rng, n)
            b = frechet_bounds(n, r.h, r.w)
            for target, expected in (("lower", b.lower), ("upper", b.upper)):
                nu = attaining_permuton(n, r, target)
                assert validate(nu.cells).ok
                assert rect_mass(nu, r) == pytest.approx(expected, abs=1e-12)

    def test_bad_target(self):
        with pytest.raises(ValueError):
            attaining_permuton(4, GridRect(0, 1, 0, 1), "middle")


class TestEccentricity:
    def test_uniform_is_radius(self):
        for n in (2, 4, 6, 8):
            assert eccentricity(make_uniform(n)).value == pytest.approx(0.25, abs=1e-12)

    def test_identity4(self):
        e = eccentricity(make_identity(4))
        assert e.value == pytest.approx(0.5, abs=1e-15)
        assert e.argmax_rect == GridRect(0, 2, 0, 2)

    def test_two_diagonal8(self):
        assert eccentricity(make_two_diagonal(8)).value == pytest.approx(0.25, abs=1e-12)

    def test_attained(self, small_pool):
        for mu in small_pool[:8]:
            e = eccentricity(mu)
            assert distance(mu, e.attaining).value == pytest.approx(e.value, abs=1e-12)

    def test_dominates_distance(self, small_pool):
        mu = small_pool[1]
        bound = eccentricity(mu).value
        for nu in small_pool:
            assert distance(mu, nu).value <= bound + 1e-12

    def test_radius_floor(self, small_pool):
        for mu in small_pool:
            assert eccentricity(mu).value >= 0.25 - 1e-12


class TestHalfPeriodic:
    def test_uniform(self):
        assert is_half_periodic(make_uniform(4))

    def test_identity(self):
        assert not is_half_periodic(make_identity(4))

    def test_two_diagonal(self):
        assert is_half_periodic(make_two_diagonal(8))

    def test_odd_order(self):
        with pytest.raises(OddOrder):
            is_half_periodic(make_uniform(3))


class TestConditionChecks:
    def test_halfwidth_uniform(self):
        assert check_halfwidth_rects(make_uniform(4)).passed

    def test_halfwidth_identity_violation(self):
        # both (0,1,0,2) and (0,2,0,1) are violators with mass 0.25 vs 0.125;
        # the (x0, y0, w, h) tie-break picks the w=1 one
        res = check_halfwidth_rects(make_identity(4))
        assert not res.passed
        assert res.violation.rect == GridRect(0, 1, 0, 2)
        assert res.violation.mass == pytest.approx(0.25, abs=1e-15)
        assert res.violation.bound == pytest.approx(0.125, abs=1e-15)

    def test_halfwidth_two_diagonal(self):
        assert check_halfwidth_rects(make_two_diagonal(4)).passed

    def test_iii_uniform(self):
        assert check_condition_iii(make_uniform(4)).passed

    def test_iii_identity_violation(self):
        res = check_condition_iii(make_identity(4))
        assert not res.passed
        assert res.violation.rect == GridRect(0, 2, 0, 2)
        assert res.violation.mass == pytest.approx(0.5, abs=1e-15)

    def test_iii_two_diagonal(self):
        assert check_condition_iii(make_two_diagonal(8)).passed

    def test_iv_uniform(self):
        assert check_condition_iv(make_uniform(4)).passed

    def test_iv_identity_violation(self):
        res = check_condition_iv(make_identity(4))
        assert not res.passed
        assert res.violation.rect == GridRect(0, 2, 0, 2)
        assert res.violation.mass == pytest.approx(0.5, abs=1e-15)

    def test_iv_two_diagonal_with_equality(self):
        td = make_two_diagonal(8)
        assert check_condition_iv(td).passed
        # equality is attained, e.g. R = [0, 6) x [0, 2)
        assert rect_mass(td, GridRect(0, 6, 0, 2)) == pytest.approx(0.25, abs=1e-15)

    def test_agreement_on_pool(self, small_pool):
        for mu in small_pool:
            verdicts = {
                is_half_periodic(mu),
                check_halfwidth_rects(mu).passed,
                check_condition_iii(mu).passed,
                check_condition_iv(mu).passed,
            }
            assert len(verdicts) == 1


class TestAdversary:
    def test_identity4(self):
        adv = adversary(make_identity(4))
        assert adv.rect == GridRect(0, 2, 0, 2)
        assert rect_mass(adv.permuton, adv.rect) == 0.0
        assert distance(make_identity(4), adv.permuton).value == pytest.approx(
            0.5, abs=1e-15
        )

    def test_identity2_gives_reverse(self):
        adv = adversary(make_identity(2))
        assert adv.rect == GridRect(0, 1, 0, 1)
        assert np.array_equal(adv.permuton.cells, [[0.0, 0.5], [0.5, 0.0]])
        assert distance(make_identity(2), adv.permuton).value == pytest.approx(
            0.5, abs=1e-15
        )

    def test_center_rejected(self):
        with pytest.raises(NotACandidate):
            adversary(make_uniform(4))

    def test_beats_radius_on_pool(self, small_pool):
        for mu in small_pool:
            if is_half_periodic(mu):
                continue
            adv = adversary(mu)
            assert distance(mu, adv.permuton).value > 0.25


class TestCenterCheck:
    def test_uniform8(self):
        v = center_check(make_uniform(8))
        assert v.is_center and v.half_periodic
        assert v.eccentricity == pytest.approx(0.25, abs=1e-12)
        assert v.violation is None

    def test_identity8(self):
        v = center_check(make_identity(8))
        assert not v.is_center
        assert v.eccentricity == pytest.approx(0.5, abs=1e-12)
        assert v.violation is not None

    def test_periodized_sinkhorn(self):
        v = center_check(periodize(random_sinkhorn(8, seed=3)))
        assert v.is_center
        assert v.eccentricity == pytest.approx(0.25, abs=1e-9)

    def test_equivalence_on_pool(self, small_pool):
        for mu in small_pool:
            v = center_check(mu)
            assert v.is_center == v.half_periodic
            assert v.is_center == (v.eccentricity <= 0.25 + 1e-9)
            assert (v.violation is not None) == (not v.is_center)

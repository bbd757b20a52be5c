"""Rating rule tests."""

import math
import random

import pytest

from skatelo.elo import (
    AverageStart,
    EloConfig,
    FixedK,
    FixedStart,
    Rating,
    StepK,
    compute_y,
    expected_proportional,
    expected_softmax,
    expected_two,
    k_for,
    legacy_sqrt_update,
    start_rating,
    update_series,
    update_two,
)
from skatelo.errors import DomainError

# One printed series evolution, used here and by the acceptance suite:
# (series scores), (expected), (ratings after), all starting from 800.
EVOLUTION = [
    ((1387, 1018, 152), (852.33, 852.33, 852.33), (810.69, 803.31, 785.99)),
    ((501, 1359, 934), (943.78, 935.19, 915.03), (801.84, 811.79, 786.37)),
    ((637, 1284, 1125), (1017.67, 1030.30, 998.04), (794.22, 816.86, 788.91)),
    ((800, 812, 913), (835.59, 859.41, 830.00), (793.51, 815.92, 790.57)),
    ((1213, 1221, 965), (1123.81, 1155.54, 1119.65), (795.30, 817.22, 787.48)),
    ((1124, 1445, 994), (1180.68, 1213.24, 1169.08), (794.16, 821.86, 783.98)),
    ((1381, 1187, 938), (1160.14, 1200.60, 1145.26), (798.58, 821.59, 779.83)),
    ((693, 374, 1536), (866.13, 891.08, 845.79), (795.12, 811.25, 793.64)),
    ((460, 1167, 721), (777.89, 793.67, 776.44), (788.76, 818.71, 792.53)),
    ((871, 15, 1417), (756.88, 785.62, 760.50), (791.04, 803.30, 805.66)),
]


class TestExpectedTwo:
    def test_equal_ratings_are_even(self):
        assert expected_two(1000.0, 1000.0) == (0.5, 0.5)

    def test_hundred_points_is_worth_64_percent(self):
        e_a, e_b = expected_two(1100.0, 1000.0)
        assert e_a == pytest.approx(0.640, abs=0.001)
        assert e_a + e_b == pytest.approx(1.0, abs=1e-12)

    def test_two_hundred_points_is_worth_76_percent(self):
        e_a, _ = expected_two(1200.0, 1000.0)
        assert e_a == pytest.approx(0.760, abs=0.001)

    def test_antisymmetric(self):
        rng = random.Random(3)
        for _ in range(100):
            r_a = rng.uniform(100.0, 2500.0)
            r_b = rng.uniform(100.0, 2500.0)
            e_a, e_b = expected_two(r_a, r_b)
            f_b, f_a = expected_two(r_b, r_a)
            assert e_a == pytest.approx(f_a, abs=1e-12)
            assert e_b == pytest.approx(f_b, abs=1e-12)
            assert 0.0 < e_a < 1.0


class TestUpdateTwo:
    def test_surprise_moves_by_k(self):
        assert update_two(1000.0, 1.0, 0.76, 16.0) == pytest.approx(1003.84)

    def test_losing_a_likely_win_costs_most(self):
        assert update_two(1000.0, 0.0, 0.76, 16.0) == pytest.approx(987.84)

    def test_no_surprise_no_move(self):
        assert update_two(1234.5, 0.64, 0.64, 32.0) == 1234.5


class TestExpectedSoftmax:
    def test_equal_ratings_split_evenly(self):
        assert expected_softmax((900.0, 900.0, 900.0)) == pytest.approx((1 / 3,) * 3)

    def test_matches_two_player_form(self):
        rng = random.Random(11)
        for _ in range(50):
            r_a = rng.uniform(200.0, 2000.0)
            r_b = rng.uniform(200.0, 2000.0)
            soft = expected_softmax((r_a, r_b))
            classic = expected_two(r_a, r_b)
            assert soft[0] == pytest.approx(classic[0], abs=1e-12)
            assert soft[1] == pytest.approx(classic[1], abs=1e-12)

    def test_three_player_shares(self):
        shares = expected_softmax((1200.0, 1000.0, 800.0))
        # direct form, without the overflow shift
        weights = [10.0 ** (r / 400.0) for r in (1200.0, 1000.0, 800.0)]
        direct = [w / sum(weights) for w in weights]
        for got, want in zip(shares, direct):
            assert got == pytest.approx(want, abs=1e-12)
        assert shares[0] == pytest.approx(0.70610, abs=1e-5)

    def test_huge_ratings_do_not_overflow(self):
        shares = expected_softmax((50_000.0, 49_600.0))
        assert shares[0] == pytest.approx(expected_two(400.0, 0.0)[0], abs=1e-12)

    def test_sums_to_one(self):
        rng = random.Random(5)
        for _ in range(50):
            ratings = [rng.uniform(10.0, 3000.0) for _ in range(rng.randint(2, 8))]
            assert sum(expected_softmax(ratings)) == pytest.approx(1.0, abs=1e-9)

    def test_needs_two_players(self):
        with pytest.raises(DomainError, match="at least 2"):
            expected_softmax((1000.0,))


class TestExpectedProportional:
    def test_documented_example(self):
        expected = expected_proportional((1500.0, 750.0, 750.0), 2800.0)
        assert expected == (1400.0, 700.0, 700.0)

    def test_shares_follow_rating_ratios(self):
        rng = random.Random(17)
        for _ in range(100):
            ratings = [rng.uniform(1.0, 2000.0) for _ in range(3)]
            total = rng.uniform(-500.0, 4000.0)
            expected = expected_proportional(ratings, total)
            assert sum(expected) == pytest.approx(total, abs=1e-9)
            assert expected[0] * ratings[1] == pytest.approx(expected[1] * ratings[0], rel=1e-9)

    def test_scale_invariant_in_the_ratings(self):
        base = expected_proportional((800.0, 900.0, 1000.0), 2100.0)
        for factor in (0.5, 2.0, 10.0):
            scaled = expected_proportional(
                tuple(factor * r for r in (800.0, 900.0, 1000.0)), 2100.0
            )
            for got, want in zip(scaled, base):
                assert got == pytest.approx(want, abs=1e-9)

    def test_zero_total_gives_zero_expectations(self):
        assert expected_proportional((800.0, 800.0, 800.0), 0.0) == (0.0, 0.0, 0.0)

    def test_nonpositive_rating_sum_rejected(self):
        with pytest.raises(DomainError, match="positive"):
            expected_proportional((0.0, 0.0, 0.0), 100.0)


class TestUpdateSeries:
    def test_documented_example(self):
        ratings = (Rating(1500.0), Rating(750.0), Rating(750.0))
        updated, trace = update_series(ratings, (1200.0, 800.0, 800.0), 0.02)
        assert trace.expected == (1400.0, 700.0, 700.0)
        assert tuple(r.value for r in updated) == (1496.0, 752.0, 752.0)
        assert all(r.series_played == 1 for r in updated)

    def test_first_evolution_row(self):
        ratings = tuple(Rating(800.0) for _ in range(3))
        scores, expected, after = EVOLUTION[0]
        updated, trace = update_series(ratings, tuple(float(s) for s in scores), 0.02)
        for seat in range(3):
            assert trace.expected[seat] == pytest.approx(expected[seat], abs=0.01)
            assert updated[seat].value == pytest.approx(after[seat], abs=0.01)

    def test_full_evolution_chain(self):
        ratings = tuple(Rating(800.0) for _ in range(3))
        for scores, expected, after in EVOLUTION:
            updated, trace = update_series(ratings, tuple(float(s) for s in scores), 0.02)
            for seat in range(3):
                assert trace.expected[seat] == pytest.approx(expected[seat], abs=0.01)
                assert updated[seat].value == pytest.approx(after[seat], abs=0.01)
            ratings = updated

    def test_uniform_k_conserves_the_rating_sum(self):
        rng = random.Random(23)
        for _ in range(300):
            ratings = tuple(Rating(rng.uniform(200.0, 1600.0)) for _ in range(3))
            scores = tuple(rng.uniform(-800.0, 2000.0) for _ in range(3))
            updated, _ = update_series(ratings, scores, 0.02)
            before = sum(r.value for r in ratings)
            after = sum(r.value for r in updated)
            assert after == pytest.approx(before, abs=1e-9)

    def test_zero_surprise_is_a_fixed_point(self):
        ratings = (Rating(900.0), Rating(600.0), Rating(500.0))
        total = 2000.0
        scores = tuple(r.value * total / 2000.0 for r in ratings)
        updated, trace = update_series(ratings, scores, 0.05)
        assert tuple(r.value for r in updated) == tuple(r.value for r in ratings)
        assert trace.floor_clamped == (False, False, False)

    def test_higher_score_higher_posterior(self):
        ratings = (Rating(800.0), Rating(800.0), Rating(800.0))
        low, _ = update_series(ratings, (500.0, 900.0, 900.0), 0.02)
        high, _ = update_series(ratings, (700.0, 900.0, 900.0), 0.02)
        assert high[0].value > low[0].value

    def test_floor_clamp_is_recorded(self):
        ratings = (Rating(2.0), Rating(900.0), Rating(900.0))
        updated, trace = update_series(ratings, (-2000.0, 1000.0, 1000.0), 0.5)
        assert updated[0].value == 1.0
        assert trace.floor_clamped[0]
        assert not trace.floor_clamped[1]

    def test_per_seat_k(self):
        ratings = (Rating(800.0), Rating(800.0), Rating(800.0))
        updated, trace = update_series(ratings, (900.0, 800.0, 700.0), (0.02, 0.04, 0.02))
        assert trace.k == (0.02, 0.04, 0.02)
        assert updated[1].value == 800.0  # its score met its expectation

    def test_raw_scores_ride_along_in_the_trace(self):
        ratings = (Rating(800.0), Rating(800.0), Rating(800.0))
        _, trace = update_series(
            ratings, (90.0, 100.0, 110.0), 0.02, raw_scores=(100.0, 100.0, 100.0)
        )
        assert trace.raw_scores == (100.0, 100.0, 100.0)
        assert trace.adjusted_scores == (90.0, 100.0, 110.0)

    def test_k_out_of_range_rejected(self):
        ratings = (Rating(800.0), Rating(800.0), Rating(800.0))
        with pytest.raises(DomainError, match="k must be"):
            update_series(ratings, (1.0, 2.0, 3.0), 0.0)

    def test_wrong_arity_rejected(self):
        with pytest.raises(DomainError, match="3 players"):
            update_series((Rating(800.0),), (1.0,), 0.02)


class TestLegacySqrtUpdate:
    def test_fixed_point(self):
        assert legacy_sqrt_update(1000.0, 1000.0, 1.0, 9.0) == 1000.0

    def test_convex_blend(self):
        # f=9 pulls one tenth of the way toward S*sqrt(Y)
        assert legacy_sqrt_update(1000.0, 900.0, 1.0, 9.0) == pytest.approx(990.0)

    def test_sqrt_dampens_the_score(self):
        got = legacy_sqrt_update(1000.0, 1200.0, 1.44, 3.0)
        assert got == pytest.approx((3000.0 + 1200.0 * 1.2) / 4.0)

    def test_domain_errors(self):
        with pytest.raises(DomainError, match="Y"):
            legacy_sqrt_update(1000.0, 900.0, 0.0, 9.0)
        with pytest.raises(DomainError, match="f"):
            legacy_sqrt_update(1000.0, 900.0, 1.0, 0.0)


class TestComputeY:
    def test_balanced_is_one(self):
        assert compute_y(100.0, (100.0, 100.0), 800.0, (800.0, 800.0)) == 1.0

    def test_outscoring_weaker_opponents_dampens(self):
        # doubling the opponents' mean score while holding ratings even
        y = compute_y(200.0, (100.0, 100.0), 800.0, (800.0, 800.0))
        assert y == pytest.approx(2.0)

    def test_matches_the_quotient_form(self):
        rng = random.Random(31)
        for _ in range(100):
            own_score = rng.uniform(1.0, 1500.0)
            opp_scores = (rng.uniform(1.0, 1500.0), rng.uniform(1.0, 1500.0))
            own_rating = rng.uniform(100.0, 2000.0)
            opp_ratings = (rng.uniform(100.0, 2000.0), rng.uniform(100.0, 2000.0))
            got = compute_y(own_score, opp_scores, own_rating, opp_ratings)
            gq = own_score / ((opp_scores[0] + opp_scores[1]) / 2.0)
            eq = own_rating / ((opp_ratings[0] + opp_ratings[1]) / 2.0)
            assert got == pytest.approx(gq / eq, rel=1e-12)

    def test_domain_errors(self):
        with pytest.raises(DomainError, match="2 opponents"):
            compute_y(100.0, (100.0,), 800.0, (800.0, 800.0))
        with pytest.raises(DomainError, match="score"):
            compute_y(100.0, (0.0, 0.0), 800.0, (800.0, 800.0))
        with pytest.raises(DomainError, match="ratings"):
            compute_y(100.0, (100.0, 100.0), -5.0, (800.0, 800.0))


class TestStartPolicies:
    def test_fixed_start(self):
        assert start_rating(FixedStart(800.0)) == 800.0
        assert start_rating(FixedStart(1000.0), (1.0, 2.0)) == 1000.0

    def test_average_start(self):
        got = start_rating(AverageStart(3), (783.0, 592.0, 1245.0))
        assert got == pytest.approx(873.3333333, abs=1e-6)

    def test_average_start_uses_only_the_first_n(self):
        assert start_rating(AverageStart(2), (100.0, 200.0, 999.0)) == 150.0

    def test_average_of_one_is_identity(self):
        assert start_rating(AverageStart(1), (640.0,)) == 640.0

    def test_insufficient_history(self):
        with pytest.raises(DomainError, match="insufficient history"):
            start_rating(AverageStart(5), (100.0, 200.0))

    def test_policy_validation(self):
        with pytest.raises(DomainError):
            FixedStart(0.0)
        with pytest.raises(DomainError):
            AverageStart(0)


class TestKPolicies:
    def test_fixed(self):
        assert k_for(0, FixedK(0.02)) == 0.02
        assert k_for(500, FixedK(0.02)) == 0.02

    def test_step_schedule(self):
        policy = StepK(k_start=0.04, k_end=0.02, decay_after=50)
        assert k_for(0, policy) == 0.04
        assert k_for(49, policy) == 0.04
        assert k_for(50, policy) == 0.02
        assert k_for(51, policy) == 0.02

    def test_validation(self):
        with pytest.raises(DomainError):
            FixedK(0.0)
        with pytest.raises(DomainError):
            FixedK(1.5)
        with pytest.raises(DomainError):
            StepK(k_start=0.04, k_end=0.0, decay_after=50)
        with pytest.raises(DomainError):
            k_for(-1, FixedK(0.02))


class TestConfigObjects:
    def test_defaults(self):
        config = EloConfig()
        assert config.k_policy == FixedK(0.02)
        assert config.start_policy == FixedStart(800.0)
        assert not config.chance_hand and not config.chance_flat
        assert not config.opponent_factor
        assert (config.clip_lo, config.clip_hi) == (0.5, 2.0)
        assert config.mean_game_value == 41.0

    def test_clip_bounds_validated(self):
        with pytest.raises(DomainError, match="clip"):
            EloConfig(clip_lo=1.5, clip_hi=2.0)
        with pytest.raises(DomainError, match="clip"):
            EloConfig(clip_lo=0.5, clip_hi=0.9)

    def test_rating_validation(self):
        with pytest.raises(DomainError):
            Rating(0.0)
        with pytest.raises(DomainError):
            Rating(800.0, series_played=-1)

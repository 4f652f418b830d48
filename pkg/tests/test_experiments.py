from fractions import Fraction

import numpy as np
import pytest

from burstball import BudgetExceeded, DomainError, Word, parse_word
from burstball.closed_forms import BallParams, expected_ball_size, min_ball_size
from burstball.experiments import (
    CALIBRATED_C,
    CALIBRATION,
    SweepConfig,
    average_check,
    calibrate_c,
    code_census,
    concentration_mc,
    eq1_arbitration,
    exhaustive_sweep,
    extremal_scan,
    periodic_limit,
    run_bounds,
    sample_words,
    typicality_test,
)


class TestSweep:
    def test_theorem2_binary(self):
        rep = exhaustive_sweep(SweepConfig(q=2, b=1, n_range=(2, 10)))
        assert rep.words_checked == 2044
        assert rep.mismatches == 0 and rep.counterexamples == []

    def test_theorem1_equality(self):
        rep = exhaustive_sweep(SweepConfig(q=2, b=2, n_range=(3, 9), checks={"theorem2", "theorem1_equality"}))
        assert rep.ok

    def test_observation1_radius_two(self):
        rep = exhaustive_sweep(SweepConfig(q=2, b=1, n_range=(2, 7), checks={"observation1"}, t=2))
        assert rep.words_checked == 252 and rep.ok

    def test_all_checks_small(self):
        checks = {"theorem2", "theorem1_equality", "lemma3", "observation1", "claim1", "claim23", "lemma4"}
        rep = exhaustive_sweep(SweepConfig(q=3, b=2, n_range=(3, 4), checks=checks, t=2))
        assert rep.ok, rep.counterexamples
        assert set(rep.per_check) == checks

    def test_rows(self):
        rep = exhaustive_sweep(SweepConfig(q=2, b=2, n_range=(5, 5)))
        (row,) = rep.rows
        assert (row["min"], row["max"]) == (10, 25)
        assert Fraction(row["mean_num"], row["mean_den"]) == Fraction(73, 4)

    def test_shard_count_does_not_change_report(self):
        cfg = dict(q=2, b=2, n_range=(3, 8), checks={"theorem2", "claim1"})
        one = exhaustive_sweep(SweepConfig(**cfg, shard_count=1)).to_json()
        two = exhaustive_sweep(SweepConfig(**cfg, shard_count=2)).to_json()
        for rep in (one, two):
            rep.pop("wall_time")
            rep["config"].pop("shard_count")
        assert one == two

    def test_eq1_arbitration(self):
        rep = eq1_arbitration()
        assert rep.extra["eq1_winner"] == "pairs"
        assert rep.extra["eq1_mismatches"]["pairs"] == 0
        assert all(k > 0 for name, k in rep.extra["eq1_mismatches"].items() if name != "pairs")
        assert rep.ok

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(q=2, b=2, n_range=(2, 5)),
            dict(q=2, b=1, n_range=(6, 5)),
            dict(q=2, b=1, n_range=(2, 5), checks={"bogus"}),
            dict(q=2, b=2, n_range=(3, 5), checks={"eq1_convention"}),
            dict(q=1, b=1, n_range=(2, 3)),
        ],
    )
    def test_config_validation(self, kwargs):
        with pytest.raises(DomainError):
            SweepConfig(**kwargs)

    def test_budget_refusal(self):
        with pytest.raises(BudgetExceeded) as err:
            exhaustive_sweep(SweepConfig(q=2, b=1, n_range=(2, 30)))
        assert err.value.words == 2**30


class TestExtremal:
    def test_ternary(self):
        rec = extremal_scan(5, 3, 2)
        assert rec.max == 88 == rec.max_refined
        assert rec.min == 27 == min_ball_size(BallParams(5, 3, 2))
        assert rec.pattern_attain_max and rec.ok
        assert "00000" in rec.argmin_sample

    def test_binary(self):
        rec = extremal_scan(5, 2, 2)
        assert rec.min == 10 and {"00000", "01010"} <= set(rec.argmin_sample)
        assert rec.max <= rec.max_general == 40
        assert rec.max_refined is None and rec.ok

    def test_binary_unit(self):
        rec = extremal_scan(4, 2, 1)
        assert rec.max == 11 and "0101" in rec.argmax_sample


class TestAverage:
    @pytest.mark.parametrize("n,q,b", [(5, 2, 2), (4, 2, 1), (7, 3, 2)])
    def test_equal(self, n, q, b):
        rec = average_check(n, q, b)
        assert rec.equal and rec.formula == rec.exhaustive
        assert not rec.display_variant_equal

    def test_oracle_path(self):
        rec = average_check(5, 2, 2, use_oracle=True)
        assert rec.exhaustive == Fraction(73, 4) and rec.equal and rec.source == "oracle"

    def test_domain(self):
        with pytest.raises(DomainError):
            average_check(4, 2, 2)


class TestTypicality:
    def test_constant_word(self):
        rep = typicality_test(parse_word("0" * 16, 2), 1)
        assert rep.run_count == 1 and not rep.member
        assert abs(float(rep.run_lower) - 4.94) < 0.01

    def test_alternating_word(self):
        rep = typicality_test(parse_word("01" * 8, 2), 1)
        assert rep.run_count == 16 and not rep.member
        assert abs(float(rep.run_upper) - 12.06) < 0.01
        assert rep.max_2b_periodic == 16 and rep.threshold == 10.0

    def test_seeded_word(self):
        x = Word(2, tuple(int(v) for v in sample_words(16, 2, 1, seed=42)[0]))
        rep = typicality_test(x, 1)
        assert rep.run_count == 8 and rep.max_2b_periodic < 10 and rep.member

    def test_bounds_are_rounded_inward(self):
        import math

        for n, q, b in [(16, 2, 1), (256, 2, 2), (1024, 2, 2), (50, 3, 3)]:
            lo, hi = run_bounds(n, q, b)
            m = n - b
            spread = math.sqrt(math.log(n) / (2 * m))
            assert abs(float(lo) - (((q - 1) / q - spread) * m + 2)) < 1e-9
            assert abs(float(hi) - (((q - 1) / q + spread) * m)) < 1e-9

    def test_periodic_limit(self):
        # m < 2 log_q n + 2b for integers m
        assert periodic_limit(16, 2, 1) == 10
        assert periodic_limit(17, 2, 1) == 11
        assert periodic_limit(9, 3, 2) == 8


class TestCensus:
    def test_exhaustive_small(self):
        rec = code_census(16, 2, 1)
        assert rec.words == 65536
        assert rec.exact_fraction == Fraction(rec.members, 65536)
        assert rec.bound == Fraction(13, 16)

    def test_tiny_n_is_reported(self):
        rec = code_census(4, 2, 1)
        assert rec.words == 16 and 0 <= rec.fraction <= 1

    def test_sampled_is_reproducible(self):
        a = code_census(128, 2, 2, "sampled", samples=2500, seed=3)
        b = code_census(128, 2, 2, "sampled", samples=2500, seed=3, shards=2)
        assert a.members == b.members and a.std_error == b.std_error

    def test_mode(self):
        with pytest.raises(DomainError):
            code_census(8, 2, 1, "guess")


class TestConcentration:
    def test_all_zero_word(self):
        for n, q, b in [(9, 2, 2), (12, 3, 1), (33, 2, 3)]:
            rec = concentration_mc(n, q, b, words=np.zeros((1, n), dtype=np.int64))
            assert rec.deviations == [expected_ball_size(n, q, b) - min_ball_size(BallParams(n, q, b))]

    def test_seeded_runs_are_bit_identical(self):
        a = concentration_mc(64, 2, 1, samples=3000, seed=2)
        b = concentration_mc(64, 2, 1, samples=3000, seed=2, shards=3)
        assert a.deviations == b.deviations
        assert np.array_equal(a.normalized, b.normalized)

    def test_moderate_n_within_bound(self):
        rec = concentration_mc(64, 2, 1, samples=10_000, seed=2)
        assert rec.within_bound and rec.outlier_fraction <= 3 / 64
        assert rec.member_violations == 0

    @pytest.mark.slow
    def test_calibrated_constant(self):
        c, rec = calibrate_c()
        assert c == CALIBRATED_C
        assert rec.n == CALIBRATION["n"] and rec.samples == CALIBRATION["samples"]

    def test_domain(self):
        with pytest.raises(DomainError):
            concentration_mc(4, 2, 2, samples=10)
        with pytest.raises(DomainError):
            concentration_mc(9, 2, 2, samples=0)

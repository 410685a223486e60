"""TTS, Kaplan-Meier aggregation, and the benchmark suite driver."""

import math
import random
from fractions import Fraction

import pytest
from conftest import complete_graph, path_graph

from qpart.bench import (
    CSV_COLUMNS,
    BenchInstance,
    SurvivalObservation,
    TimingModel,
    km_median,
    records_to_csv,
    report_to_json,
    run_suite,
    tts,
)
from qpart.solve import AnnealParams


def obs(*pairs):
    return [SurvivalObservation(time=Fraction(t), censored=c) for t, c in pairs]


class TestTts:
    def test_ratio_one_at_half(self):
        tm = TimingModel(t_programming=10, t_anneal=1, t_readout=1, t_thermalize=0)
        assert tts(Fraction(1, 2), tm) == pytest.approx(12.0, rel=1e-9)

    def test_analytic_value(self):
        tm = TimingModel(t_programming=0, t_anneal=1, t_readout=0, t_thermalize=0)
        assert tts(Fraction(3, 4), tm) == pytest.approx(0.5, rel=1e-9)

    def test_zero_is_censored(self):
        tm = TimingModel()
        assert tts(0, tm) is None
        assert tts(Fraction(0), tm) is None

    def test_one_clamps_to_single_run(self):
        tm = TimingModel(t_programming=5, t_anneal=2, t_readout=3, t_thermalize=0)
        assert tts(1, tm) == 10

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            tts(1.5, TimingModel())
        with pytest.raises(ValueError):
            tts(-0.1, TimingModel())

    def test_monotone_nonincreasing_in_p(self):
        tm = TimingModel(t_programming=1, t_anneal=1, t_readout=1, t_thermalize=1)
        grid = [Fraction(k, 100) for k in range(1, 100)]
        values = [tts(p, tm) for p in grid]
        assert all(a >= b for a, b in zip(values, values[1:]))

    def test_timing_model_validation(self):
        with pytest.raises(ValueError):
            TimingModel(t_anneal=-1)

    def test_default_readout_tracks_qubits(self):
        tm = TimingModel.for_qubits(37)
        assert tm.t_readout == 77.0
        assert tm.t_run == 20.0 + 77.0 + 1000.0


class TestKaplanMeier:
    def test_uncensored_reduces_to_sample_median(self):
        est = km_median(obs((1, False), (2, False), (3, False), (4, False), (5, False)))
        assert est.median == 3
        assert not est.median_is_lower_bound

    def test_all_censored_reports_lower_bound(self):
        est = km_median(obs((4, True), (9, True)))
        assert est.median == 9
        assert est.median_is_lower_bound
        assert est.ci_low is None and est.ci_high is None

    def test_hand_computed_mixed_censoring(self):
        est = km_median(obs((1, False), (2, True), (3, False)))
        assert [(t, s) for t, s, _ in est.curve] == [
            (1, Fraction(2, 3)),
            (3, Fraction(0)),
        ]
        # Greenwood at t=1: (2/3)^2 * 1/(3*2)
        assert est.curve[0][2] == Fraction(2, 27)
        assert est.median == 3
        assert not est.median_is_lower_bound

    def test_matches_sample_median_randomized(self):
        rng = random.Random(41)
        for _ in range(200):
            n = rng.randint(1, 25)
            times = [rng.randint(1, 50) for _ in range(n)]
            est = km_median(obs(*[(t, False) for t in times]))
            # lower sample median: the ceil(n/2)-th order statistic
            expected = sorted(times)[(n + 1) // 2 - 1]
            assert est.median == expected

    def test_survival_curve_monotone_in_unit_interval(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randint(1, 20)
            data = [(rng.randint(1, 30), rng.random() < 0.4) for _ in range(n)]
            est = km_median(obs(*data))
            values = [s for _, s, _ in est.curve]
            assert all(0 <= s <= 1 for s in values)
            assert all(a >= b for a, b in zip(values, values[1:]))
            assert all(v >= 0 for _, _, v in est.curve)

    def test_ties_events_before_censorings(self):
        est = km_median(obs((2, False), (2, True), (2, False)))
        # both events happen with 3 at risk
        assert est.curve == ((2, Fraction(1, 3), Fraction(1, 3) ** 2 * Fraction(2, 3)),)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            km_median([])

    def test_ci_bounds_bracket_median(self):
        rng = random.Random(13)
        for _ in range(30):
            n = rng.randint(4, 30)
            data = [(rng.randint(1, 40), rng.random() < 0.2) for _ in range(n)]
            est = km_median(obs(*data))
            if est.ci_low is not None and not est.median_is_lower_bound:
                assert est.ci_low <= float(est.median)
            if est.ci_high is not None and est.ci_low is not None:
                assert est.ci_low <= est.ci_high


class TestRunSuite:
    def test_single_instance_two_records(self):
        report = run_suite(
            [BenchInstance("p3", path_graph(3), density=0.67, colors=2)],
            AnnealParams(runs=8, sweeps=64, seed=0),
        )
        assert len(report.records) == 2
        by_enc = {r.encoding: r for r in report.records}
        assert by_enc["log"].qubits_pre == 3
        assert by_enc["onehot"].qubits_pre == 8
        assert by_enc["log"].qubits_pre < by_enc["onehot"].qubits_pre

    def test_unreachable_bound_censors_everything(self):
        # a triangle cannot be properly 2-colored, so no run ever succeeds
        report = run_suite(
            [BenchInstance("k3", complete_graph(3), colors=2)],
            AnnealParams(runs=6, sweeps=32, seed=0),
        )
        assert all(r.censored for r in report.records)
        assert all(r.p_s == 0 for r in report.records)
        for _, _, _, est in report.groups:
            assert est.median_is_lower_bound

    def test_csv_columns_and_rows(self):
        report = run_suite(
            [BenchInstance("p3", path_graph(3), colors=2)],
            AnnealParams(runs=4, sweeps=16, seed=0),
        )
        text = records_to_csv(report.records)
        lines = text.strip().split("\n")
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == 3

    def test_json_report_well_formed(self):
        import json

        report = run_suite(
            [BenchInstance("p3", path_graph(3), colors=2)],
            AnnealParams(runs=4, sweeps=16, seed=0),
        )
        doc = json.loads(report_to_json(report))
        assert doc["notes"]
        assert len(doc["records"]) == 2
        assert doc["groups"]
        assert doc["failures"] == []

    def test_failures_recorded_suite_continues(self):
        disconnected = type(path_graph(3))(4, ((0, 1), (2, 3)))
        report = run_suite(
            [
                BenchInstance("bad", disconnected),  # Brooks rejects disconnected
                BenchInstance("good", path_graph(3), colors=2),
            ],
            AnnealParams(runs=4, sweeps=16, seed=0),
        )
        assert len(report.failures) == 1
        assert report.failures[0][0] == "bad"
        assert len(report.records) == 2

    def test_group_by_density(self):
        report = run_suite(
            [
                BenchInstance("a", path_graph(3), density=0.2, colors=2),
                BenchInstance("b", path_graph(4), density=0.8, colors=2),
            ],
            AnnealParams(runs=4, sweeps=16, seed=0),
            group_by="density",
        )
        keys = {key for _, key, _, _ in report.groups}
        assert keys == {"0.20", "0.80"}

    def test_invalid_group_key(self):
        with pytest.raises(ValueError):
            run_suite([], AnnealParams(runs=1, sweeps=1), group_by="m")

    def test_qubit_accounting_invariant(self):
        report = run_suite(
            [BenchInstance("p4", path_graph(4), colors=2)],
            AnnealParams(runs=4, sweeps=16, seed=0),
        )
        for r in report.records:
            if r.c >= 2:
                assert r.n * math.ceil(math.log2(r.c)) < (r.n + 1) * r.c

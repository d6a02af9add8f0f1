import json
import math

import numpy as np
import pytest

from exactlex import CalibrationReport, MultinomialModel, calibration, sample_table


def test_model_validation():
    with pytest.raises(ValueError):
        MultinomialModel(0.5, 0.5, 0.5, 0.5)
    with pytest.raises(ValueError):
        MultinomialModel(-0.1, 0.5, 0.3, 0.3)


def test_independent_constructor():
    model = MultinomialModel.independent(0.3, 0.2)
    assert model.p11 == pytest.approx(0.06)
    assert sum(model.probs) == pytest.approx(1.0, abs=1e-15)


def test_degenerate_mass_always_same_cell():
    model = MultinomialModel(1.0, 0.0, 0.0, 0.0)
    rng = np.random.default_rng(1)
    for _ in range(5):
        assert sample_table(model, 50, rng).cells == (50, 0, 0, 0)


def test_sample_sums_to_n():
    model = MultinomialModel.independent(0.4, 0.6)
    rng = np.random.default_rng(2)
    for _ in range(50):
        assert sample_table(model, 123, rng).total == 123


def test_sample_mean_matches_cell_probability():
    model = MultinomialModel.independent(0.5, 0.5)
    rng = np.random.default_rng(3)
    trials = 1000
    mean_n11 = sum(sample_table(model, 10000, rng).n11 for _ in range(trials)) / trials
    # 3 sigma for the mean of 1000 draws of Bin(10000, .25)
    assert abs(mean_n11 - 2500) <= 3 * math.sqrt(10000 * 0.25 * 0.75 / trials) + 1


def test_seed_determinism():
    model = MultinomialModel.independent(0.3, 0.3)
    a = sample_table(model, 500, np.random.default_rng(42))
    b = sample_table(model, 500, np.random.default_rng(42))
    assert a == b


def test_calibration_reproducible_byte_identical():
    model = MultinomialModel.independent(0.05, 0.04)
    first = calibration(model, 200, trials=300, seed=9)
    second = calibration(model, 200, trials=300, seed=9)
    assert json.dumps(first.to_dict()) == json.dumps(second.to_dict())


def test_calibration_super_uniform_exact_test():
    model = MultinomialModel.independent(0.01, 0.02)
    trials = 5000
    report = calibration(model, 1000, trials=trials, seed=4)
    for alpha in (0.01, 0.05, 0.10):
        rate = report.tallies["fisher_left"].rejection_rate(alpha)
        se = math.sqrt(alpha * (1 - alpha) / trials)
        assert rate <= alpha + 3 * se
        right = report.tallies["fisher_right"].rejection_rate(alpha)
        assert right <= alpha + 3 * se


def test_calibration_counts_degenerate_trials():
    # n11 mass ~1 per table is tiny; with rare rows most tables have a zero marginal
    model = MultinomialModel.independent(0.001, 0.001)
    report = calibration(model, 100, trials=200, seed=8)
    assert report.degenerate_trials > 0
    assert report.tallies["x2"].valid_trials == report.trials - report.degenerate_trials
    # fisher runs on every trial, degenerate or not
    assert report.tallies["fisher_left"].valid_trials == report.trials


def test_report_json_shape():
    model = MultinomialModel.independent(0.2, 0.2)
    report = calibration(model, 50, trials=120, alphas=(0.05,), seed=0)
    payload = report.to_dict()
    assert payload["rng_algorithm"] == "numpy-pcg64"
    assert payload["trials"] == 120
    assert set(payload["tests"]) == {"fisher_left", "fisher_right", "fisher_two", "x2", "g2", "t"}
    assert "0.05" in payload["tests"]["fisher_left"]["rejection_rates"]
    for stats in payload["tests"].values():
        for rate in stats["rejection_rates"].values():
            assert 0.0 <= rate <= 1.0


def test_trials_validation():
    with pytest.raises(ValueError):
        calibration(MultinomialModel.independent(0.5, 0.5), 10, trials=0)

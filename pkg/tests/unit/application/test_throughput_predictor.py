from unittest.mock import patch

import pytest

from pirasim.application import (
    HarmonicMeanForecast,
    ThroughputPredictor,
    predict,
    predict_after_switch,
    probe_due,
    record_sample,
)
from pirasim.domain import PredictorConfig, ThroughputHistory, ThroughputSample
from pirasim.domain.exceptions import (
    CannotPredictSwitchToSamePanCdnException,
    CannotPredictThroughputWithoutSamplesException,
)


def _history(pan_cdn_id, values):
    history = ThroughputHistory()
    for index, value in enumerate(values):
        history = record_sample(history, ThroughputSample(float(index), value, pan_cdn_id))
    return history


class TestPredict:
    @pytest.mark.parametrize("values, expected", [([10.0, 10.0, 10.0], 10.0), ([4.0, 12.0], 6.0), ([8.0], 8.0)])
    def test_harmonic_mean_of_the_window(self, values, expected):
        assert predict(_history(1, values), 1) == pytest.approx(expected)

    def test_harmonic_mean_never_exceeds_the_arithmetic_mean(self):
        values = [3.0, 17.0, 9.5, 22.0, 1.5]
        assert predict(_history(1, values), 1) <= sum(values) / len(values)

    def test_scales_exactly_with_powers_of_two(self):
        values = [3.0, 17.0, 9.5]
        assert predict(_history(1, [v * 4.0 for v in values]), 1) == 4.0 * predict(_history(1, values), 1)

    def test_only_the_window_counts(self):
        history = _history(1, [1.0, 10.0, 10.0, 10.0, 10.0, 10.0])
        assert predict(history, 1) == pytest.approx(10.0)

    def test_no_samples_is_an_error(self):
        with pytest.raises(CannotPredictThroughputWithoutSamplesException):
            predict(ThroughputHistory(), 1)


class TestPredictAfterSwitch:
    def test_degenerate_config_leaves_prediction_unchanged(self):
        config = PredictorConfig(degradation_alpha=1.0, avg_rtt_s=0.0)
        assert predict_after_switch(_history(2, [10.0]), 1, 2, config) == (pytest.approx(10.0), 0.0)

    def test_degrades_throughput_and_adds_setup(self):
        config = PredictorConfig(degradation_alpha=0.8, avg_rtt_s=0.05, switch_setup_rtt_mult=1.5)
        mbps, setup_s = predict_after_switch(_history(2, [10.0]), 1, 2, config)
        assert mbps == pytest.approx(8.0)
        assert setup_s == pytest.approx(0.075)

    def test_same_pan_cdn_is_a_contract_violation(self):
        with pytest.raises(CannotPredictSwitchToSamePanCdnException):
            predict_after_switch(_history(1, [10.0]), 1, 1, PredictorConfig())


class TestProbeDue:
    def test_fresh_measurements_need_no_probe(self):
        assert probe_due({1: 10.0, 2: 12.0}, 20.0, PredictorConfig(probe_interval_s=30.0), [1, 2]) == frozenset()

    def test_idle_pan_cdn_is_due(self):
        assert probe_due({1: 10.0, 2: 45.0}, 50.0, PredictorConfig(probe_interval_s=30.0), [1, 2]) == {1}

    def test_never_measured_pan_cdn_is_due(self):
        assert probe_due({1: 10.0}, 11.0, PredictorConfig(), [1, 3]) == {3}


class TestThroughputPredictor:
    def test_cold_start_uses_the_prior(self):
        predictor = ThroughputPredictor(PredictorConfig(prior_mbps={1: 25.0}), [1])
        forecast = predictor.forecast(1)
        assert forecast.mbps == 25.0
        assert forecast.low_confidence

    def test_prior_use_is_logged_once_per_pan_cdn_at_debug(self):
        predictor = ThroughputPredictor(PredictorConfig(prior_mbps={1: 25.0}), [1])
        with patch("pirasim.application.throughput_predictor.logger") as logger:
            predictor.forecast(1)
            predictor.forecast(1)
        logger.debug.assert_called_once()
        logger.warning.assert_not_called()

    def test_missing_prior_is_an_error(self):
        predictor = ThroughputPredictor(PredictorConfig(prior_mbps={}), [1])
        with pytest.raises(CannotPredictThroughputWithoutSamplesException):
            predictor.forecast(1)

    def test_observed_samples_replace_the_prior(self):
        predictor = ThroughputPredictor(PredictorConfig(), [1, 2])
        predictor.observe(ThroughputSample(1.0, 4.0, 1))
        predictor.observe(ThroughputSample(2.0, 12.0, 1))
        assert predictor.predictions() == {1: pytest.approx(6.0), 2: 22.0}
        assert not predictor.forecast(1).low_confidence

    def test_probes_due_tracks_the_last_measurement(self):
        predictor = ThroughputPredictor(PredictorConfig(probe_interval_s=30.0), [1, 2])
        predictor.observe(ThroughputSample(5.0, 10.0, 1))
        assert predictor.probes_due(20.0) == {2}
        assert predictor.probes_due(40.0) == {1, 2}

    def test_stalest_prefers_never_measured_then_lower_id(self):
        predictor = ThroughputPredictor(PredictorConfig(), [1, 2, 3, 4])
        predictor.observe(ThroughputSample(5.0, 10.0, 1))
        predictor.observe(ThroughputSample(2.0, 10.0, 2))
        assert predictor.stalest([1, 2, 3, 4]) == 3
        assert predictor.stalest([1, 2]) == 2


class TestHarmonicMeanForecast:
    def test_prediction_is_frozen_per_pan_cdn(self):
        forecast = HarmonicMeanForecast({1: 12.0}, PredictorConfig())
        assert forecast.average_mbps(1, 0.0, 8.0) == 12.0
        assert forecast.average_mbps(1, 100.0, 80.0) == 12.0

    def test_no_penalty_on_the_same_pan_cdn(self):
        assert HarmonicMeanForecast({}, PredictorConfig()).switch_penalty(2, 2, 0.0) == (1.0, 0.0)

    def test_first_request_pays_setup_like_a_cold_connection(self):
        alpha, setup_s = HarmonicMeanForecast({}, PredictorConfig()).switch_penalty(None, 1, 0.0)
        assert alpha == 0.8
        assert setup_s == pytest.approx(0.075)

    def test_switch_pays_degradation_and_setup(self):
        alpha, setup_s = HarmonicMeanForecast({}, PredictorConfig()).switch_penalty(1, 2, 0.0)
        assert alpha == 0.8
        assert setup_s == pytest.approx(0.075)

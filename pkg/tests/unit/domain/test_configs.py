import pytest

from pirasim.domain import (
    LinkConfig,
    Period,
    PlanningConfig,
    PredictorConfig,
    ProductionConfig,
    PruningMode,
    SynthConfig,
    ThroughputTrace,
    TraceFile,
    WorkloadConfig,
)
from pirasim.domain.exceptions import (
    CannotCreatePlanningConfigWithInvalidFieldsException,
    CannotCreatePredictorConfigWithInvalidFieldsException,
    CannotCreateProductionConfigWithInvalidMarginException,
    CannotCreateSynthConfigWithInvalidFieldsException,
    CannotCreateThroughputTraceWithInvalidSamplesException,
    CannotCreateWorkloadConfigWithInvalidFieldsException,
)


class TestPlanningConfig:
    def test_candidate_ranges_are_sorted_and_deduplicated(self):
        config = PlanningConfig(candidate_ranges_s=(4, 1, 2, 2))
        assert config.candidate_ranges_s == (1.0, 2.0, 4.0)

    def test_pruning_accepts_its_string_value(self):
        assert PlanningConfig(pruning="ii-only").pruning is PruningMode.II_ONLY

    def test_copies_change_one_field(self):
        config = PlanningConfig().with_horizon(2).with_pruning(PruningMode.OFF)
        assert (config.horizon_n, config.pruning) == (2, PruningMode.OFF)
        assert config.candidate_ranges_s == (1.0, 2.0, 3.0, 4.0)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"horizon_n": 0},
            {"candidate_ranges_s": ()},
            {"candidate_ranges_s": (1.0, 5.0)},
            {"range_ratio_steps": ((0.0, 1.0), (0.0, 2.0))},
            {"range_ratio_steps": ((0.0, 2.0), (1.0, 1.0))},
        ],
    )
    def test_rejects_invalid_fields(self, kwargs):
        with pytest.raises(CannotCreatePlanningConfigWithInvalidFieldsException):
            PlanningConfig(**kwargs)


class TestPruningMode:
    @pytest.mark.parametrize(
        "mode, pan_cdns, ranges",
        [
            (PruningMode.ON, True, True),
            (PruningMode.OFF, False, False),
            (PruningMode.I_ONLY, True, False),
            (PruningMode.II_ONLY, False, True),
        ],
    )
    def test_selects_the_filters(self, mode, pan_cdns, ranges):
        assert mode.filters_pan_cdns is pan_cdns
        assert mode.filters_ranges is ranges


class TestPredictorConfig:
    def test_switch_setup_is_a_multiple_of_the_rtt(self):
        assert PredictorConfig(switch_setup_rtt_mult=1.5, avg_rtt_s=0.05).switch_setup_s == pytest.approx(0.075)

    @pytest.mark.parametrize(
        "kwargs",
        [{"window_w": 0}, {"degradation_alpha": 0.0}, {"degradation_alpha": 1.2}, {"probe_interval_s": 0.0}],
    )
    def test_rejects_invalid_fields(self, kwargs):
        with pytest.raises(CannotCreatePredictorConfigWithInvalidFieldsException):
            PredictorConfig(**kwargs)

    def test_rejects_non_positive_prior(self):
        with pytest.raises(CannotCreatePredictorConfigWithInvalidFieldsException):
            PredictorConfig(prior_mbps={1: 0.0})


class TestProductionConfig:
    def test_margin_must_exceed_one(self):
        with pytest.raises(CannotCreateProductionConfigWithInvalidMarginException):
            ProductionConfig(margin=1.0)


class TestLinkConfig:
    def test_rejects_alpha_out_of_range(self):
        with pytest.raises(ValueError):
            LinkConfig(degradation_alpha=0.0)


class TestSynthConfig:
    def test_period_scales_the_means(self):
        config = SynthConfig(period="evening-peak")
        assert config.period is Period.EVENING_PEAK
        assert config.mean_mbps(3) == pytest.approx(9.0)
        assert config.mean_mbps(3) < config.mean_mbps(4)

    def test_trace_id_defaults_from_period_and_seed(self):
        assert SynthConfig(period=Period.PEAK, seed=7).trace_id == "synth-peak-7"

    @pytest.mark.parametrize("kwargs", [{"ar_coeff": 1.0}, {"noise_sigma": -0.1}, {"length_s": 0}, {"base_mbps": {}}])
    def test_rejects_invalid_fields(self, kwargs):
        with pytest.raises(CannotCreateSynthConfigWithInvalidFieldsException):
            SynthConfig(**kwargs)


class TestWorkloadConfig:
    def test_pan_cdn_ids_come_from_the_cache_probabilities(self):
        assert WorkloadConfig(cache_probability={2: 0.5, 1: 1.0}).pan_cdn_ids == (1, 2)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"video_count": -1},
            {"short_fraction": 1.5},
            {"short_range_s": (10.0, 5.0)},
            {"bitrates_mbps": ()},
            {"cache_probability": {1: 1.5}},
        ],
    )
    def test_rejects_invalid_fields(self, kwargs):
        with pytest.raises(CannotCreateWorkloadConfigWithInvalidFieldsException):
            WorkloadConfig(**kwargs)


class TestTraceFile:
    def test_orders_traces_by_pan_cdn(self):
        traces = TraceFile("t", Period.PEAK, [ThroughputTrace.of(2, [1.0, 2.0]), ThroughputTrace.of(1, [3.0, 4.0])])
        assert traces.pan_cdn_ids == (1, 2)
        assert traces.length_s == 2
        assert traces.trace_of(2).mean_mbps == pytest.approx(1.5)

    def test_rejects_misaligned_traces(self):
        with pytest.raises(CannotCreateThroughputTraceWithInvalidSamplesException):
            TraceFile("t", Period.PEAK, [ThroughputTrace.of(1, [1.0]), ThroughputTrace.of(2, [1.0, 2.0])])

    def test_rejects_non_positive_samples(self):
        with pytest.raises(CannotCreateThroughputTraceWithInvalidSamplesException):
            ThroughputTrace.of(1, [1.0, 0.0])

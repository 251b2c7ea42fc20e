import pytest

from pirasim.application import (
    HarmonicMeanForecast,
    OracleStrategy,
    PiraController,
    ProductionBaselineStrategy,
    PurePanCdnStrategy,
    RangePlanner,
    ThroughputPredictor,
)
from pirasim.domain import (
    DecisionContext,
    DownloadOutcome,
    PanCdnCatalog,
    PlanningConfig,
    PredictorConfig,
    PreloadPolicy,
    ProductionConfig,
    PruningMode,
    QoEParams,
    SessionState,
    StepKind,
    ThroughputSample,
)
from pirasim.domain.exceptions import CannotRunInfeasibleStrategyException
from tests.helpers import make_media, make_video, started_session

CATALOG = PanCdnCatalog.default()


def _context(media, session, ground_truth=None):
    sequence = PreloadPolicy().download_sequence(session, media)
    return DecisionContext(session.now_s, media, session, sequence, CATALOG, ground_truth)


def _outcome(pan_cdn_id, at_s, mbps, rebuffer_s=0.0, kind=StepKind.RANGE):
    return DownloadOutcome(kind, pan_cdn_id, at_s, mbps, rebuffer_s, viewed_buffer_s=1.0)


def _pira(horizon_n=1):
    params = QoEParams()
    planner = RangePlanner(PlanningConfig(horizon_n=horizon_n), params, CATALOG)
    return PiraController(planner, ThroughputPredictor(PredictorConfig(), CATALOG.ids), params)


class TestPurePanCdnStrategy:
    def test_requests_the_rest_of_the_chunk(self):
        media = make_media(make_video("A", duration_s=10.0))
        decision = PurePanCdnStrategy(3).decide(_context(media, started_session(media, {"A": 9.0})))
        assert (decision.video_id, decision.pan_cdn_id, decision.range_duration_s) == ("A", 3, pytest.approx(1.0))

    def test_full_chunk_from_a_boundary(self):
        media = make_media(make_video("A", duration_s=10.0))
        decision = PurePanCdnStrategy(2).decide(_context(media, SessionState.initial(media, 30.0)))
        assert decision.range_duration_s == 4.0

    def test_uncached_video_is_infeasible(self):
        media = make_media(make_video("A", cached_on={1}))
        with pytest.raises(CannotRunInfeasibleStrategyException):
            PurePanCdnStrategy(2).decide(_context(media, SessionState.initial(media, 30.0)))

    def test_name_carries_the_pan_cdn(self):
        assert PurePanCdnStrategy(4).name == "pure-4"


class TestProductionBaselineStrategy:
    def setup_method(self):
        config = PredictorConfig(prior_mbps={1: 25.0, 2: 22.0, 3: 18.0, 4: 14.0})
        self.predictor = ThroughputPredictor(config, CATALOG.ids)
        self.strategy = ProductionBaselineStrategy(ProductionConfig(margin=1.1, recovery_buffer_s=5.0), self.predictor)

    def test_picks_the_cheapest_pan_cdn_with_margin(self):
        media = make_media(make_video("A", bitrate_mbps=2.0))
        assert self.strategy.decide(_context(media, SessionState.initial(media, 30.0))).pan_cdn_id == 4

    def test_falls_back_to_pan_cdn_one_when_nothing_qualifies(self):
        media = make_media(make_video("A", bitrate_mbps=30.0))
        assert self.strategy.decide(_context(media, SessionState.initial(media, 30.0))).pan_cdn_id == 1

    def test_skips_pan_cdns_measured_below_the_margin(self):
        media = make_media(make_video("A", bitrate_mbps=8.0))
        self.strategy.observe(_outcome(4, 1.0, 5.0))
        self.strategy.observe(_outcome(3, 2.0, 5.0))
        assert self.strategy.decide(_context(media, SessionState.initial(media, 30.0))).pan_cdn_id == 2

    def test_stall_triggers_emergency_until_the_buffer_recovers(self):
        media = make_media(make_video("A", bitrate_mbps=2.0))
        self.strategy.observe(_outcome(4, 1.0, 14.0, rebuffer_s=0.5))
        assert self.strategy.in_emergency

        low = self.strategy.decide(_context(media, started_session(media, {"A": 2.0})))
        assert low.pan_cdn_id == 1
        assert self.strategy.in_emergency

        recovered = self.strategy.decide(_context(media, started_session(media, {"A": 5.0})))
        assert recovered.pan_cdn_id == 4
        assert not self.strategy.in_emergency

    def test_probe_outcomes_are_ignored(self):
        self.strategy.observe(_outcome(4, 1.0, 14.0, rebuffer_s=0.5, kind=StepKind.PROBE))
        assert not self.strategy.in_emergency
        assert len(self.predictor.history) == 0

    def test_emergency_pan_cdn_without_the_video_is_infeasible(self):
        media = make_media(make_video("A", bitrate_mbps=30.0, cached_on={4}))
        with pytest.raises(CannotRunInfeasibleStrategyException):
            self.strategy.decide(_context(media, SessionState.initial(media, 30.0)))


class TestPiraController:
    def test_plans_before_playback_starts(self):
        media = make_media(make_video("A"), make_video("B"))
        strategy = _pira()

        decision = strategy.decide(_context(media, SessionState.initial(media, 30.0)))

        assert not decision.is_probe
        assert decision.video_id == "A"
        assert strategy.last_plan is not None
        assert strategy.last_plan.decision == decision

    def test_probes_the_stalest_pan_cdn_when_the_buffer_is_safe(self):
        media = make_media(make_video("A"), make_video("B"))
        strategy = _pira()

        decision = strategy.decide(_context(media, started_session(media, {"A": 5.0})))

        assert decision.is_probe
        assert (decision.video_id, decision.pan_cdn_id, decision.range_duration_s) == ("A", 1, 0.5)
        assert strategy.last_plan is None

    def test_does_not_probe_near_the_startup_threshold(self):
        media = make_media(make_video("A"), make_video("B"))
        decision = _pira().decide(_context(media, started_session(media, {"A": 2.0})))
        assert not decision.is_probe

    def test_fresh_measurements_suppress_probing(self):
        media = make_media(make_video("A"), make_video("B"))
        strategy = _pira()
        for pan_cdn_id in CATALOG.ids:
            strategy.observe(_outcome(pan_cdn_id, 0.0, 20.0))

        decision = strategy.decide(_context(media, started_session(media, {"A": 5.0})))

        assert not decision.is_probe

    def test_observations_feed_the_predictor(self):
        strategy = _pira()
        strategy.observe(_outcome(2, 3.0, 12.5))
        assert strategy.predictor.forecast(2).mbps == 12.5

    def test_name(self):
        assert _pira().name == "pira"


class TestOracleStrategy:
    def test_needs_ground_truth(self):
        media = make_media(make_video("A"))
        planner = RangePlanner(PlanningConfig(horizon_n=1), QoEParams(), CATALOG)
        with pytest.raises(CannotRunInfeasibleStrategyException):
            OracleStrategy(planner).decide(_context(media, SessionState.initial(media, 30.0)))

    def test_matches_pira_when_predictions_are_exact(self):
        media = make_media(make_video("A", duration_s=40.0), make_video("B", duration_s=40.0))
        session = started_session(media, {"A": 2.5})
        rates = {1: 25.0, 2: 22.0, 3: 18.0, 4: 14.0}
        config = PlanningConfig(horizon_n=2, pruning=PruningMode.OFF)
        params = QoEParams()

        oracle = OracleStrategy(RangePlanner(config, params, CATALOG))
        oracle_decision = oracle.decide(_context(media, session, HarmonicMeanForecast(rates, PredictorConfig())))

        predictor = ThroughputPredictor(PredictorConfig(prior_mbps={}), CATALOG.ids)
        for pan_cdn_id, mbps in rates.items():
            predictor.observe(ThroughputSample(0.0, mbps, pan_cdn_id))
        pira = PiraController(RangePlanner(config, params, CATALOG), predictor, params)
        pira_decision = pira.decide(_context(media, session))

        assert oracle_decision == pira_decision
        assert oracle.last_plan.utility == pytest.approx(pira.last_plan.utility)

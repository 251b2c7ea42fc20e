import pytest

from pirasim.application import HarmonicMeanForecast, RangePlanner, count_enumerated, min_range_for, prune_pan_cdns
from pirasim.domain import (
    DownloadTarget,
    PanCdnCatalog,
    PlanningConfig,
    PlanState,
    PredictorConfig,
    PruningMode,
    QoEParams,
    SessionState,
)
from pirasim.domain.exceptions import (
    CannotPlanWithoutDownloadTargetException,
    CannotPruneEmptyPanCdnCandidatesException,
    CannotRunInfeasibleStrategyException,
)
from pirasim.domain.planning_config import DEFAULT_RANGE_RATIO_STEPS
from tests.helpers import make_media, make_video, started_session

CATALOG = PanCdnCatalog.default()
MEASURED = {1: 25.0, 2: 22.0, 3: 18.0, 4: 14.0}


def _plan(planner, media, session, predicted, sequence=None):
    sequence = sequence or (DownloadTarget(0, media.video_at(0).id, 100.0),)
    state = PlanState(session, sequence, predicted)
    return planner.plan(state, media, HarmonicMeanForecast(predicted, PredictorConfig()))


class TestPrunePanCdns:
    def test_measured_means_form_a_pareto_frontier(self):
        assert prune_pan_cdns([1, 2, 3, 4], MEASURED, CATALOG) == {1, 2, 3, 4}

    def test_faster_and_cheaper_dominates(self):
        assert prune_pan_cdns([1, 2], {1: 25.0, 2: 26.0}, CATALOG) == {2}

    def test_equal_throughput_prunes_nothing(self):
        assert prune_pan_cdns([1, 2, 3, 4], {1: 10.0, 2: 10.0, 3: 10.0, 4: 10.0}, CATALOG) == {1, 2, 3, 4}

    def test_equal_cost_prunes_nothing(self):
        catalog = PanCdnCatalog.from_costs([0.1, 0.1])
        assert prune_pan_cdns([1, 2], {1: 5.0, 2: 50.0}, catalog) == {1, 2}

    def test_empty_candidates_are_rejected(self):
        with pytest.raises(CannotPruneEmptyPanCdnCandidatesException):
            prune_pan_cdns([], MEASURED, CATALOG)


class TestMinRangeFor:
    @pytest.mark.parametrize(
        "ratio, expected", [(0.5, 1.0), (1.0, 2.0), (1.9, 2.0), (2.0, 3.0), (3.9, 3.0), (10.0, 4.0)]
    )
    def test_default_steps(self, ratio, expected):
        assert min_range_for(ratio * 2.0, 2.0, DEFAULT_RANGE_RATIO_STEPS) == expected

    def test_is_nondecreasing_in_throughput(self):
        floors = [min_range_for(mbps / 4.0, 2.0, DEFAULT_RANGE_RATIO_STEPS) for mbps in range(1, 80)]
        assert floors == sorted(floors)


class TestCountEnumerated:
    @pytest.mark.parametrize(
        "pan_cdns, ranges, horizon, expected", [(4, 4, 1, 16), (4, 4, 4, 69904), (1, 1, 3, 3), (1, 1, 7, 7)]
    )
    def test_sums_the_tree_levels(self, pan_cdns, ranges, horizon, expected):
        assert count_enumerated(PlanningConfig(horizon_n=horizon), pan_cdns, ranges) == expected


class TestRangePlanner:
    def setup_method(self):
        self.media = make_media(make_video("A", duration_s=200.0, bitrate_mbps=2.0), watch=1000.0)
        self.session = started_session(self.media, {"A": 10.0})

    def test_unpruned_search_scores_the_whole_tree(self):
        config = PlanningConfig(horizon_n=3, pruning=PruningMode.OFF)
        planner = RangePlanner(config, QoEParams(), CATALOG)

        result = _plan(planner, self.media, self.session, MEASURED)

        assert result.scored_sequences == count_enumerated(config, 4, 4) == 4368
        assert not result.fallback

    def test_pruning_keeps_only_full_chunks_on_a_fast_network(self):
        planner = RangePlanner(PlanningConfig(horizon_n=3), QoEParams(), CATALOG)

        result = _plan(planner, self.media, self.session, MEASURED)

        assert result.scored_sequences == 4 + 16 + 64
        assert result.pruned_pan_cdns == frozenset()

    @pytest.mark.slow
    def test_default_horizon_unpruned_matches_the_formula(self):
        config = PlanningConfig(horizon_n=4, pruning=PruningMode.OFF)
        planner = RangePlanner(config, QoEParams(), CATALOG)

        result = _plan(planner, self.media, self.session, MEASURED)

        assert result.scored_sequences == 69904

    def test_single_candidate_is_chosen(self):
        catalog = PanCdnCatalog.from_costs([0.1])
        media = make_media(make_video("A", duration_s=200.0, cached_on={1}), watch=1000.0)
        config = PlanningConfig(horizon_n=1, candidate_ranges_s=(2.0,), pruning="off")
        planner = RangePlanner(config, QoEParams(), catalog)

        result = _plan(planner, media, started_session(media, {"A": 10.0}), {1: 10.0})

        assert (result.decision.pan_cdn_id, result.decision.range_duration_s) == (1, 2.0)
        assert result.scored_sequences == 1

    def test_equal_throughput_goes_to_the_cheapest_pan_cdn(self):
        planner = RangePlanner(PlanningConfig(horizon_n=2, pruning=PruningMode.OFF), QoEParams(gamma=0.3), CATALOG)

        result = _plan(planner, self.media, self.session, {1: 20.0, 2: 20.0, 3: 20.0, 4: 20.0})

        assert result.decision.pan_cdn_id == 4
        # the first range is clamped to the end of the current chunk
        assert result.decision.range_duration_s == pytest.approx(2.0)

    def test_near_empty_buffer_buys_a_short_fast_range(self):
        media = make_media(make_video("A", duration_s=20.0, bitrate_mbps=4.0, cached_on={1, 4}), watch=100.0)
        session = started_session(media, {"A": 0.5}, last_pan_cdn_id=1)
        planner = RangePlanner(PlanningConfig(horizon_n=1, pruning=PruningMode.OFF), QoEParams(mu1=50.0), CATALOG)

        result = _plan(planner, media, session, {1: 20.0, 4: 1.0})

        assert result.decision.video_id == "A"
        assert result.decision.pan_cdn_id == 1
        assert result.decision.range_duration_s == pytest.approx(2.0)

    def test_gamma_zero_ignores_price(self):
        planner = RangePlanner(PlanningConfig(horizon_n=1, pruning=PruningMode.OFF), QoEParams(gamma=0.0), CATALOG)

        result = _plan(planner, self.media, self.session, {1: 20.0, 2: 20.0, 3: 20.0, 4: 20.0})

        # every pan-CDN ties, so the tie-break still prefers the cheapest
        assert result.decision.pan_cdn_id == 4
        assert result.utility == pytest.approx(2.0 / 200.0)

    def test_pruned_out_candidates_fall_back_to_the_cheapest_pan_cdn(self):
        config = PlanningConfig(horizon_n=2, candidate_ranges_s=(1.0, 2.0))
        planner = RangePlanner(config, QoEParams(), CATALOG)

        result = _plan(planner, self.media, self.session, MEASURED)

        assert result.fallback
        assert result.scored_sequences == 0
        assert (result.decision.pan_cdn_id, result.decision.range_duration_s) == (4, 1.0)

    def test_uncached_video_is_infeasible(self):
        catalog = PanCdnCatalog.from_costs([0.1])
        media = make_media(make_video("A", cached_on={2}))
        planner = RangePlanner(PlanningConfig(horizon_n=1), QoEParams(), catalog)

        with pytest.raises(CannotRunInfeasibleStrategyException):
            _plan(planner, media, started_session(media, {"A": 1.0}), {1: 10.0})

    def test_empty_download_sequence_is_rejected(self):
        planner = RangePlanner(PlanningConfig(horizon_n=1), QoEParams(), CATALOG)
        with pytest.raises(CannotPlanWithoutDownloadTargetException):
            planner.plan(
                PlanState(self.session, (), MEASURED), self.media, HarmonicMeanForecast(MEASURED, PredictorConfig())
            )

    def test_planning_is_deterministic(self):
        planner = RangePlanner(PlanningConfig(horizon_n=2, pruning=PruningMode.OFF), QoEParams(), CATALOG)
        first = _plan(planner, self.media, self.session, MEASURED)
        second = _plan(planner, self.media, self.session, MEASURED)
        assert first == second

    def test_unstarted_video_is_not_offered_ranges_below_the_startup_threshold(self):
        media = make_media(make_video("A", duration_s=20.0, bitrate_mbps=2.0), watch=100.0)
        session = SessionState.initial(media, 30.0)
        planner = RangePlanner(PlanningConfig(horizon_n=1, pruning=PruningMode.OFF), QoEParams(tau_st_s=2.0), CATALOG)

        result = _plan(planner, media, session, MEASURED)

        assert result.decision.range_duration_s >= 2.0
        assert result.scored_sequences == 4 * 3

    def test_ranges_clamped_to_the_same_length_still_count_as_scored(self):
        config = PlanningConfig(horizon_n=1, candidate_ranges_s=(2.0, 3.0, 4.0), pruning=PruningMode.OFF)
        clamped = RangePlanner(config, QoEParams(), CATALOG)
        single = RangePlanner(
            PlanningConfig(horizon_n=1, candidate_ranges_s=(2.0,), pruning=PruningMode.OFF), QoEParams(), CATALOG
        )

        result = _plan(clamped, self.media, self.session, MEASURED)
        reference = _plan(single, self.media, self.session, MEASURED)

        # 10s downloaded of 4s chunks leaves 2s in the chunk, so all three ranges clamp to it
        assert result.scored_sequences == 4 * 3
        assert reference.scored_sequences == 4
        assert result.decision == reference.decision
        assert result.utility == reference.utility

    def test_first_request_of_a_session_pays_connection_setup(self):
        catalog = PanCdnCatalog.from_costs([0.1])
        media = make_media(make_video("A", duration_s=20.0, bitrate_mbps=4.0, cached_on={1}), watch=100.0)
        config = PlanningConfig(horizon_n=1, candidate_ranges_s=(2.0,), pruning=PruningMode.OFF)
        planner = RangePlanner(config, QoEParams(mu1=2.0), catalog)

        cold = _plan(planner, media, started_session(media, {"A": 0.5}), {1: 20.0})
        warm = _plan(planner, media, started_session(media, {"A": 0.5}, last_pan_cdn_id=1), {1: 20.0})

        # 8 Mb at 0.8 x 20 Mbps plus 0.075s setup outlasts the 0.5s buffer by 0.075s
        assert warm.utility - cold.utility == pytest.approx(2.0 * 0.075 / 100.0)


def _grid_cases():
    for pan_cdns in range(1, 5):
        for ranges in range(1, 5):
            for horizon in range(1, 6):
                case = (pan_cdns, ranges, horizon)
                # the largest trees take seconds each in pure Python
                if (pan_cdns * ranges) ** horizon > 50_000:
                    yield pytest.param(*case, marks=pytest.mark.slow)
                else:
                    yield case


class TestCountGrid:
    @pytest.mark.parametrize("pan_cdns, ranges, horizon", list(_grid_cases()))
    def test_unpruned_search_scores_the_whole_tree(self, pan_cdns, ranges, horizon):
        catalog = PanCdnCatalog.from_costs([0.2 - 0.04 * index for index in range(pan_cdns)])
        config = PlanningConfig(
            horizon_n=horizon, candidate_ranges_s=(1.0, 2.0, 3.0, 4.0)[:ranges], pruning=PruningMode.OFF
        )
        media = make_media(make_video("A", duration_s=200.0, bitrate_mbps=2.0), watch=1000.0)
        session = started_session(media, {"A": 4.0})
        predicted = {pan_cdn_id: 10.0 + pan_cdn_id for pan_cdn_id in catalog.ids}

        result = _plan(RangePlanner(config, QoEParams(), catalog), media, session, predicted)

        assert result.scored_sequences == count_enumerated(config, pan_cdns, ranges)

import pytest

from pirasim.application import aggregate, episode_specs, replay_check
from pirasim.configuration import Settings, build_runner
from pirasim.domain import Period, StepKind
from pirasim.infrastructure import generate_workload, synthesize_traces

SETTINGS = Settings(video_count=4, trace_length_s=900, horizon_n=2, workers=2, replications=2, seed=7)
STRATEGIES = ["pira", "production", "oracle", "pure-1", "pure-4"]


def run_all(settings=SETTINGS, periods=(Period.EVENING_PEAK,), strategies=STRATEGIES):
    traces = {period: synthesize_traces(settings.synth_config(period)) for period in periods}
    runner = build_runner(
        settings,
        trace_source=traces.__getitem__,
        workload_source=lambda seed: generate_workload(settings.workload_config(seed)),
    )
    return runner.run(episode_specs(periods, strategies, settings.replication_seeds()))


@pytest.fixture(scope="module")
def results():
    return run_all()


@pytest.mark.integration
class TestExperimentPipeline:
    def test_every_episode_replays_from_its_log(self, results):
        assert len(results) == len(STRATEGIES) * SETTINGS.replications
        assert all(replay_check(result) for result in results)

    def test_metrics_are_well_formed(self, results):
        for result in results:
            assert result.rebuffer_ratio >= 0.0
            assert result.mean_startup_s > 0.0
            assert result.total_cost > 0.0
            assert result.decisions > 0
            assert sum(result.metrics.byte_shares().values()) == pytest.approx(1.0)

    def test_cheap_pan_cdn_costs_less_than_the_expensive_one(self, results):
        by_key = {(result.strategy, result.seed): result for result in results}
        for seed in SETTINGS.replication_seeds():
            assert by_key[("pure-4", seed)].total_cost < by_key[("pure-1", seed)].total_cost

    def test_pure_strategies_stay_on_their_pan_cdn(self, results):
        for result in results:
            if not result.strategy.startswith("pure-"):
                continue
            pan_cdn_id = int(result.strategy.split("-")[1])
            assert {record.pan_cdn_id for record in result.records if record.kind == StepKind.RANGE} == {pan_cdn_id}

    def test_only_pira_probes(self, results):
        for result in results:
            if result.strategy != "pira":
                assert all(record.kind != StepKind.PROBE for record in result.records)

    def test_planners_report_scored_sequences(self, results):
        for result in results:
            if result.strategy in ("pira", "oracle"):
                assert result.scored_sequences > 0
            else:
                assert result.scored_sequences == 0

    def test_strategies_of_a_seed_share_the_trace_window(self, results):
        offsets = {}
        for result in results:
            offsets.setdefault(result.seed, set()).add(result.offset_s)
        assert all(len(window) == 1 for window in offsets.values())

    def test_aggregate_rows_cover_each_strategy(self, results):
        rows = aggregate(results)
        assert sorted(row["strategy"] for row in rows) == sorted(STRATEGIES)
        assert all(row["episodes"] == SETTINGS.replications for row in rows)
        assert max(row["normalized_cost"] for row in rows) == pytest.approx(1.0)


@pytest.mark.integration
class TestDeterminism:
    def test_worker_count_does_not_change_results(self):
        strategies = ["pira", "production"]
        serial = run_all(SETTINGS.with_values(workers=1), strategies=strategies)
        parallel = run_all(SETTINGS.with_values(workers=3), strategies=strategies)
        assert serial == parallel

    def test_reruns_are_identical(self):
        first = run_all(strategies=["pira"])
        second = run_all(strategies=["pira"])
        assert [result.summary() for result in first] == [result.summary() for result in second]

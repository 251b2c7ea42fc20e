import pytest

from pirasim.api.cli import _overrides, build_parser
from pirasim.configuration import Settings, load_config


class TestReplicationDefaults:
    @pytest.mark.parametrize(
        "argv",
        [
            ["compare", "--out", "x"],
            ["sweep", "--axis", "gamma", "--values", "0,1", "--out", "x"],
        ],
    )
    def test_suites_leave_replications_to_the_settings(self, argv):
        args = build_parser().parse_args(argv)

        assert args.replications is None
        assert load_config(overrides=_overrides(args), environ={}).replications == Settings().replications

    @pytest.mark.parametrize("command", ["compare", "sweep"])
    def test_suites_pick_up_the_configured_replications(self, tmp_path, command):
        path = tmp_path / "suite.env"
        path.write_text("replications=7\n")
        extra = ["--axis", "gamma", "--values", "0"] if command == "sweep" else []
        args = build_parser().parse_args([command, "--config", str(path), "--out", "x"] + extra)

        assert load_config(args.config, _overrides(args), environ={}).replications == 7

    def test_simulate_runs_one_replication_by_default(self):
        args = build_parser().parse_args(["simulate", "--out", "x"])
        assert args.replications == 1

    def test_simulate_default_does_not_leak_into_other_commands(self):
        parser = build_parser()
        parser.parse_args(["simulate", "--out", "x"])
        assert parser.parse_args(["compare", "--out", "x"]).replications is None

    def test_explicit_flag_wins(self):
        args = build_parser().parse_args(["compare", "--replications", "3", "--out", "x"])
        assert args.replications == 3


class TestArgumentErrors:
    def test_unknown_strategy_exits_with_usage_code(self):
        with pytest.raises(SystemExit) as raised:
            build_parser().parse_args(["simulate", "--strategy", "greedy", "--out", "x"])
        assert raised.value.code == 1

    def test_strategy_lists_are_split_on_commas(self):
        args = build_parser().parse_args(["compare", "--strategy", "pira, pure-4", "--out", "x"])
        assert args.strategy == ["pira", "pure-4"]

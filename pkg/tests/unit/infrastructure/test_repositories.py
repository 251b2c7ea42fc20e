import pytest

from pirasim.domain import MediaList, Period, Workload
from pirasim.domain.exceptions import CannotParseTraceFileException, CannotParseWorkloadFileException
from pirasim.infrastructure import parse_trace, parse_workload, write_trace, write_workload
from tests.helpers import make_video, series_traces


class TestParseTrace:
    def test_reads_a_well_formed_file(self, tmp_path):
        path = tmp_path / "peak.csv"
        path.write_text("# trace_id=t1 period=peak\ncdn_id,t_s,mbps\n1,0,10.5\n1,1,9\n1,2,12\n")

        traces = parse_trace(path)

        assert traces.trace_id == "t1"
        assert traces.period is Period.PEAK
        assert traces.trace_of(1).mbps == (10.5, 9.0, 12.0)

    def test_nonpositive_throughput_names_the_line(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("# trace_id=t1 period=peak\ncdn_id,t_s,mbps\n1,0,10\n1,1,0\n")

        with pytest.raises(CannotParseTraceFileException, match=":4:"):
            parse_trace(path)

    def test_gap_in_timestamps_is_an_error(self, tmp_path):
        path = tmp_path / "gap.csv"
        path.write_text("# trace_id=t1 period=peak\n1,0,10\n1,2,10\n")

        with pytest.raises(CannotParseTraceFileException, match="expected t_s=1"):
            parse_trace(path)

    def test_missing_header_is_an_error(self, tmp_path):
        path = tmp_path / "plain.csv"
        path.write_text("1,0,10\n")

        with pytest.raises(CannotParseTraceFileException, match=":1:"):
            parse_trace(path)

    def test_unknown_period_is_an_error(self, tmp_path):
        path = tmp_path / "period.csv"
        path.write_text("# trace_id=t1 period=noon\n1,0,10\n")

        with pytest.raises(CannotParseTraceFileException):
            parse_trace(path)

    def test_misaligned_pan_cdns_are_an_error(self, tmp_path):
        path = tmp_path / "misaligned.csv"
        path.write_text("# trace_id=t1 period=peak\n1,0,10\n1,1,10\n2,0,10\n")

        with pytest.raises(CannotParseTraceFileException):
            parse_trace(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            parse_trace(tmp_path / "absent.csv")

    def test_written_traces_read_back_unchanged(self, tmp_path):
        traces = series_traces({1: [10.1, 9.25, 3.0], 2: [1e-3, 7.0, 8.5]}, period=Period.EVENING_PEAK)
        assert parse_trace(write_trace(tmp_path / "out" / "traces.csv", traces)) == traces


class TestParseWorkload:
    def test_reads_a_well_formed_file(self, tmp_path):
        path = tmp_path / "session.csv"
        path.write_text("id,duration_s,bitrate_mbps,watch_s,cached_on\na,12,2,5,1|3\nb,40,4,60,1\n")

        workload = parse_workload(path)

        assert workload.workload_id == "session"
        assert len(workload) == 2
        assert workload.media.video_at(0).cached_on == frozenset({1, 3})
        assert workload.media.watch_of(1) == 60.0
        assert workload.swipe_count == 1

    def test_bad_row_names_the_line(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("id,duration_s,bitrate_mbps,watch_s,cached_on\na,12,2,5,1\nb,-4,2,5,1\n")

        with pytest.raises(CannotParseWorkloadFileException, match=":3:"):
            parse_workload(path)

    def test_non_positive_watch_is_an_error(self, tmp_path):
        path = tmp_path / "watch.csv"
        path.write_text("id,duration_s,bitrate_mbps,watch_s,cached_on\na,12,2,0,1\n")

        with pytest.raises(CannotParseWorkloadFileException, match=":2:"):
            parse_workload(path)

    def test_wrong_header_is_an_error(self, tmp_path):
        path = tmp_path / "header.csv"
        path.write_text("id,duration\na,12\n")

        with pytest.raises(CannotParseWorkloadFileException, match=":1:"):
            parse_workload(path)

    def test_duplicate_ids_are_an_error(self, tmp_path):
        path = tmp_path / "dup.csv"
        path.write_text("id,duration_s,bitrate_mbps,watch_s,cached_on\na,12,2,5,1\na,12,2,5,1\n")

        with pytest.raises(CannotParseWorkloadFileException):
            parse_workload(path)

    def test_written_workload_reads_back_unchanged(self, tmp_path):
        media = MediaList([make_video("a", 12.5, 2.0, {1, 4}), make_video("b", 7.0, 8.0, {1})], [3.25, 14.0])
        path = write_workload(tmp_path / "w.csv", Workload(media))
        assert parse_workload(path).media == media

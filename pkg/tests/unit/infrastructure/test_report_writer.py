import csv
import json

import numpy as np

from pirasim.infrastructure import write_json, write_rows


class TestWriteJson:
    def test_sorted_keys_and_trailing_newline(self, tmp_path):
        path = write_json(tmp_path / "nested" / "summary.json", {"b": 1, "a": {"d": 2.5, "c": [1, 2]}})
        text = path.read_text()
        assert text.endswith("\n")
        assert text.index('"a"') < text.index('"b"')
        assert json.loads(text) == {"a": {"c": [1, 2], "d": 2.5}, "b": 1}


class TestWriteRows:
    def test_writes_the_requested_columns_only(self, tmp_path):
        rows = [{"strategy": "pira", "seed": 1, "utility": 0.1, "extra": "x"}]
        path = write_rows(tmp_path / "episodes.csv", rows, columns=["strategy", "seed", "utility"])
        with path.open(newline="") as handle:
            assert list(csv.reader(handle)) == [["strategy", "seed", "utility"], ["pira", "1", "0.1"]]

    def test_floats_keep_full_precision(self, tmp_path):
        path = write_rows(tmp_path / "episodes.csv", [{"utility": 1 / 3}], columns=["utility"])
        assert path.read_text().splitlines()[1] == repr(1 / 3)

    def test_numpy_scalars_are_written_as_plain_numbers(self, tmp_path):
        rows = [{"offset_s": np.int64(12), "utility": np.float64(0.004355826293328744)}]
        path = write_rows(tmp_path / "episodes.csv", rows, columns=["offset_s", "utility"])

        with path.open(newline="") as handle:
            assert list(csv.reader(handle))[1] == ["12", "0.004355826293328744"]
        assert "np." not in path.read_text()


class TestWriteJsonNumpy:
    def test_numpy_scalars_serialize(self, tmp_path):
        path = write_json(tmp_path / "timing.json", {"count": np.int64(3), "p99_s": np.float64(0.5)})
        assert json.loads(path.read_text()) == {"count": 3, "p99_s": 0.5}

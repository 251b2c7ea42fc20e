"""Machine-readable reports: one JSON summary document plus per-episode CSV rows."""

import csv
import json
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

EPISODE_COLUMNS = [
    "period",
    "strategy",
    "seed",
    "trace_id",
    "offset_s",
    "videos",
    "duration_s",
    "rebuffer_ratio",
    "mean_startup_s",
    "total_cost",
    "qoe",
    "utility",
    "decisions",
    "scored_sequences",
    "fallbacks",
]


def write_json(path: str | Path, document: Mapping[str, Any]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as handle:
        json.dump(document, handle, indent=2, sort_keys=True, default=_plain)
        handle.write("\n")
    return path


def write_rows(path: str | Path, rows: Iterable[Mapping[str, Any]], columns: Sequence[str] = EPISODE_COLUMNS) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=list(columns), extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({column: _format(row.get(column)) for column in columns})
    return path


def _plain(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def _format(value: Any) -> Any:
    # numpy scalars subclass float but repr as np.float64(...)
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float):
        return repr(value)
    return value

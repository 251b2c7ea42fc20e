"""Trace files: a ``# trace_id=<id> period=<label>`` header line, then ``cdn_id,t_s,mbps`` rows."""

import csv
from pathlib import Path
from typing import Dict, List, Tuple

from pirasim.domain import Period, ThroughputTrace, TraceFile
from pirasim.domain.exceptions import (
    CannotCreateThroughputTraceWithInvalidSamplesException,
    CannotParseTraceFileException,
)

COLUMNS = ["cdn_id", "t_s", "mbps"]


def _parse_header(line: str, path: Path) -> Tuple[str, Period]:
    fields = dict(item.split("=", 1) for item in line.lstrip("#").split() if "=" in item)
    try:
        return fields["trace_id"], Period(fields["period"])
    except (KeyError, ValueError) as e:
        raise CannotParseTraceFileException(
            message=f"{path}:1: expected '# trace_id=<id> period=<off-peak|peak|evening-peak>'"
        ) from e


def parse_trace(path: str | Path) -> TraceFile:
    """
    Read and validate a trace file.

    Raises:
        FileNotFoundError: If ``path`` does not exist.
        CannotParseTraceFileException: With the offending line number.
    """
    path = Path(path)
    with path.open("r", encoding="utf-8", newline="") as handle:
        lines = handle.read().splitlines()
    if not lines or not lines[0].startswith("#"):
        raise CannotParseTraceFileException(message=f"{path}:1: missing '# trace_id=... period=...' header")
    trace_id, period = _parse_header(lines[0], path)

    samples: Dict[int, List[float]] = {}
    first_second: Dict[int, float] = {}
    reader = csv.reader(lines[1:])
    for line_number, row in enumerate(reader, start=2):
        if not row or row[0].startswith("#"):
            continue
        if row == COLUMNS:
            continue
        if len(row) != 3:
            raise CannotParseTraceFileException(message=f"{path}:{line_number}: expected 3 columns, got {len(row)}")
        try:
            pan_cdn_id, t_s, mbps = int(row[0]), float(row[1]), float(row[2])
        except ValueError as e:
            raise CannotParseTraceFileException(message=f"{path}:{line_number}: {e}") from e
        if mbps <= 0:
            raise CannotParseTraceFileException(message=f"{path}:{line_number}: throughput must be positive")

        window = samples.setdefault(pan_cdn_id, [])
        expected = first_second.setdefault(pan_cdn_id, t_s) + len(window)
        if t_s != expected:
            raise CannotParseTraceFileException(
                message=f"{path}:{line_number}: pan-CDN{pan_cdn_id} expected t_s={expected:g}, got {t_s:g}"
            )
        window.append(mbps)

    if not samples:
        raise CannotParseTraceFileException(message=f"{path}: no samples")
    if len(set(first_second.values())) != 1:
        raise CannotParseTraceFileException(message=f"{path}: pan-CDN traces start at different seconds")
    try:
        return TraceFile(trace_id, period, [ThroughputTrace.of(k, values) for k, values in samples.items()])
    except CannotCreateThroughputTraceWithInvalidSamplesException as e:
        raise CannotParseTraceFileException(message=f"{path}: {e.message}") from e


def write_trace(path: str | Path, traces: TraceFile) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as handle:
        handle.write(f"# trace_id={traces.trace_id} period={traces.period.value}\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(COLUMNS)
        for pan_cdn_id in traces.pan_cdn_ids:
            for second, mbps in enumerate(traces.trace_of(pan_cdn_id).mbps):
                writer.writerow([pan_cdn_id, second, repr(mbps)])
    return path

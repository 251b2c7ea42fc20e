"""Workload files: ``id,duration_s,bitrate_mbps,watch_s,cached_on`` rows, ``cached_on`` as ``1|2|4``."""

import csv
from pathlib import Path

from pirasim.domain import MediaList, VideoSpec, Workload
from pirasim.domain.exceptions import CannotParseWorkloadFileException, DomainException

COLUMNS = ["id", "duration_s", "bitrate_mbps", "watch_s", "cached_on"]


def parse_workload(path: str | Path, chunk_duration_s: float = 4.0) -> Workload:
    """
    Read a workload file into a media list starting at its first entry.

    Raises:
        FileNotFoundError: If ``path`` does not exist.
        CannotParseWorkloadFileException: With the offending line number.
    """
    path = Path(path)
    with path.open("r", encoding="utf-8", newline="") as handle:
        rows = list(csv.reader(handle))
    if not rows or [column.strip() for column in rows[0]] != COLUMNS:
        raise CannotParseWorkloadFileException(message=f"{path}:1: expected header {','.join(COLUMNS)}")

    videos = []
    watches = []
    for line_number, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != len(COLUMNS):
            raise CannotParseWorkloadFileException(
                message=f"{path}:{line_number}: expected {len(COLUMNS)} columns, got {len(row)}"
            )
        try:
            video = VideoSpec(
                id=row[0],
                duration_s=float(row[1]),
                bitrate_mbps=float(row[2]),
                chunk_duration_s=chunk_duration_s,
                cached_on=frozenset(int(item) for item in row[4].split("|") if item),
            )
            watch = float(row[3])
        except ValueError as e:
            raise CannotParseWorkloadFileException(message=f"{path}:{line_number}: {e}") from e
        except DomainException as e:
            raise CannotParseWorkloadFileException(message=f"{path}:{line_number}: {e.message}") from e
        if watch <= 0:
            raise CannotParseWorkloadFileException(message=f"{path}:{line_number}: watch_s must be positive")
        videos.append(video)
        watches.append(watch)

    try:
        media = MediaList(videos, watches)
    except DomainException as e:
        raise CannotParseWorkloadFileException(message=f"{path}: {e.message}") from e
    return Workload(media, workload_id=path.stem)


def write_workload(path: str | Path, workload: Workload) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    media = workload.media
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(COLUMNS)
        for index, video in enumerate(media.videos):
            writer.writerow(
                [
                    video.id,
                    repr(video.duration_s),
                    repr(video.bitrate_mbps),
                    repr(media.watch_of(index)),
                    "|".join(str(pan_cdn_id) for pan_cdn_id in sorted(video.cached_on)),
                ]
            )
    return path

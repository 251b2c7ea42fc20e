"""Buffer evolution of the shared player buffer for one downloaded range.

Every function is pure; all buffers are seconds of content and are clamped at 0.
"""

from typing import Tuple

from pirasim.domain.buffer_ledger import BufferLedger
from pirasim.domain.exceptions import (
    CannotAdvanceBufferForUnknownVideoException,
    CannotAdvanceBufferWithNonPositiveThroughputException,
    CannotAdvancePrefetchForViewedVideoException,
)
from pirasim.domain.numeric import positive
from pirasim.domain.range_bytes import RangeBytes
from pirasim.domain.range_decision import RangeDecision
from pirasim.domain.video_spec import VideoSpec


def download_time(video: VideoSpec, range_duration_s: float, avg_throughput_mbps: float) -> float:
    if avg_throughput_mbps <= 0:
        raise CannotAdvanceBufferWithNonPositiveThroughputException()
    return RangeBytes.for_range(video, range_duration_s).size_megabits / avg_throughput_mbps


def prefetch_overflow_s(ledger: BufferLedger, video_id: str, range_duration_s: float) -> float:
    """Seconds of a prefetched range that do not fit under the player cap, over pre-step buffers."""
    total = ledger.buffer_of(video_id) + ledger.others_total_s(video_id) + range_duration_s
    return positive(total - ledger.player_cap_s)


def _require_known(ledger: BufferLedger, video_id: str) -> None:
    if video_id not in ledger:
        raise CannotAdvanceBufferForUnknownVideoException(message=f"Video '{video_id}' is not in the player buffer.")


def advance_buffer_current(
    ledger: BufferLedger, video: VideoSpec, dec: RangeDecision, avg_throughput_mbps: float
) -> Tuple[BufferLedger, float, float]:
    """
    Download a range of the video being watched.

    Playback drains the buffer while the range is in flight; if the landed range
    would overflow the player cap the player waits before appending it.

    Args:
        ledger: Buffers before the request.
        video: The viewed video (``dec.video_id``).
        dec: The range being downloaded.
        avg_throughput_mbps: Average throughput over the download.

    Returns:
        Tuple[BufferLedger, float, float]: updated ledger, download time, wait time.

    Raises:
        CannotAdvanceBufferWithNonPositiveThroughputException: If the throughput is not positive.
        CannotAdvanceBufferForUnknownVideoException: If the video has no buffer entry.
    """
    if dec.video_id != video.id:
        raise CannotAdvanceBufferForUnknownVideoException(
            message=f"Decision targets '{dec.video_id}' but the viewed video is '{video.id}'."
        )
    _require_known(ledger, video.id)
    download_time_s = download_time(video, dec.range_duration_s, avg_throughput_mbps)

    inner = positive(ledger.buffer_of(video.id) - download_time_s)
    wait_time_s = positive(inner + ledger.others_total_s(video.id) + dec.range_duration_s - ledger.player_cap_s)
    new_buffer = positive(inner + dec.range_duration_s - wait_time_s)

    return ledger.with_buffers({video.id: new_buffer}), download_time_s, wait_time_s


def advance_buffer_prefetch(
    ledger: BufferLedger, viewing: str, video: VideoSpec, dec: RangeDecision, avg_throughput_mbps: float
) -> Tuple[BufferLedger, float, float]:
    """
    Download a range of a video further down the list while ``viewing`` plays.

    The overflow is measured over the pre-step buffers; the part of the range that
    does not fit under the cap is discarded rather than waited for.

    Returns:
        Tuple[BufferLedger, float, float]: updated ledger, download time, overflow.
    """
    if dec.video_id == viewing:
        raise CannotAdvancePrefetchForViewedVideoException()
    if dec.video_id != video.id:
        raise CannotAdvanceBufferForUnknownVideoException(
            message=f"Decision targets '{dec.video_id}' but the prefetched video is '{video.id}'."
        )
    _require_known(ledger, video.id)
    _require_known(ledger, viewing)
    download_time_s = download_time(video, dec.range_duration_s, avg_throughput_mbps)

    prefetched = ledger.buffer_of(video.id)
    wait_time_s = prefetch_overflow_s(ledger, video.id, dec.range_duration_s)
    updates = {
        video.id: positive(prefetched + dec.range_duration_s - wait_time_s),
        viewing: positive(ledger.buffer_of(viewing) - download_time_s),
    }

    return ledger.with_buffers(updates), download_time_s, wait_time_s


def rebuffer_time(buffer_s: float, download_time_s: float) -> float:
    return positive(download_time_s - buffer_s)


def startup_delay(buffer_s: float, tau_st_s: float, download_time_s: float) -> float:
    if buffer_s >= tau_st_s:
        return 0.0
    return download_time_s

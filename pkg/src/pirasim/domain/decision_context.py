from dataclasses import dataclass
from typing import Tuple

from pirasim.domain.download_target import DownloadTarget
from pirasim.domain.i_throughput_forecast import IThroughputForecast
from pirasim.domain.media_list import MediaList
from pirasim.domain.pan_cdn_catalog import PanCdnCatalog
from pirasim.domain.session_state import SessionState


@dataclass(frozen=True)
class DecisionContext:
    """Everything a strategy may look at when the downloader goes idle."""

    now_s: float
    media: MediaList
    session: SessionState
    download_sequence: Tuple[DownloadTarget, ...]
    catalog: PanCdnCatalog
    # ground-truth link view; only the oracle reads it
    ground_truth: IThroughputForecast | None = None

    @property
    def target(self) -> DownloadTarget:
        return self.download_sequence[0]

    @property
    def viewed_buffer_s(self) -> float:
        return self.session.viewed_buffer_s(self.media)

from dataclasses import dataclass


@dataclass(frozen=True)
class DownloadTarget:
    """An entry of the download sequence: fetch ``video_id`` until ``target_downloaded_s``."""

    video_index: int
    video_id: str
    target_downloaded_s: float

    def to_dict(self) -> dict:
        return {
            "video_index": self.video_index,
            "video_id": self.video_id,
            "target_downloaded_s": self.target_downloaded_s,
        }

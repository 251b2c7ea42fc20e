"""Synthetic media lists: short-video duration mix, lognormal watch times, partial caching."""

import math

import numpy as np

from pirasim.domain import MediaList, VideoSpec, Workload, WorkloadConfig


def generate_workload(cfg: WorkloadConfig) -> Workload:
    """
    Draw a media list and its swipe schedule.

    Durations mix uniform short and long videos; watch times are lognormal around
    ``watch_median_s`` clipped to [1 s, 2 × duration]; the cheapest-to-reach origin
    (lowest pan-CDN id) caches every video, others with their own probability.
    """
    rng = np.random.default_rng(cfg.seed)
    count = cfg.video_count

    is_short = rng.random(count) < cfg.short_fraction
    short = rng.uniform(cfg.short_range_s[0], cfg.short_range_s[1], count)
    long = rng.uniform(cfg.long_range_s[0], cfg.long_range_s[1], count)
    durations = np.where(is_short, short, long)
    bitrates = rng.choice(np.asarray(cfg.bitrates_mbps, dtype=np.float64), count)
    watches = rng.lognormal(math.log(cfg.watch_median_s), cfg.watch_sigma, count)
    watches = np.clip(watches, 1.0, 2.0 * durations)

    pan_cdn_ids = cfg.pan_cdn_ids
    probabilities = np.asarray([cfg.cache_probability[pan_cdn_id] for pan_cdn_id in pan_cdn_ids])
    cached = rng.random((count, len(pan_cdn_ids))) < probabilities
    cached[:, 0] = True

    videos = [
        VideoSpec(
            id=f"v{index:05d}",
            duration_s=float(durations[index]),
            bitrate_mbps=float(bitrates[index]),
            chunk_duration_s=cfg.chunk_duration_s,
            cached_on=frozenset(pan_cdn_ids[k] for k in np.flatnonzero(cached[index])),
        )
        for index in range(count)
    ]
    return Workload(MediaList(videos, watches.tolist()), workload_id=f"workload-{cfg.seed}")

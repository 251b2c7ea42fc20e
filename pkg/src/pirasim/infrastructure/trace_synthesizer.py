"""
Synthetic pan-CDN throughput traces.

Each pan-CDN gets its period mean times a mean-one lognormal factor driven by a
stationary AR(1) process, which yields fluctuations over tens of seconds.
"""

import numpy as np
from scipy.signal import lfilter

from pirasim.domain import SynthConfig, ThroughputTrace, TraceFile


def _ar1(rng: np.random.Generator, length: int, ar_coeff: float) -> np.ndarray:
    shocks = rng.standard_normal(length)
    shocks[1:] *= np.sqrt(1.0 - ar_coeff**2)
    return lfilter([1.0], [1.0, -ar_coeff], shocks)


def synthesize_traces(cfg: SynthConfig) -> TraceFile:
    """Seeded and reproducible: the same config always yields the same traces."""
    rng = np.random.default_rng(cfg.seed)
    traces = []
    for pan_cdn_id, mean in cfg.means().items():
        noise = _ar1(rng, cfg.length_s, cfg.ar_coeff)
        factor = np.exp(cfg.noise_sigma * noise - cfg.noise_sigma**2 / 2.0)
        traces.append(ThroughputTrace.of(pan_cdn_id, (mean * factor).tolist()))
    return TraceFile(cfg.trace_id, cfg.period, traces)

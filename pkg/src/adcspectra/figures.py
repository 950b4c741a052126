"""Numeric stand-ins for the qualitative features of the noise figures.

The thresholds used with these measures (uniform spectrum: max <= 5x median;
even harmonics: >= 40 dB under their odd neighbours; periodic trace:
normalized autocorrelation >= 0.99 at one signal period) are proxies chosen
for this package, not values taken from measured data.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "normalized_autocorrelation",
    "uniformity_ratio",
    "even_harmonic_margin_db",
    "UNIFORM_MAX_RATIO",
    "EVEN_HARMONIC_MARGIN_DB",
    "PERIODIC_MIN_CORRELATION",
    "APERIODIC_MAX_CORRELATION",
]

UNIFORM_MAX_RATIO = 5.0
EVEN_HARMONIC_MARGIN_DB = 40.0
PERIODIC_MIN_CORRELATION = 0.99
APERIODIC_MAX_CORRELATION = 0.5


def normalized_autocorrelation(x, lag: int, min_overlap: int = 16) -> float:
    """Correlation between ``x[:-lag]`` and ``x[lag:]`` scaled so lag 0 gives 1.

    Returns NaN when the overlap is shorter than ``min_overlap`` samples or
    carries no energy; the value is then not meaningful.
    """
    x = np.asarray(x, dtype=float)
    if lag < 0:
        raise ValueError("lag must be >= 0")
    if len(x) - lag < min_overlap:
        return math.nan
    a, b = x[: len(x) - lag], x[lag:]
    denom = math.sqrt(float(np.dot(a, a)) * float(np.dot(b, b)))
    if denom == 0:
        return math.nan
    return float(np.dot(a, b)) / denom


def uniformity_ratio(amplitudes) -> float:
    """Largest over median amplitude across bins 2..N/2 of a full-length spectrum."""
    amplitudes = np.asarray(amplitudes, dtype=float)
    band = amplitudes[2 : len(amplitudes) // 2 + 1]
    med = float(np.median(band))
    return math.inf if med == 0 else float(band.max()) / med


def even_harmonic_margin_db(amplitudes, periods_in_record: int = 1) -> float:
    """Smallest gap (dB) between an even harmonic and its quieter odd neighbour.

    Harmonic h sits on bin ``h * periods_in_record``; harmonics up to N/2 are
    considered. Returns +inf when every even harmonic is exactly zero.
    """
    amplitudes = np.asarray(amplitudes, dtype=float)
    m = int(periods_in_record)
    top = (len(amplitudes) // 2) // m
    worst = math.inf
    for h in range(2, top, 2):
        even = amplitudes[h * m]
        odd = min(amplitudes[(h - 1) * m], amplitudes[(h + 1) * m])
        if even == 0:
            continue
        if odd == 0:
            return -math.inf
        worst = min(worst, 20.0 * math.log10(odd / even))
    return worst

"""DFT with 2/N scaling, plus amplitude and phase spectra.

With the 2/N factor a unit-amplitude sine on an exact bin shows up with
magnitude 1. The same factor is applied to every bin, so the DC bin (and the
Nyquist bin for even N) reads twice the physical amplitude.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .signalgen import SampledSignal

__all__ = [
    "UNDEFINED_PHASE",
    "Spectrum",
    "dft",
    "idft",
    "amplitude_spectrum",
    "phase_spectrum",
    "default_amplitude_floor",
    "wrap_phase",
]

UNDEFINED_PHASE = float("nan")

# rows per block for the direct transform; bounds memory at ~BLOCK*N complex
_BLOCK = 256


@dataclass(frozen=True)
class Spectrum:
    bins: np.ndarray
    sample_rate_hz: float
    num_samples: int

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(self.num_samples) * self.sample_rate_hz / self.num_samples

    def __len__(self):
        return self.num_samples


def wrap_phase(angle):
    """Map angles into (-pi, pi]."""
    wrapped = np.pi - np.mod(np.pi - np.asarray(angle, dtype=float), 2.0 * np.pi)
    return float(wrapped) if np.ndim(wrapped) == 0 else wrapped


def _direct(x: np.ndarray) -> np.ndarray:
    n_total = len(x)
    n = np.arange(n_total)
    # index twiddles by (k*n mod N) so large k*n products never hit sin/cos
    twiddle = np.exp(-2j * np.pi * n / n_total)
    out = np.empty(n_total, dtype=complex)
    for start in range(0, n_total, _BLOCK):
        k = np.arange(start, min(start + _BLOCK, n_total))
        out[k] = twiddle[np.outer(k, n) % n_total] @ x
    return out


def dft(signal: SampledSignal, method: str = "direct") -> Spectrum:
    """Scaled DFT ``(2/N) sum_n x[n] exp(-j 2 pi n k / N)`` for every k.

    ``method="direct"`` sums every bin explicitly and works for any N.
    ``method="fft"`` goes through numpy's FFT; the two agree to ~1e-13.
    """
    x = np.asarray(signal.samples, dtype=float)
    n_total = len(x)
    if n_total < 2:
        raise ValueError("need at least 2 samples")
    if method == "direct":
        raw = _direct(x)
    elif method == "fft":
        raw = np.fft.fft(x)
    else:
        raise ValueError(f"unknown method {method!r}")
    return Spectrum(raw * (2.0 / n_total), signal.sample_rate_hz, n_total)


def idft(sp: Spectrum) -> SampledSignal:
    """Inverse of :func:`dft` (real part), for round-trip checks."""
    n_total = sp.num_samples
    x = np.fft.ifft(np.asarray(sp.bins) * (n_total / 2.0)).real
    return SampledSignal(x, sp.sample_rate_hz)


def amplitude_spectrum(sp: Spectrum) -> np.ndarray:
    return np.abs(sp.bins)


def default_amplitude_floor(sp: Spectrum) -> float:
    """Bins below this magnitude are numerically empty."""
    return 1e3 * np.finfo(float).eps * float(np.max(np.abs(sp.bins), initial=0.0))


def phase_spectrum(sp: Spectrum, amplitude_floor: float | None = None) -> np.ndarray:
    """Four-quadrant phase of each bin in (-pi, pi].

    The angle is that of ``Re + j Im``, which resolves the quadrant of
    ``arccot(Re / Im)``; a unit sine with zero phase sits at -pi/2. Bins whose
    magnitude is below ``amplitude_floor``, or exactly zero, report ``UNDEFINED_PHASE`` (NaN).
    """
    if amplitude_floor is None:
        amplitude_floor = default_amplitude_floor(sp)
    if amplitude_floor < 0:
        raise ValueError("amplitude_floor must be >= 0")
    bins = np.asarray(sp.bins)
    phase = wrap_phase(np.angle(bins))
    phase = np.atleast_1d(phase)
    empty = (np.abs(bins) < amplitude_floor) | (bins == 0)
    return np.where(empty, UNDEFINED_PHASE, phase)

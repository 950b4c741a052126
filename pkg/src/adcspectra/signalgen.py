"""Test-signal synthesis and sampling-coherence classification.

Signals are sums of sines (not cosines), so a unit tone with zero initial
phase lands on the fundamental DFT bin with angle -pi/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "AliasingError",
    "ToneSpec",
    "SignalSpec",
    "SamplingSpec",
    "SampledSignal",
    "CoherenceReport",
    "synthesize",
    "num_samples_for_interval",
    "coherence_check",
]

# how close sample_rate * interval must be to an integer to be rounded to it
_INTEGER_GUARD = 1e-9


class AliasingError(ValueError):
    """A tone sits at or above the Nyquist frequency."""


@dataclass(frozen=True)
class ToneSpec:
    amplitude: float
    frequency_hz: float
    phase_rad: float = 0.0

    def __post_init__(self):
        if not self.amplitude >= 0:
            raise ValueError(f"amplitude must be >= 0, got {self.amplitude}")
        if not self.frequency_hz > 0:
            raise ValueError(f"frequency_hz must be > 0, got {self.frequency_hz}")


@dataclass(frozen=True)
class SignalSpec:
    tones: tuple[ToneSpec, ...]
    dc_offset: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "tones", tuple(self.tones))
        if not self.tones:
            raise ValueError("a signal needs at least one tone")

    @classmethod
    def sine(cls, amplitude=1.0, frequency_hz=50.0, phase_rad=0.0, dc_offset=0.0):
        """Single-tone shorthand."""
        return cls((ToneSpec(amplitude, frequency_hz, phase_rad),), dc_offset)


@dataclass(frozen=True)
class SamplingSpec:
    sample_rate_hz: float
    num_samples: int

    def __post_init__(self):
        if not self.sample_rate_hz > 0:
            raise ValueError(f"sample_rate_hz must be > 0, got {self.sample_rate_hz}")
        if int(self.num_samples) != self.num_samples or self.num_samples < 2:
            raise ValueError(f"num_samples must be an integer >= 2, got {self.num_samples}")

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.num_samples) / self.sample_rate_hz


@dataclass(frozen=True)
class SampledSignal:
    samples: np.ndarray
    sample_rate_hz: float

    def __post_init__(self):
        arr = np.asarray(self.samples, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)

    def __len__(self):
        return len(self.samples)

    @property
    def times(self) -> np.ndarray:
        return np.arange(len(self.samples)) / self.sample_rate_hz


@dataclass(frozen=True)
class CoherenceReport:
    samples_per_period: float
    samples_per_period_is_integer: bool
    periods_in_record: float
    periods_in_record_is_integer: bool

    @property
    def coherent(self) -> bool:
        """True when the record holds a whole number of signal periods."""
        return self.periods_in_record_is_integer


def _tone(tone: ToneSpec, n: np.ndarray, fs: float) -> np.ndarray:
    # reduce to whole cycles first so long records keep full phase accuracy
    cycles = np.mod(tone.frequency_hz * n / fs, 1.0)
    return tone.amplitude * np.sin(2.0 * np.pi * cycles + tone.phase_rad)


def synthesize(spec: SignalSpec, sampling: SamplingSpec) -> SampledSignal:
    """Sample ``dc + sum_i A_i sin(2 pi f_i n / fs + phi_i)`` for n = 0..N-1.

    Raises AliasingError if any tone is at or above fs/2.
    """
    fs = sampling.sample_rate_hz
    for tone in spec.tones:
        if tone.frequency_hz >= fs / 2:
            raise AliasingError(
                f"tone at {tone.frequency_hz} Hz is not below Nyquist ({fs / 2} Hz)"
            )
    n = np.arange(sampling.num_samples, dtype=float)
    x = np.full(sampling.num_samples, float(spec.dc_offset))
    for tone in spec.tones:
        x = x + _tone(tone, n, fs)
    return SampledSignal(x, fs)


def num_samples_for_interval(sample_rate_hz: float, interval_s: float) -> int:
    """Number of samples that fit in a measurement interval.

    Rule: ``floor(fs * T)``, except that a product within 1e-9 of an integer
    is rounded to it, so 10000 Hz * 0.0201 s gives 201 despite the binary
    representation of 0.0201.
    """
    if not sample_rate_hz > 0 or not interval_s > 0:
        raise ValueError("sample rate and interval must both be positive")
    product = sample_rate_hz * interval_s
    nearest = round(product)
    n = nearest if abs(product - nearest) <= _INTEGER_GUARD else math.floor(product)
    if n < 2:
        raise ValueError(
            f"{sample_rate_hz} Hz over {interval_s} s gives {n} samples; need at least 2"
        )
    return int(n)


def _is_integer(value: float, tol: float) -> bool:
    return abs(value - round(value)) <= tol


def coherence_check(
    signal_freq_hz: float, sample_rate_hz: float, num_samples: int, tol: float = 1e-9
) -> CoherenceReport:
    """Classify a tone/sample-rate/record-length combination.

    Two separate tests are reported: whether fs is an integer multiple of f,
    and whether the record spans an integer number of signal periods.
    """
    if tol < 0:
        raise ValueError("tol must be >= 0")
    spp = sample_rate_hz / signal_freq_hz
    periods = num_samples * signal_freq_hz / sample_rate_hz
    return CoherenceReport(spp, _is_integer(spp, tol), periods, _is_integer(periods, tol))


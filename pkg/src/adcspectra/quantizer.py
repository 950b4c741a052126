"""Ideal mid-tread ADC model.

Codes follow ``D = round((x - offset) / q)`` with ties rounded away from
zero, then clamped to the converter's code range. The quantization error is
``y - x`` where ``y = D * q + offset`` is the output referred to the input.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .signalgen import SampledSignal

__all__ = [
    "Transfer",
    "Polarity",
    "AdcConfig",
    "QuantizedRecord",
    "code",
    "quantize",
    "sign_model_noise",
    "effective_bits",
]


class Transfer(str, enum.Enum):
    BIPOLAR = "bipolar"
    UNIPOLAR = "unipolar"


class Polarity(str, enum.Enum):
    BIPOLAR_SIGNAL = "bipolar_signal"
    UNIPOLAR_SIGNAL = "unipolar_signal"


@dataclass(frozen=True)
class AdcConfig:
    """Converter resolution, full-scale range and transfer polarity.

    A bipolar converter uses signed codes centred on 0 V, so its range must be
    symmetric about zero. A unipolar converter puts code 0 at ``v_min``.
    """

    bits: int = 12
    v_min: float = -1.0
    v_max: float = 1.0
    transfer: Transfer = Transfer.BIPOLAR

    def __post_init__(self):
        object.__setattr__(self, "transfer", Transfer(self.transfer))
        if int(self.bits) != self.bits or not 2 <= self.bits <= 32:
            raise ValueError(f"bits must be an integer in [2, 32], got {self.bits}")
        if not (math.isfinite(self.v_min) and math.isfinite(self.v_max)):
            raise ValueError("full-scale limits must be finite")
        if not self.v_max > self.v_min:
            raise ValueError(f"v_max ({self.v_max}) must exceed v_min ({self.v_min})")
        if self.transfer is Transfer.BIPOLAR and not math.isclose(
            self.v_min, -self.v_max, rel_tol=1e-12
        ):
            raise ValueError(
                f"bipolar transfer needs a range symmetric about 0, got [{self.v_min}, {self.v_max})"
            )

    @property
    def q(self) -> float:
        """Quantization step (one LSB)."""
        return (self.v_max - self.v_min) / 2**self.bits

    @property
    def offset(self) -> float:
        return 0.0 if self.transfer is Transfer.BIPOLAR else float(self.v_min)

    @property
    def code_min(self) -> int:
        return -(2 ** (self.bits - 1)) if self.transfer is Transfer.BIPOLAR else 0

    @property
    def code_max(self) -> int:
        if self.transfer is Transfer.BIPOLAR:
            return 2 ** (self.bits - 1) - 1
        return 2**self.bits - 1


@dataclass(frozen=True)
class QuantizedRecord:
    codes: np.ndarray
    reconstructed: np.ndarray
    error: np.ndarray
    clipped_count: int

    def __len__(self):
        return len(self.codes)


def _round_half_away(u: np.ndarray) -> np.ndarray:
    whole = np.trunc(u)
    frac = u - whole  # exact in binary floating point
    return whole + np.where(np.abs(frac) >= 0.5, np.sign(u), 0.0)


def _codes(x: np.ndarray, cfg: AdcConfig) -> tuple[np.ndarray, np.ndarray]:
    """Clamped codes plus a mask of samples pushed past a rail."""
    if not np.all(np.isfinite(x)):
        raise ValueError("input contains non-finite values")
    q, offset = cfg.q, cfg.offset
    d = _round_half_away((x - offset) / q)
    # The division can round, so check the neighbouring codes using the error
    # exactly as it will be stored; the rounded code wins ties.
    best, best_err = d, np.abs((d * q + offset) - x)
    for step in (-1.0, 1.0):
        cand = d + step
        cand_err = np.abs((cand * q + offset) - x)
        better = cand_err < best_err
        best = np.where(better, cand, best)
        best_err = np.where(better, cand_err, best_err)
    clamped = np.clip(best, cfg.code_min, cfg.code_max)
    # landing within half a step (plus float resolution) of a rail is not clipping
    slack = 4 * np.spacing(np.maximum(np.abs(x), q))
    clipped = (clamped != best) & (np.abs((clamped * q + offset) - x) > 0.5 * q + slack)
    return clamped.astype(np.int64), clipped


def code(x: float, cfg: AdcConfig) -> int:
    """Digital code for a single input value."""
    d, _ = _codes(np.array([float(x)]), cfg)
    return int(d[0])


def quantize(signal: SampledSignal, cfg: AdcConfig) -> QuantizedRecord:
    x = np.asarray(signal.samples if isinstance(signal, SampledSignal) else signal, float)
    if x.size == 0:
        raise ValueError("cannot quantize an empty signal")
    codes, clipped = _codes(x, cfg)
    y = codes * cfg.q + cfg.offset
    return QuantizedRecord(codes, y, y - x, int(np.count_nonzero(clipped)))


def sign_model_noise(signal: SampledSignal, q: float, zero_tol: float | None = None) -> np.ndarray:
    """Extreme-value noise: +q/2 where the signal is >= 0, -q/2 where it is < 0.

    A sample that is zero up to rounding (``|x| <= zero_tol``) sits on a zero
    crossing; it takes the sign of the local slope, so the falling crossing of
    a coherently sampled sine is counted as negative. Flat zeros keep +q/2.
    ``zero_tol`` defaults to 1000 machine epsilons times the peak magnitude;
    pass 0 for the bare ``x >= 0`` split.
    """
    if not q > 0:
        raise ValueError("q must be positive")
    x = np.asarray(signal.samples if isinstance(signal, SampledSignal) else signal, float)
    positive = x >= 0
    if zero_tol is None:
        zero_tol = 1e3 * np.finfo(float).eps * (np.max(np.abs(x)) if x.size else 0.0)
    if x.size >= 2 and zero_tol > 0:
        on_crossing = np.abs(x) <= zero_tol
        if np.any(on_crossing):
            slope = np.gradient(x)
            positive = np.where(on_crossing, slope >= 0, positive)
    return np.where(positive, 0.5 * q, -0.5 * q)


def effective_bits(cfg: AdcConfig, signal_polarity: Polarity) -> float:
    """Usable resolution; a bipolar signal on a unipolar converter loses one bit."""
    signal_polarity = Polarity(signal_polarity)
    if cfg.transfer is Transfer.UNIPOLAR and signal_polarity is Polarity.BIPOLAR_SIGNAL:
        return float(cfg.bits - 1)
    return float(cfg.bits)

"""Closed-form quantization-noise bounds and DFT error expressions.

The bin-level expressions describe one period (m = 1) of a sine with zero
initial phase, sampled at an even number of points, with sign-model noise
(+q/2 on the positive half-cycle, -q/2 on the negative one). They are coded
as written, without folding in trigonometric simplifications, so each one can
be audited term by term; the tests check the simplifications separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .spectral import wrap_phase

__all__ = [
    "AnalyticDomainError",
    "OutsideValidityError",
    "UndefinedPhaseError",
    "AnalyticContext",
    "SpectrumErrorPrediction",
    "qnsd",
    "qnp_worst_case",
    "sign_model_spectrum",
    "sine_spectrum",
    "exact_amplitude",
    "combined_amplitude",
    "amplitude_rel_error",
    "phase_fundamental_exact",
    "phase_error_fundamental",
    "phase_harmonics",
    "predict",
]


class AnalyticDomainError(ValueError):
    """Bin index where a closed form is not defined (k = 0 or k >= N)."""


class OutsideValidityError(ValueError):
    """Context violates alpha = 0, m = 1, even N."""


class UndefinedPhaseError(ValueError):
    """Phase requested for a bin whose amplitude is exactly zero."""


@dataclass(frozen=True)
class AnalyticContext:
    q: float
    big_n: int
    x_m: float = 1.0
    alpha_rad: float = 0.0
    m_periods: int = 1

    def __post_init__(self):
        if not self.q > 0:
            raise ValueError("q must be positive")
        if int(self.big_n) != self.big_n or self.big_n < 2:
            raise ValueError("big_n must be an integer >= 2")
        if not self.x_m > 0:
            raise ValueError("x_m must be positive")
        if int(self.m_periods) != self.m_periods or self.m_periods < 1:
            raise ValueError("m_periods must be a positive integer")

    @property
    def valid(self) -> bool:
        return self.alpha_rad == 0 and self.m_periods == 1 and self.big_n % 2 == 0

    def violations(self) -> list[str]:
        out = []
        if self.alpha_rad != 0:
            out.append(f"initial phase must be 0 (got {self.alpha_rad})")
        if self.m_periods != 1:
            out.append(f"record must hold exactly one period (got {self.m_periods})")
        if self.big_n % 2:
            out.append(f"sample count must be even (got {self.big_n})")
        return out

    def require_valid(self):
        if not self.valid:
            raise OutsideValidityError("; ".join(self.violations()))


@dataclass(frozen=True)
class SpectrumErrorPrediction:
    k: int
    amplitude_abs: float
    amplitude_rel_error: float
    phase_rad: float
    phase_abs_error: float


def qnsd(q: float) -> float:
    """Quantization noise spectral density over the Nyquist band, q / (2 sqrt 3)."""
    if not q > 0:
        raise ValueError("q must be positive")
    return q / (2.0 * math.sqrt(3.0))


def qnp_worst_case(q: float) -> float:
    """Relative amplitude error when all noise power lands in one bin: q / sqrt 6."""
    if not q > 0:
        raise ValueError("q must be positive")
    return math.sqrt(2.0) * q / math.sqrt(12.0)


def _check_bin(ctx: AnalyticContext, k: int):
    if not 1 <= k < ctx.big_n:
        raise AnalyticDomainError(f"bin {k} outside 1..{ctx.big_n - 1}")


def sign_model_spectrum(ctx: AnalyticContext, k: int) -> complex:
    """Scaled DFT of sign-model noise at bin k."""
    ctx.require_valid()
    _check_bin(ctx, k)
    q, n = ctx.q, ctx.big_n
    mag = 2 * q * math.sin(0.5 * k * math.pi) ** 2 / (n * math.sin(k * math.pi / n))
    theta = math.pi * k * (n - 1) / n
    if k % 2 == 0:
        # sin^2(k pi / 2) is zero in exact arithmetic
        mag = 0.0
    return complex(mag * math.sin(theta), mag * math.cos(theta))


def sine_spectrum(ctx: AnalyticContext, k: int) -> complex:
    """Scaled DFT of the input sine: X_m (sin a - j cos a) at k = 1, zero elsewhere."""
    ctx.require_valid()
    if k != 1:
        return 0j
    a = ctx.alpha_rad
    return complex(ctx.x_m * math.sin(a), -ctx.x_m * math.cos(a))


def exact_amplitude(ctx: AnalyticContext, k: int) -> float:
    """|sine + noise| at bin k with no series truncation."""
    return abs(sine_spectrum(ctx, k) + sign_model_spectrum(ctx, k))


def combined_amplitude(ctx: AnalyticContext, k: int) -> float:
    """Output amplitude at bin k, first-order in q."""
    ctx.require_valid()
    _check_bin(ctx, k)
    q, n = ctx.q, ctx.big_n
    if k == 1:
        return ctx.x_m - (2 * q / (n * math.sin(math.pi / n))) * math.cos(math.pi * (n - 1) / n)
    return abs(sign_model_spectrum(ctx, k))


def amplitude_rel_error(ctx: AnalyticContext, k: int) -> float:
    """Amplitude error at bin k relative to X_m, first-order in q."""
    ctx.require_valid()
    _check_bin(ctx, k)
    q, n, x_m = ctx.q, ctx.big_n, ctx.x_m
    if k == 1:
        return -(2 * q / (n * x_m * math.sin(math.pi / n))) * math.cos(math.pi * (n - 1) / n)
    return abs(sign_model_spectrum(ctx, k)) / x_m


def phase_fundamental_exact(ctx: AnalyticContext) -> float:
    """Phase of the fundamental with noise included, before any series expansion.

    The arccot(Re / Im) form is resolved with a four-quadrant angle.
    """
    ctx.require_valid()
    q, n, x_m = ctx.q, ctx.big_n, ctx.x_m
    c = 2 * q / (n * math.sin(math.pi / n))
    re = x_m * math.cos(-math.pi / 2) + c * math.sin(math.pi * (n - 1) / n)
    im = x_m * math.sin(-math.pi / 2) + c * math.cos(math.pi * (n - 1) / n)
    return wrap_phase(math.atan2(im, re))


def phase_error_fundamental(ctx: AnalyticContext) -> float:
    """First-order phase error of the fundamental (radians)."""
    ctx.require_valid()
    q, n, x_m = ctx.q, ctx.big_n, ctx.x_m
    return 2 * q * math.sin(math.pi * (n - 1) / n) / (x_m * n * math.sin(math.pi / n))


def phase_harmonics(ctx: AnalyticContext, k: int, branch: str = "four_quadrant") -> float:
    """Phase of odd harmonic k >= 2, which is pure noise.

    ``branch="arccot"`` returns ``-pi/2 - pi k (N-1) / N`` wrapped; it is only
    fixed modulo pi, as arccot is. The default lifts it onto the four-quadrant
    branch used by :func:`~adcspectra.spectral.phase_spectrum` by adding pi.
    """
    ctx.require_valid()
    _check_bin(ctx, k)
    if k == 1:
        raise AnalyticDomainError("bin 1 is the fundamental; use phase_fundamental_exact")
    if k % 2 == 0:
        raise UndefinedPhaseError(f"even bin {k} has zero amplitude")
    n = ctx.big_n
    printed = -math.pi / 2 - math.pi * k * (n - 1) / n
    if branch == "arccot":
        return wrap_phase(printed)
    if branch == "four_quadrant":
        return wrap_phase(printed + math.pi)
    raise ValueError(f"unknown branch {branch!r}")


def predict(ctx: AnalyticContext, k: int) -> SpectrumErrorPrediction:
    """All closed-form quantities for bin k; even bins carry NaN phase."""
    amp = combined_amplitude(ctx, k)
    rel = amplitude_rel_error(ctx, k)
    if k == 1:
        err = phase_error_fundamental(ctx)
        phase = wrap_phase(ctx.alpha_rad - math.pi / 2 + err)
    elif k % 2:
        phase = err = phase_harmonics(ctx, k)
    else:
        phase = err = math.nan
    return SpectrumErrorPrediction(k, amp, rel, phase, err)

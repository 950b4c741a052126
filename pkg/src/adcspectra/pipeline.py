"""End-to-end runs: simulate a record, take its spectra, compare with the closed forms."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import errormodel as em
from .config import NoiseSource, RunConfig
from .quantizer import quantize, sign_model_noise
from .signalgen import SampledSignal, coherence_check, synthesize
from .spectral import Spectrum, amplitude_spectrum, dft, phase_spectrum, wrap_phase

__all__ = [
    "Record",
    "ErrorComparison",
    "simulate",
    "spectra",
    "analytic_context",
    "compare",
    "sweep",
    "SWEEP_PARAMETERS",
]

SWEEP_PARAMETERS = ("bits", "n_samples")


@dataclass(frozen=True)
class Record:
    """Input samples, ADC output referred to the input, and their difference."""

    t_s: np.ndarray
    x: np.ndarray
    y: np.ndarray
    err: np.ndarray
    sample_rate_hz: float
    clipped_count: int = 0

    def signal(self, which: str) -> SampledSignal:
        return SampledSignal(getattr(self, which), self.sample_rate_hz)


def simulate(cfg: RunConfig) -> Record:
    x = synthesize(cfg.signal, cfg.sampling)
    if cfg.noise_source is NoiseSource.SIGN_MODEL:
        err = sign_model_noise(x, cfg.adc.q)
        y = x.samples + err
        clipped = 0
    else:
        rec = quantize(x, cfg.adc)
        y, err, clipped = rec.reconstructed, rec.error, rec.clipped_count
    return Record(cfg.sampling.times, x.samples, y, err, x.sample_rate_hz, clipped)


def spectra(record: Record, method: str = "direct") -> dict[str, Spectrum]:
    """Scaled spectra of the error sequence and of the output signal."""
    return {
        "error": dft(record.signal("err"), method),
        "output": dft(record.signal("y"), method),
    }


def analytic_context(cfg: RunConfig) -> em.AnalyticContext:
    """Closed-form context for a config, rejecting anything outside its validity.

    The message names every violated condition.
    """
    problems = []
    if cfg.noise_source is not NoiseSource.SIGN_MODEL:
        problems.append("noise source must be sign-model")
    if len(cfg.signal.tones) != 1:
        problems.append("input must be a single tone")
    if cfg.signal.dc_offset != 0:
        problems.append("dc offset must be 0")
    tone = cfg.signal.tones[0]
    if not tone.amplitude > 0:
        problems.append("amplitude must be positive")
    report = coherence_check(tone.frequency_hz, cfg.sampling.sample_rate_hz, cfg.sampling.num_samples)
    periods = report.periods_in_record
    if not report.periods_in_record_is_integer:
        problems.append(f"record must hold a whole number of periods (holds {periods:.6g})")
        m = 1
    else:
        m = round(periods)
    if problems:
        raise em.OutsideValidityError("; ".join(problems))
    ctx = em.AnalyticContext(cfg.adc.q, cfg.sampling.num_samples, tone.amplitude, tone.phase_rad, m)
    ctx.require_valid()
    return ctx


@dataclass(frozen=True)
class ErrorComparison:
    """Per-bin simulated vs closed-form amplitude and phase, bins 1..N/2.

    The ``amplitude``/``phase`` columns compare complete values (the analytic
    amplitude is the exact modulus of sine plus noise). The ``*_error`` arrays
    hold the first-order error laws plotted as error-vs-bin curves.
    """

    k: np.ndarray
    freq_hz: np.ndarray
    simulated_amplitude: np.ndarray
    analytic_amplitude: np.ndarray
    amplitude_abs_dev: np.ndarray
    simulated_phase: np.ndarray
    analytic_phase: np.ndarray
    phase_abs_dev: np.ndarray
    simulated_rel_error: np.ndarray
    analytic_rel_error: np.ndarray
    simulated_phase_error: np.ndarray
    analytic_phase_error: np.ndarray
    context: em.AnalyticContext

    COLUMNS = (
        "k",
        "freq_hz",
        "simulated_amplitude",
        "analytic_amplitude",
        "amplitude_abs_dev",
        "simulated_phase",
        "analytic_phase",
        "phase_abs_dev",
    )
    ERROR_COLUMNS = (
        "k",
        "freq_hz",
        "simulated_rel_error",
        "analytic_rel_error",
        "simulated_phase_error",
        "analytic_phase_error",
    )

    def rows(self, columns=COLUMNS):
        return zip(*(getattr(self, c) for c in columns))

    @property
    def max_amplitude_dev(self) -> float:
        return float(np.max(self.amplitude_abs_dev))

    @property
    def max_phase_dev(self) -> float:
        return float(np.max(self.phase_abs_dev))

    @property
    def max_deviation(self) -> float:
        return max(self.max_amplitude_dev, self.max_phase_dev)


def _phase_dev(a: float, b: float) -> float:
    if math.isnan(a) and math.isnan(b):
        return 0.0
    if math.isnan(a) or math.isnan(b):
        return math.inf
    return abs(wrap_phase(a - b))


def _analytic_phase(ctx: em.AnalyticContext, k: int) -> float:
    if k == 1:
        return em.phase_fundamental_exact(ctx)
    try:
        return em.phase_harmonics(ctx, k)
    except em.UndefinedPhaseError:
        return math.nan


def compare(cfg: RunConfig, method: str = "direct") -> ErrorComparison:
    ctx = analytic_context(cfg)
    record = simulate(cfg)
    sp = dft(record.signal("y"), method)
    amp = amplitude_spectrum(sp)
    phase = phase_spectrum(sp)

    n = ctx.big_n
    k = np.arange(1, n // 2 + 1)
    ana_amp = np.array([em.exact_amplitude(ctx, int(i)) for i in k])
    ana_phase = np.array([_analytic_phase(ctx, int(i)) for i in k])
    sim_amp, sim_phase = amp[k], phase[k]
    phase_dev = np.array([_phase_dev(a, b) for a, b in zip(sim_phase, ana_phase)])

    x_m = ctx.x_m
    true_phase = wrap_phase(ctx.alpha_rad - math.pi / 2)
    sim_rel = sim_amp / x_m
    sim_rel[0] = (sim_amp[0] - x_m) / x_m
    sim_phase_err = sim_phase.copy()
    sim_phase_err[0] = wrap_phase(sim_phase[0] - true_phase)
    preds = [em.predict(ctx, int(i)) for i in k]

    return ErrorComparison(
        k=k,
        freq_hz=sp.frequencies[k],
        simulated_amplitude=sim_amp,
        analytic_amplitude=ana_amp,
        amplitude_abs_dev=np.abs(sim_amp - ana_amp),
        simulated_phase=sim_phase,
        analytic_phase=ana_phase,
        phase_abs_dev=phase_dev,
        simulated_rel_error=sim_rel,
        analytic_rel_error=np.array([p.amplitude_rel_error for p in preds]),
        simulated_phase_error=sim_phase_err,
        analytic_phase_error=np.array([p.phase_abs_error for p in preds]),
        context=ctx,
    )


def sweep(cfg: RunConfig, parameter: str, values) -> list[tuple[object, RunConfig, ErrorComparison]]:
    """Run :func:`compare` once per parameter value, in input order.

    ``bits`` changes the converter resolution; ``n_samples`` changes the record
    length and rescales the sample rate so the record spans the same number of
    periods. Any value that yields an invalid config aborts the sweep.
    """
    if parameter not in SWEEP_PARAMETERS:
        raise ValueError(f"parameter must be one of {SWEEP_PARAMETERS}, got {parameter!r}")
    values = list(values)
    if not values:
        raise ValueError("sweep needs at least one value")
    results = []
    for value in values:
        try:
            if parameter == "bits":
                point = cfg.with_bits(int(value))
            else:
                point = cfg.with_num_samples(int(value))
            results.append((value, point, compare(point)))
        except ValueError as exc:
            raise ValueError(f"{parameter}={value}: {exc}") from exc
    return results

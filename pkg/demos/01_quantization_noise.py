"""
Quantization noise of a 12-bit converter
========================================

A 50 Hz unit sine is sampled at 10240 Hz and at 10000 Hz for 0.0201 s and
passed through an ideal 12-bit mid-tread converter. At 10000 Hz the sample
rate is an exact multiple of the tone frequency, so the error repeats every
200 samples; at 10240 Hz (204.8 samples per period) it never lines up.

Run:  python demos/01_quantization_noise.py
"""

import math

import numpy as np

from adcspectra import AdcConfig, SamplingSpec, SignalSpec, coherence_check, num_samples_for_interval, quantize, synthesize
from adcspectra.figures import normalized_autocorrelation
from adcspectra.outputs import write_svg_plot

adc = AdcConfig(bits=12, v_min=-1.25, v_max=1.25)
print(f"q = {adc.q:.6g}, q/sqrt(12) = {adc.q / math.sqrt(12):.6g}")

# %% The two records
for fs in (10240.0, 10000.0):
    n = num_samples_for_interval(fs, 0.0201)
    report = coherence_check(50.0, fs, n)
    sig = synthesize(SignalSpec.sine(1.0, 50.0), SamplingSpec(fs, n))
    err = quantize(sig, adc).error
    print(
        f"fs={fs:.0f} Hz  N={n}  samples/period={report.samples_per_period:g}"
        f" (integer: {report.samples_per_period_is_integer})"
        f"  max|err|/q={np.max(np.abs(err)) / adc.q:.3f}"
    )
    write_svg_plot(f"demo_error_{fs:.0f}.svg", sig.times, [("error", err)], title=f"fs = {fs:.0f} Hz", xlabel="t, s")

# %% Periodicity needs several periods to measure
for fs in (10240.0, 10000.0):
    n = num_samples_for_interval(fs, 0.201)
    err = quantize(synthesize(SignalSpec.sine(), SamplingSpec(fs, n)), adc).error
    print(f"fs={fs:.0f} Hz: correlation at lag 200 over {n} samples = {normalized_autocorrelation(err, 200):.4f}")

# %% With an irrational frequency ratio the error looks like uniform noise
sig = synthesize(SignalSpec.sine(0.95, 1000 * math.sqrt(2) / math.pi), SamplingSpec(10000.0, 50000))
err = quantize(sig, adc).error
print(f"long incoherent record: rms / (q/sqrt 12) = {np.sqrt(np.mean(err**2)) / (adc.q / math.sqrt(12)):.4f}")

"""
Worst-case spectral errors from sign-model noise
================================================

Sign-model noise is +q/2 on the positive half-cycle and -q/2 on the
negative one: a square wave locked to the input. Its scaled DFT has a closed
form, which gives first-order laws for the amplitude and phase error of the
fundamental and the harmonics. This script checks each step against a direct
DFT for one period of a 50 Hz sine at N = 200 and q = 2**-11.

Run:  python demos/03_sign_model_error_chain.py
"""

import math

import numpy as np

from adcspectra import (
    AnalyticContext,
    SamplingSpec,
    SignalSpec,
    amplitude_rel_error,
    dft,
    phase_error_fundamental,
    phase_fundamental_exact,
    phase_harmonics,
    qnp_worst_case,
    qnsd,
    sign_model_noise,
    sign_model_spectrum,
    synthesize,
)
from adcspectra.spectral import SampledSignal

q, n = 2.0**-11, 200
ctx = AnalyticContext(q, n)
x = synthesize(SignalSpec.sine(), SamplingSpec(50.0 * n, n))
noise = sign_model_noise(x, q)
bins = dft(SampledSignal(noise, x.sample_rate_hz)).bins
out = dft(SampledSignal(x.samples + noise, x.sample_rate_hz)).bins

# %% Closed form vs direct DFT of the noise
print(" k   |closed form|      |direct DFT|       phase (closed)  phase (DFT)")
for k in range(1, 10):
    closed = sign_model_spectrum(ctx, k)
    ph = phase_harmonics(ctx, k) if k % 2 and k > 1 else float("nan")
    print(f"{k:2d}  {abs(closed):.10e}  {abs(bins[k]):.10e}  {ph:+.6f}       {np.angle(bins[k]) if abs(bins[k]) > 1e-12 else float('nan'):+.6f}")

# %% Fundamental: amplitude and phase error
print(f"amplitude error, first order: {amplitude_rel_error(ctx, 1):.6e}  (2q/pi = {2 * q / math.pi:.6e})")
print(f"amplitude error, simulated:   {abs(out[1]) - 1:.6e}")
print(f"phase error, first order:     {phase_error_fundamental(ctx):.6e}  (2q/N = {2 * q / n:.6e})")
print(f"phase error, exact:           {phase_fundamental_exact(ctx) + math.pi / 2:.6e}")

# %% Power-based bounds, for comparison
print(f"qnsd = {qnsd(q):.6e}, worst-case single-bin bound q/sqrt6 = {qnp_worst_case(q):.6e}")
print("note: the sign-model fundamental error (~2q/pi) exceeds q/sqrt6")

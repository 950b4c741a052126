"""
The 2/N-scaled DFT
==================

With the 2/N factor a unit sine on an exact bin reads 1 at that bin, and its
phase is the initial phase minus pi/2 (sines, not cosines). The factor is
applied to every bin, so DC reads twice the offset.

Run:  python demos/02_scaled_dft.py
"""

import math

import numpy as np

from adcspectra import SampledSignal, SamplingSpec, SignalSpec, amplitude_spectrum, dft, phase_spectrum, synthesize, wrap_phase

sampling = SamplingSpec(10000.0, 200)

# %% Unit sine, several initial phases
for alpha in (0.0, math.pi / 3, -2.0):
    sp = dft(synthesize(SignalSpec.sine(1.0, 50.0, alpha), sampling))
    print(f"alpha={alpha:+.4f}: |X[1]|={amplitude_spectrum(sp)[1]:.15f}  phase={phase_spectrum(sp)[1]:+.6f}"
          f"  (alpha - pi/2, wrapped = {wrap_phase(alpha - math.pi / 2):+.6f})")

# %% DC doubling
sp = dft(SampledSignal(np.full(200, 0.3), 10000.0))
print(f"constant 0.3 -> bin 0 = {sp.bins[0].real:.3f}")

# %% Parseval under 2/N scaling: sum x^2 = N/4 sum |X|^2
x = np.random.default_rng(1).standard_normal(205)
sp = dft(SampledSignal(x, 1.0))
print(f"sum x^2 = {np.sum(x**2):.12f},  N/4 sum |X|^2 = {205 / 4 * np.sum(np.abs(sp.bins)**2):.12f}")

# %% Direct summation works for any N; the FFT path agrees
print("direct vs fft, N=205:", np.max(np.abs(dft(SampledSignal(x, 1.0)).bins - dft(SampledSignal(x, 1.0), "fft").bins)))

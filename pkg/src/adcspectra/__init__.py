"""Ideal-ADC quantization noise and its effect on scaled DFT amplitude and phase spectra."""

from .errormodel import (
    AnalyticContext,
    amplitude_rel_error,
    combined_amplitude,
    phase_error_fundamental,
    phase_fundamental_exact,
    phase_harmonics,
    qnp_worst_case,
    qnsd,
    sign_model_spectrum,
    sine_spectrum,
)
from .quantizer import AdcConfig, Polarity, QuantizedRecord, Transfer, code, effective_bits, quantize, sign_model_noise
from .signalgen import (
    AliasingError,
    SampledSignal,
    SamplingSpec,
    SignalSpec,
    ToneSpec,
    coherence_check,
    num_samples_for_interval,
    synthesize,
)
from .spectral import UNDEFINED_PHASE, Spectrum, amplitude_spectrum, dft, idft, phase_spectrum, wrap_phase

__version__ = "0.1.0"

"""Run configuration: INI file plus command-line overrides (overrides win).

Example file::

    [signal]
    amplitude = 1.0
    frequency_hz = 50
    phase_rad = 0

    [sampling]
    sample_rate_hz = 10000
    interval_s = 0.0201       ; or num_samples = 200

    [adc]
    bits = 12
    v_min = -1.25
    v_max = 1.25
    transfer = bipolar

    [run]
    noise = real              ; or sign-model
    out = out/fig1b
    format = csv, svg
    tolerance = 1e-9

Extra tones for a polyharmonic input go in ``[tone.2]``, ``[tone.3]``, ...
sections with the same keys as ``[signal]``.
"""

from __future__ import annotations

import configparser
import enum
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Mapping

from .quantizer import AdcConfig, Transfer
from .signalgen import SamplingSpec, SignalSpec, ToneSpec, num_samples_for_interval

__all__ = ["ConfigError", "NoiseSource", "RunConfig", "load_config", "FORMATS"]

FORMATS = frozenset({"csv", "svg"})

DEFAULTS: dict[str, dict[str, Any]] = {
    "signal": {"amplitude": 1.0, "frequency_hz": 50.0, "phase_rad": 0.0, "dc_offset": 0.0},
    "sampling": {"sample_rate_hz": 10240.0, "interval_s": 0.0201, "num_samples": None},
    "adc": {"bits": 12, "v_min": -1.0, "v_max": 1.0, "transfer": "bipolar"},
    "run": {"noise": "real", "out": "out", "format": "csv", "tolerance": 1e-9},
}


class ConfigError(ValueError):
    pass


class NoiseSource(str, enum.Enum):
    REAL_QUANTIZER = "real"
    SIGN_MODEL = "sign-model"


@dataclass(frozen=True)
class RunConfig:
    signal: SignalSpec
    sampling: SamplingSpec
    adc: AdcConfig
    noise_source: NoiseSource = NoiseSource.REAL_QUANTIZER
    out_dir: Path = Path("out")
    formats: frozenset = frozenset({"csv"})
    tolerance: float = 1e-9

    def with_bits(self, bits: int) -> "RunConfig":
        return replace(self, adc=replace(self.adc, bits=bits))

    def with_num_samples(self, n: int) -> "RunConfig":
        """Same tone, N samples spanning exactly the same number of periods."""
        periods = self.sampling.num_samples * self.signal.tones[0].frequency_hz / self.sampling.sample_rate_hz
        fs = n * self.signal.tones[0].frequency_hz / max(1, round(periods))
        return replace(self, sampling=SamplingSpec(fs, n))


def _convert(section: str, key: str, raw: Any, kind):
    try:
        return kind(raw)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{section}.{key}: cannot read {raw!r} as {kind.__name__}") from exc


def _parse_formats(raw) -> frozenset:
    if isinstance(raw, str):
        items = [s.strip().lower() for s in raw.split(",") if s.strip()]
    else:
        items = [str(s).strip().lower() for s in raw]
    unknown = set(items) - FORMATS
    if unknown or not items:
        raise ConfigError(f"run.format: expected a subset of {sorted(FORMATS)}, got {raw!r}")
    return frozenset(items)


def _read_file(path: Path) -> tuple[dict[str, dict[str, str]], list[dict[str, str]]]:
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except configparser.Error as exc:
        raise ConfigError(f"malformed config {path}: {exc}") from exc
    sections: dict[str, dict[str, str]] = {}
    extra_tones = []
    for name in parser.sections():
        if name.startswith("tone."):
            extra_tones.append((name, dict(parser[name])))
        elif name in DEFAULTS:
            unknown = set(parser[name]) - set(DEFAULTS[name])
            if unknown:
                raise ConfigError(f"{name}: unknown keys {sorted(unknown)}")
            sections[name] = dict(parser[name])
        else:
            raise ConfigError(f"unknown section [{name}]")
    extra_tones.sort(key=lambda item: item[0])
    return sections, [t for _, t in extra_tones]


def _tone(section: str, values: Mapping[str, Any]) -> ToneSpec:
    amp = _convert(section, "amplitude", values.get("amplitude", 1.0), float)
    freq = _convert(section, "frequency_hz", values.get("frequency_hz"), float)
    phase = _convert(section, "phase_rad", values.get("phase_rad", 0.0), float)
    try:
        return ToneSpec(amp, freq, phase)
    except ValueError as exc:
        raise ConfigError(f"{section}: {exc}") from exc


def load_config(path: str | Path | None = None, overrides: Mapping[str, Any] | None = None) -> RunConfig:
    """Build a RunConfig from an optional INI file and ``section.key`` overrides.

    ``overrides`` maps dotted names such as ``"adc.bits"`` to values; ``None``
    values are ignored. Setting ``sampling.num_samples`` takes precedence over
    ``sampling.interval_s``.
    """
    merged = {sec: dict(vals) for sec, vals in DEFAULTS.items()}
    extra_tones: list[dict[str, str]] = []
    if path is not None:
        sections, extra_tones = _read_file(Path(path))
        for sec, vals in sections.items():
            if "num_samples" in vals:
                merged[sec]["interval_s"] = None
            merged[sec].update(vals)
    for dotted, value in (overrides or {}).items():
        if value is None:
            continue
        sec, key = dotted.split(".", 1)
        if key not in merged.get(sec, {}):
            raise ConfigError(f"unknown setting {dotted}")
        if dotted == "sampling.interval_s":
            merged["sampling"]["num_samples"] = None
        merged[sec][key] = value

    sig = merged["signal"]
    tones = [_tone("signal", sig)] + [_tone(f"tone.{i + 2}", t) for i, t in enumerate(extra_tones)]
    try:
        signal = SignalSpec(tuple(tones), _convert("signal", "dc_offset", sig["dc_offset"], float))
    except ValueError as exc:
        raise ConfigError(f"signal: {exc}") from exc

    smp = merged["sampling"]
    fs = _convert("sampling", "sample_rate_hz", smp["sample_rate_hz"], float)
    try:
        if smp["num_samples"] is not None:
            n = _convert("sampling", "num_samples", smp["num_samples"], int)
        else:
            interval = _convert("sampling", "interval_s", smp["interval_s"], float)
            n = num_samples_for_interval(fs, interval)
        sampling = SamplingSpec(fs, n)
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"sampling: {exc}") from exc

    adc_vals = merged["adc"]
    try:
        adc = AdcConfig(
            bits=_convert("adc", "bits", adc_vals["bits"], int),
            v_min=_convert("adc", "v_min", adc_vals["v_min"], float),
            v_max=_convert("adc", "v_max", adc_vals["v_max"], float),
            transfer=Transfer(str(adc_vals["transfer"]).lower()),
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"adc: {exc}") from exc

    run = merged["run"]
    try:
        noise = NoiseSource(str(run["noise"]).lower())
    except ValueError as exc:
        raise ConfigError(f"run.noise: expected 'real' or 'sign-model', got {run['noise']!r}") from exc
    tolerance = _convert("run", "tolerance", run["tolerance"], float)
    if not tolerance >= 0:
        raise ConfigError("run.tolerance: must be >= 0")
    return RunConfig(
        signal=signal,
        sampling=sampling,
        adc=adc,
        noise_source=noise,
        out_dir=Path(run["out"]),
        formats=_parse_formats(run["format"]),
        tolerance=tolerance,
    )

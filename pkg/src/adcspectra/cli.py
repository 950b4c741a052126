"""Command-line front end.

Subcommands: simulate, spectrum, compare, sweep. Exit codes: 0 success,
1 usage or config error, 2 tolerance exceeded, 3 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import errormodel as em
from .config import ConfigError, RunConfig, load_config
from .outputs import format_number, write_csv, write_svg_plot
from .pipeline import SWEEP_PARAMETERS, ErrorComparison, compare, simulate, spectra, sweep
from .spectral import amplitude_spectrum, phase_spectrum

log = logging.getLogger("adcspectra")

EXIT_OK, EXIT_CONFIG, EXIT_TOLERANCE, EXIT_IO = 0, 1, 2, 3

SIMULATE_COLUMNS = ("n", "t_s", "x", "y", "err")
SPECTRUM_COLUMNS = ("k", "freq_hz", "amplitude", "phase_or_sentinel")
SWEEP_COLUMNS = (
    "num_samples",
    "sample_rate_hz",
    "bits",
    "q",
    "simulated_amplitude_rel_error",
    "analytic_amplitude_rel_error",
    "simulated_phase_error",
    "analytic_phase_error",
    "max_amplitude_abs_dev",
    "max_phase_abs_dev",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def cmd_simulate(cfg: RunConfig) -> list[Path]:
    """Time-domain record: input, output referred to input, and error."""
    rec = simulate(cfg)
    out = []
    if "csv" in cfg.formats:
        rows = zip(range(len(rec.x)), rec.t_s, rec.x, rec.y, rec.err)
        out.append(write_csv(cfg.out_dir / "simulate.csv", SIMULATE_COLUMNS, rows))
    if "svg" in cfg.formats:
        out.append(
            write_svg_plot(
                cfg.out_dir / "simulate.svg",
                rec.t_s,
                [("error", rec.err)],
                title=f"Quantization error, fs = {cfg.sampling.sample_rate_hz:g} Hz",
                xlabel="t, s",
                ylabel="error",
            )
        )
    if rec.clipped_count:
        log.warning("%d samples clipped at the converter rails", rec.clipped_count)
    return out


def cmd_spectrum(cfg: RunConfig) -> list[Path]:
    """One-sided scaled spectra (bins 0..N/2) of the error and output sequences."""
    rec = simulate(cfg)
    out = []
    for name, sp in spectra(rec).items():
        k = np.arange(sp.num_samples // 2 + 1)
        amp = amplitude_spectrum(sp)[k]
        phase = phase_spectrum(sp)[k]
        if "csv" in cfg.formats:
            rows = zip(k, sp.frequencies[k], amp, phase)
            out.append(write_csv(cfg.out_dir / f"spectrum_{name}.csv", SPECTRUM_COLUMNS, rows))
        if "svg" in cfg.formats:
            out.append(
                write_svg_plot(
                    cfg.out_dir / f"spectrum_{name}.svg",
                    sp.frequencies[k],
                    [(f"|{name}|", amp)],
                    title=f"Amplitude spectrum of the {name} sequence",
                    xlabel="f, Hz",
                    ylabel="amplitude",
                    stem=True,
                )
            )
    return out


def _write_comparison(result: ErrorComparison, cfg: RunConfig) -> list[Path]:
    out = []
    if "csv" in cfg.formats:
        out.append(write_csv(cfg.out_dir / "compare.csv", ErrorComparison.COLUMNS, result.rows()))
        out.append(
            write_csv(
                cfg.out_dir / "fig3_errors.csv",
                ErrorComparison.ERROR_COLUMNS,
                result.rows(ErrorComparison.ERROR_COLUMNS),
            )
        )
    if "svg" in cfg.formats:
        out.append(
            write_svg_plot(
                cfg.out_dir / "fig3a_amplitude_error.svg",
                result.k,
                [("simulated", result.simulated_rel_error), ("analytic", result.analytic_rel_error)],
                title="Relative amplitude error per bin",
                xlabel="k",
                ylabel="relative error",
                stem=True,
            )
        )
        out.append(
            write_svg_plot(
                cfg.out_dir / "fig3b_phase_error.svg",
                result.k,
                [("simulated", result.simulated_phase_error), ("analytic", result.analytic_phase_error)],
                title="Phase error per bin",
                xlabel="k",
                ylabel="rad",
                stem=True,
            )
        )
    return out


def cmd_compare(cfg: RunConfig) -> tuple[ErrorComparison, list[Path]]:
    result = compare(cfg)
    return result, _write_comparison(result, cfg)


def _summary_row(point: RunConfig, result: ErrorComparison):
    return (
        point.sampling.num_samples,
        point.sampling.sample_rate_hz,
        point.adc.bits,
        point.adc.q,
        result.simulated_rel_error[0],
        result.analytic_rel_error[0],
        result.simulated_phase_error[0],
        result.analytic_phase_error[0],
        result.max_amplitude_dev,
        result.max_phase_dev,
    )


def cmd_sweep(cfg: RunConfig, parameter: str, values) -> tuple[list, Path | None]:
    """Per-value comparisons under ``<out>/<parameter>=<value>/`` plus a summary."""
    results = sweep(cfg, parameter, values)
    for value, point, result in results:
        _write_comparison(result, replace(point, out_dir=cfg.out_dir / f"{parameter}={value}"))
    summary = None
    if "csv" in cfg.formats:
        rows = [(value, *_summary_row(point, result)) for value, point, result in results]
        summary = write_csv(cfg.out_dir / "sweep_summary.csv", (parameter, *SWEEP_COLUMNS), rows)
    if "svg" in cfg.formats:
        xs = np.array([float(v) for v, _, _ in results])
        write_svg_plot(
            cfg.out_dir / "sweep_summary.svg",
            np.log2(xs),
            [
                ("log2 |amplitude error|", np.log2(np.abs([r.analytic_rel_error[0] for *_, r in results]))),
                ("log2 phase error", np.log2(np.abs([r.analytic_phase_error[0] for *_, r in results]))),
            ],
            title=f"Fundamental errors vs {parameter}",
            xlabel=f"log2 {parameter}",
            ylabel="log2 error",
        )
    return results, summary


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", type=Path, help="INI file with [signal] [sampling] [adc] [run]")
    common.add_argument("--bits", type=int)
    common.add_argument("--fs", type=float, help="sample rate, Hz")
    common.add_argument("--freq", type=float, help="tone frequency, Hz")
    common.add_argument("--amp", type=float, help="tone amplitude")
    common.add_argument("--phase", type=float, help="initial phase, rad")
    common.add_argument("--interval", type=float, help="measurement interval, s")
    common.add_argument("--n", type=int, help="number of samples (overrides --interval)")
    common.add_argument("--vmin", type=float, help="lower full-scale limit")
    common.add_argument("--vmax", type=float, help="upper full-scale limit")
    common.add_argument("--transfer", choices=["bipolar", "unipolar"])
    common.add_argument("--noise", choices=["real", "sign-model"])
    common.add_argument("--out", type=Path, help="output directory")
    common.add_argument(
        "--format", action="append", help="csv, svg or csv,svg; may be repeated"
    )
    common.add_argument("--tolerance", type=float, help="max allowed deviation (compare/sweep)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="adcspectra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("simulate", parents=[common], help="write the time-domain error record")
    sub.add_parser("spectrum", parents=[common], help="write error and output spectra")
    sub.add_parser("compare", parents=[common], help="simulated vs closed-form spectra")
    sw = sub.add_parser("sweep", parents=[common], help="repeat compare over a parameter")
    sw.add_argument("--param", required=True, choices=SWEEP_PARAMETERS)
    sw.add_argument("--values", required=True, help="comma-separated integers")
    return parser


def _overrides(args) -> dict:
    if args.interval is not None and args.n is not None:
        raise ConfigError("--interval and --n are mutually exclusive")
    fmt = None
    if args.format:
        fmt = ",".join(args.format)
    return {
        "adc.bits": args.bits,
        "adc.v_min": args.vmin,
        "adc.v_max": args.vmax,
        "adc.transfer": args.transfer,
        "sampling.sample_rate_hz": args.fs,
        "sampling.interval_s": args.interval,
        "sampling.num_samples": args.n,
        "signal.frequency_hz": args.freq,
        "signal.amplitude": args.amp,
        "signal.phase_rad": args.phase,
        "run.noise": args.noise,
        "run.out": args.out,
        "run.format": fmt,
        "run.tolerance": args.tolerance,
    }


def _parse_values(raw: str) -> list[int]:
    try:
        values = [int(v) for v in raw.split(",") if v.strip()]
    except ValueError as exc:
        raise ConfigError(f"--values: expected comma-separated integers, got {raw!r}") from exc
    if not values:
        raise ConfigError("--values: at least one value is required")
    return values


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        cfg = load_config(args.config, _overrides(args))
        if args.command == "simulate":
            cmd_simulate(cfg)
        elif args.command == "spectrum":
            cmd_spectrum(cfg)
        elif args.command == "compare":
            result, _ = cmd_compare(cfg)
            print(f"max amplitude deviation: {format_number(result.max_amplitude_dev)}")
            print(f"max phase deviation: {format_number(result.max_phase_dev)}")
            if not result.max_deviation <= cfg.tolerance:
                print(f"tolerance {cfg.tolerance:g} exceeded", file=sys.stderr)
                return EXIT_TOLERANCE
        elif args.command == "sweep":
            results, _ = cmd_sweep(cfg, args.param, _parse_values(args.values))
            worst = max(r.max_deviation for *_, r in results)
            print(f"max deviation over sweep: {format_number(worst)}")
            if not worst <= cfg.tolerance:
                print(f"tolerance {cfg.tolerance:g} exceeded", file=sys.stderr)
                return EXIT_TOLERANCE
    except (ConfigError, em.OutsideValidityError, ValueError) as exc:
        print(f"adcspectra: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"adcspectra: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

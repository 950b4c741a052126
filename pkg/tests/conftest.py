import cmath
import math
from pathlib import Path

import pytest

from adcspectra import SamplingSpec, SignalSpec, synthesize

ROOT = Path(__file__).resolve().parents[1]
Q12 = 2.0**-11


def naive_scaled_dft(x, k):
    """Textbook summation with cmath, one bin at a time (test oracle)."""
    n_total = len(x)
    acc = 0j
    for n, v in enumerate(x):
        acc += v * cmath.exp(-2j * math.pi * ((n * k) % n_total) / n_total)
    return 2.0 / n_total * acc


def unit_sine(n_total, phase=0.0, periods=1):
    """Coherent record of ``periods`` cycles of a 50 Hz unit sine."""
    return synthesize(
        SignalSpec.sine(1.0, 50.0, phase), SamplingSpec(50.0 * n_total / periods, n_total)
    )


@pytest.fixture
def recipes():
    return ROOT / "recipes"


_ACCEPTANCE = []


class _Criterion:
    def __init__(self, number, title):
        self.number, self.title, self.detail = number, title, ""

    def note(self, text):
        self.detail = text

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        _ACCEPTANCE.append((self.number, status, self.title, self.detail))
        return False


@pytest.fixture
def criterion():
    """``with criterion(n, title) as c:`` records a pass/fail line for the summary."""
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, title, detail in sorted(_ACCEPTANCE):
        line = f"[{status}] {number}. {title}"
        terminalreporter.write_line(line + (f" -- {detail}" if detail else ""))

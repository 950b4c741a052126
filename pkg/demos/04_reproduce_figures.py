"""
Regenerate the noise figures from the checked-in recipes
========================================================

Each recipe under recipes/ is a run configuration. This script drives the
command-line entry point with them and writes CSV + SVG output under out/.
The same can be done from a shell, e.g.

    adcspectra simulate --config recipes/fig1a.ini
    adcspectra spectrum --config recipes/fig2b.ini
    adcspectra compare  --config recipes/fig3.ini
    adcspectra sweep    --config recipes/fig3.ini --param bits --values 8,10,12,14,16

Run:  python demos/04_reproduce_figures.py
"""

from pathlib import Path

from adcspectra.cli import main

recipes = Path(__file__).resolve().parents[1] / "recipes"

runs = [
    ["simulate", "--config", str(recipes / "fig1a.ini")],
    ["simulate", "--config", str(recipes / "fig1b.ini")],
    ["spectrum", "--config", str(recipes / "fig2a.ini")],
    ["spectrum", "--config", str(recipes / "fig2b.ini")],
    ["compare", "--config", str(recipes / "fig3.ini")],
    ["sweep", "--config", str(recipes / "fig3.ini"), "--param", "bits", "--values", "8,10,12,14,16",
     "--out", "out/sweep_bits"],
    ["sweep", "--config", str(recipes / "fig3.ini"), "--param", "n_samples", "--values", "100,200,400",
     "--out", "out/sweep_n"],
]
for argv in runs:
    code = main(argv)
    print(f"{' '.join(argv[:1] + argv[2:3]):60s} exit {code}")

#!/usr/bin/env python3
"""Plot leading small-x exponents from `p3fox asym --alpha-scan` CSV.

    p3fox asym --n 5 --alpha-scan -12:12:0.1 > scan.csv
    python3 tools/plot_scan.py scan.csv scan.png
"""
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def main(src, dst):
    df = pd.read_csv(src)
    regular = df[df["boundary"] == 0]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(regular["alpha"], regular["delta_exponent"], ".", ms=3, label="Delta_n exponent")
    ax.plot(regular["alpha"], regular["u_exponent"], ".", ms=3, label="u_n exponent")
    for a in df[df["boundary"] == 1]["alpha"]:
        ax.axvline(a, color="0.85", lw=0.6, zorder=0)
    ax.set_xlabel("alpha")
    ax.set_ylabel("leading power of x/2")
    ax.legend()
    fig.tight_layout()
    fig.savefig(dst, dpi=150)


if __name__ == "__main__":
    main(*sys.argv[1:3])

#!/usr/bin/env python3
"""Plot a `p3fox trace` trajectory along the real axis, coloured by chart.

Samples on detours around poles (|Im x| >= 1e-6) are dropped.

    p3fox trace --alpha 1 --x0 0.5 --x1 6 > trace.csv
    python3 tools/plot_trace.py trace.csv trace.png
"""
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd


def main(src, dst):
    df = pd.read_csv(src)
    df = df[np.abs(df["x_im"]) < 1e-6]
    u = df["u_re"].where(np.isfinite(df["u_re"]))
    fig, ax = plt.subplots(figsize=(7, 4))
    for chart, part in df.assign(u=u).groupby("chart"):
        ax.plot(part["x_re"], part["u"], ".", ms=3, label=f"chart {chart}")
    ax.set_ylim(-10, 10)
    ax.set_xlabel("Re x")
    ax.set_ylabel("Re u")
    ax.legend()
    fig.tight_layout()
    fig.savefig(dst, dpi=150)


if __name__ == "__main__":
    main(*sys.argv[1:3])

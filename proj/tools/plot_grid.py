#!/usr/bin/env python3
"""Plot |u| over the complex plane from `p3fox grid` CSV.

    p3fox grid --n 5 --alpha -223/225 --d1 0.55 --d2 0.71 \
        --rect -3,3,-3,3 --nx 121 --ny 121 > grid.csv
    python3 tools/plot_grid.py grid.csv grid.png
"""
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd


def main(src, dst):
    df = pd.read_csv(src)
    xs = np.sort(df["x_re"].unique())
    ys = np.sort(df["x_im"].unique())
    mag = np.hypot(df["u_re"], df["u_im"]).to_numpy()
    mag[df["status"].to_numpy() != "ok"] = np.nan
    grid = mag.reshape(len(ys), len(xs))
    fig, ax = plt.subplots(figsize=(6, 5))
    mesh = ax.pcolormesh(xs, ys, np.log10(grid), shading="nearest", cmap="viridis")
    poles = df[df["status"] == "pole"]
    ax.plot(poles["x_re"], poles["x_im"], "r.", ms=4, label="pole")
    fig.colorbar(mesh, label="log10 |u|")
    ax.set_xlabel("Re x")
    ax.set_ylabel("Im x")
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(dst, dpi=150)


if __name__ == "__main__":
    main(*sys.argv[1:3])

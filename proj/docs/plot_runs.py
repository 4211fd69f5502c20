#!/usr/bin/env python3
"""Plot the run CSVs of an ncmap output directory.

Usage: python3 plot_runs.py <run-dir> [out.png]
"""

import csv
import json
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def load(path):
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    k = [int(r["k"]) for r in rows]
    x = [float(r["x0"]) for r in rows]
    y = [float(r["y0"]) for r in rows]
    return k, x, y


def main():
    if len(sys.argv) < 2:
        sys.exit(__doc__)
    run_dir = Path(sys.argv[1])
    out_path = Path(sys.argv[2]) if len(sys.argv) > 2 else run_dir / "runs.png"

    manifest = json.loads((run_dir / "manifest.json").read_text())
    fig, ax = plt.subplots(figsize=(9, 4.5))
    for run in manifest["runs"]:
        k, x, y = load(run_dir / run["csv"])
        label = run.get("label", run["method"])
        if run["method"] in ("euler", "heun"):
            (line,) = ax.plot(k, x, linewidth=1.0, label=f"{label} (x)")
            ax.plot(k, y, linewidth=1.6, linestyle="--", color=line.get_color(),
                    label=f"{label} (filtered)")
        else:
            ax.plot(k, x, linewidth=1.0, label=label)

    center = manifest["config"]["problem"].get("center")
    if center:
        ax.axhline(center[0], color="black", linewidth=0.6, alpha=0.5)
    ax.set_xlabel("step k")
    ax.set_ylabel("first coordinate")
    ax.legend(fontsize=8)
    ax.set_title(manifest["config"]["name"])
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    print(f"wrote {out_path}")


if __name__ == "__main__":
    main()

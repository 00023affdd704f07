#!/usr/bin/env python3
# Copyright 2026 latsched Authors
# SPDX-License-Identifier: Apache-2.0
"""Summarise / plot the CSV files produced by `latsched bench-runtime` and
`latsched bench-rho`.

Always prints an aggregate table; pass --png FILE to also render a chart
(needs matplotlib, which is optional).
"""
import argparse
import csv
import statistics
import sys
from collections import defaultdict


def load(path):
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    ok = [r for r in rows if not r.get("error")]
    skipped = len(rows) - len(ok)
    if skipped:
        print(f"note: {skipped} error rows skipped", file=sys.stderr)
    return ok


def summarise_runtime(rows):
    cells = defaultdict(list)
    for r in rows:
        cells[(int(r["n"]), float(r["density"]))].append(int(r["runtime_us"]))
    print(f"{'n':>4} {'density':>8} {'runs':>5} {'mean_us':>10} {'median_us':>10}")
    for (n, d) in sorted(cells):
        v = cells[(n, d)]
        print(f"{n:>4} {d:>8g} {len(v):>5} {statistics.mean(v):>10.1f} "
              f"{statistics.median(v):>10.1f}")
    return cells


def summarise_rho(rows):
    cells = defaultdict(list)
    for r in rows:
        if r["optimal"] != "1":
            continue
        procs = "m" if r["at_m"] == "1" else r["procs"]
        cells[(int(r["n"]), procs)].extend([float(r["rho1"]), float(r["rho2"])])
    print(f"{'n':>4} {'procs':>6} {'values':>7} {'median_rho':>11} {'max_rho':>9}")
    for (n, procs) in sorted(cells, key=lambda k: (k[0], str(k[1]))):
        v = cells[(n, procs)]
        print(f"{n:>4} {procs:>6} {len(v):>7} {statistics.median(v):>11.4f} "
              f"{max(v):>9.4f}")
    return cells


def maybe_plot(kind, cells, png):
    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not available; table only", file=sys.stderr)
        return
    fig, ax = plt.subplots()
    if kind == "runtime":
        by_density = defaultdict(list)
        for (n, d), v in sorted(cells.items()):
            by_density[d].append((n, statistics.mean(v)))
        for d, pts in sorted(by_density.items()):
            ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o",
                    label=f"density {d:g}")
        ax.set_xlabel("tasks")
        ax.set_ylabel("mean analysis runtime (us)")
    else:
        labels, data = [], []
        for key in sorted(cells, key=lambda k: (k[0], str(k[1]))):
            labels.append(f"n={key[0]} p={key[1]}")
            data.append(cells[key])
        ax.boxplot(data, labels=labels)
        ax.set_ylabel("rho")
        ax.tick_params(axis="x", rotation=45)
    ax.legend() if kind == "runtime" else None
    fig.tight_layout()
    fig.savefig(png, dpi=150)
    print(f"wrote {png}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("csv", help="bench-runtime or bench-rho output")
    ap.add_argument("--kind", choices=["runtime", "rho"],
                    help="inferred from the header when omitted")
    ap.add_argument("--png", help="also write a chart here")
    args = ap.parse_args()

    rows = load(args.csv)
    if not rows:
        sys.exit("no usable rows")
    kind = args.kind or ("rho" if "rho1" in rows[0] else "runtime")
    cells = summarise_rho(rows) if kind == "rho" else summarise_runtime(rows)
    if args.png:
        maybe_plot(kind, cells, args.png)


if __name__ == "__main__":
    main()

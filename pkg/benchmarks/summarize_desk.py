"""Markdown table of the desk runs: final normalized AER per split and wall clock.

    python benchmarks/summarize_desk.py [results/desk] > results/desk/table.md
"""

import argparse
import os
from pathlib import Path

import numpy as np

from aibench.manifest import read_manifest
from aibench.metrics import read_records

SPLITS = ("train", "eval_in", "eval_out")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("root", nargs="?", default=os.environ.get("AIBENCH_DESK_RESULTS", "results/desk"))
    args = ap.parse_args()
    rows = {}
    for run in sorted(Path(args.root).iterdir()):
        f = run / "eval_records.jsonl"
        if not f.exists():
            continue
        recs = read_records(f)
        if not recs:
            continue
        last = max(r.iteration for r in recs)
        final = {r.split: r.normalized_aer for r in recs if r.iteration == last}
        env, variant = recs[0].env, recs[0].variant
        rows.setdefault((env, variant), []).append((recs[0].seed, final, read_manifest(run)["wall_clock_s"]))

    print("| env | variant | seed | train | eval_in | eval_out | wall clock (min) |")
    print("|---|---|---|---|---|---|---|")
    for (env, variant), runs in rows.items():
        for seed, final, wall in sorted(runs, key=lambda t: t[0]):
            cells = " | ".join(f"{final.get(s, float('nan')):.3f}" for s in SPLITS)
            print(f"| {env} | {variant} | {seed} | {cells} | {wall / 60:.1f} |")
        means = " | ".join(f"**{np.mean([r[1].get(s, np.nan) for r in runs]):.3f}**" for s in SPLITS)
        print(f"| {env} | {variant} | mean | {means} | {sum(r[2] for r in runs) / 60:.1f} |")


if __name__ == "__main__":
    main()

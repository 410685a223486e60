#!/usr/bin/env python3
"""Benchmark both encodings over a seeded batch of random connected graphs.

Writes the record CSV and the JSON report (including per-group
Kaplan-Meier medians) next to this script unless --out-dir is given.
Equivalent to `qpart bench` but convenient to tweak as an experiment
driver.
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from qpart.bench import BenchInstance, records_to_csv, report_to_json, run_suite
from qpart.graphs import generate_random_connected
from qpart.solve import AnnealParams


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--n-min", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--densities", default="0.2,0.5,0.8")
    ap.add_argument("--runs", type=int, default=50)
    ap.add_argument("--sweeps", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--group-by", choices=["n", "density"], default="n")
    ap.add_argument("--out-dir", type=Path, default=Path(__file__).parent / "out")
    args = ap.parse_args()

    densities = [float(x) for x in args.densities.split(",")]
    span = args.n_max - args.n_min + 1
    instances = []
    for i in range(args.count):
        n = args.n_min + (i % span)
        d = densities[i % len(densities)]
        g = generate_random_connected(n, d, args.seed + i)
        instances.append(BenchInstance(f"g{i:03d}_n{n}_d{d:g}", g, density=d))

    params = AnnealParams(runs=args.runs, sweeps=args.sweeps, seed=args.seed)
    start = time.time()
    report = run_suite(instances, params, group_by=args.group_by)
    elapsed = time.time() - start

    args.out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = args.out_dir / "benchmark.csv"
    json_path = args.out_dir / "benchmark.json"
    csv_path.write_text(records_to_csv(report.records))
    json_path.write_text(report_to_json(report))

    solved = sum(1 for r in report.records if not r.censored)
    print(f"{len(report.records)} records in {elapsed:.1f}s; {solved} uncensored")
    for group_by, key, encoding, est in report.groups:
        bound = ">= " if est.median_is_lower_bound else ""
        print(f"  {group_by}={key} {encoding:>6}: median TTS {bound}{float(est.median):.1f} us")
    print(f"wrote {csv_path} and {json_path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

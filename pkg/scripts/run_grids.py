#!/usr/bin/env python3
"""Run the full verification campaign over the standard grids.

Sweeps every identity over the largest grids that finish quickly on a laptop
and prints one summary row per sweep.  Use --json-dir to keep the raw
per-instance reports.

    python scripts/run_grids.py
    python scripts/run_grids.py --jobs 4 --json-dir out/
"""

from __future__ import annotations

import argparse
import pathlib
import sys
import time

from qdyson.reports import dumps
from qdyson.sweeps import SweepConfig, run_sweep

# (identity, n, amax, mmax, semantics)
CAMPAIGN = [
    ("dyson", 1, 2, None, "multiset"),
    ("dyson", 2, 2, None, "multiset"),
    ("dyson", 3, 2, None, "multiset"),
    ("dyson", 4, 1, None, "multiset"),
    ("qdyson", 2, 3, None, "multiset"),
    ("qdyson", 3, 2, None, "multiset"),
    ("firstlayer", 2, 2, None, "multiset"),
    ("firstlayer", 3, 2, 2, "multiset"),
    ("kadell", 2, 2, None, "multiset"),
    ("kadell", 3, 2, None, "multiset"),
    ("main", 2, 2, None, "multiset"),
    ("main", 3, 2, None, "multiset"),
    ("lemmas", 6, 5, None, "multiset"),
]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--jobs", type=int, default=1, help="worker processes per sweep")
    parser.add_argument("--seed", type=int, default=0, help="seed for the randomized suites")
    parser.add_argument("--json-dir", default=None, help="directory for raw JSONL reports")
    args = parser.parse_args(argv)

    json_dir = pathlib.Path(args.json_dir) if args.json_dir else None
    if json_dir:
        json_dir.mkdir(parents=True, exist_ok=True)

    print(f"{'identity':<11} {'n':>2} {'amax':>4} {'total':>6} {'passed':>6} "
          f"{'failed':>6} {'rejected':>8} {'secs':>7}")
    any_failed = False
    for identity, n, amax, mmax, semantics in CAMPAIGN:
        config = SweepConfig(
            identity=identity, n=n, amax=amax, mmax=mmax,
            jobs=args.jobs, seed=args.seed, semantics=semantics,
        )
        t0 = time.perf_counter()
        reports, summary = run_sweep(config)
        secs = time.perf_counter() - t0
        print(f"{identity:<11} {n:>2} {amax:>4} {summary['total']:>6} "
              f"{summary['passed']:>6} {summary['failed']:>6} "
              f"{summary['rejected']:>8} {secs:>7.2f}")
        if summary["failed"]:
            any_failed = True
            for report in reports:
                if not report.holds:
                    print(f"  FAIL {report.summary_line()}")
        if json_dir:
            path = json_dir / f"{identity}_n{n}_a{amax}.jsonl"
            with path.open("w", encoding="utf-8") as fh:
                for report in reports:
                    fh.write(report.to_json() + "\n")
                fh.write(dumps(summary) + "\n")
    return 1 if any_failed else 0


if __name__ == "__main__":
    sys.exit(main())

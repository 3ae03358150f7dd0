"""Exhaustive differential sweeps of the structural recognizers.

    python3 scripts/run_sweeps.py --max-n 5
"""
import argparse
import time

from qcartan.oracle import EnumerationSpec, differential_test


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--all", action="store_true", help="count disconnected graphs too (they are skipped in checks)")
    args = ap.parse_args()
    failed = False
    for n in range(1, args.max_n + 1):
        t = time.perf_counter()
        report = differential_test(EnumerationSpec(n, "all" if args.all else "connected_only"))
        types = " ".join(f"{k}={v}" for k, v in sorted(report.types.items()))
        print(f"n={n} connected={report.checked} pd={report.positive_definite} "
              f"disagreements={len(report.disagreements)} {types} [{time.perf_counter() - t:.1f}s]")
        for line in report.lines():
            print("  " + line)
        failed |= not report.ok
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()

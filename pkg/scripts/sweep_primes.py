#!/usr/bin/env python3
"""Sweep the family over a range of primes and print one verdict line each.

Example:
    python scripts/sweep_primes.py --max-prime 13
    python scripts/sweep_primes.py --max-prime 31 --jobs 4
"""

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from q8family.modp import is_odd_prime
from q8family.verify import scan_one_prime


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-prime", type=int, default=3)
    ap.add_argument("--max-prime", type=int, default=13)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--bound", type=int, default=97)
    args = ap.parse_args()

    primes = [p for p in range(args.min_prime, args.max_prime + 1) if is_odd_prime(p)]
    t0 = time.perf_counter()
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(scan_one_prime, primes))
    else:
        records = [scan_one_prime(p, args.bound) for p in primes]
    records.sort(key=lambda r: r["prime"])

    print(f"{'p':>4} {'|G|':>6} {'classes':>8} {'labels':>7} "
          f"{'[chi^2,psi]':>12} {'verdict':>8} {'sec':>7}")
    for rec in records:
        mults = sorted(set(rec["psi_multiplicities"]))
        print(f"{rec['prime']:>4} {rec['group_order']:>6} "
              f"{5 + (rec['prime']**2 - 1) // 8:>8} {rec['labels_checked']:>7} "
              f"{str(mults):>12} {'PASS' if rec['pass'] else 'FAIL':>8} "
              f"{rec['seconds']:>7.2f}")
    ok = all(r["pass"] for r in records)
    print(f"total {time.perf_counter() - t0:.2f}s, "
          f"{'all pass' if ok else 'FAILURES'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

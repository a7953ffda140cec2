"""Compare the compiled and pure-Python kernels on one seeded input stream.

    python benchmarks/compare_backends.py --count 1000000 --seed 7
"""

import argparse

from gaussphi.bench import run_bench, stream_digest


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=1_000_000)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--expand-count", type=int, default=100_000)
    args = ap.parse_args()

    results = run_bench(args.count, args.seed, expand_count=args.expand_count)
    print(f"stream {stream_digest(args.seed, args.count)}  count={args.count} seed={args.seed}")
    by_metric = {}
    for r in results:
        by_metric.setdefault(r.metric, {})[r.backend] = r.rate
    print(f"{'metric':<18} {'compiled/s':>14} {'python/s':>14} {'speedup':>8}")
    for metric, rates in by_metric.items():
        c, p = rates.get("compiled"), rates.get("python")
        speed = f"{c / p:7.1f}x" if c and p else "      -"
        print(f"{metric:<18} {c or 0:>14,.0f} {p or 0:>14,.0f} {speed}")


if __name__ == "__main__":
    main()

"""Compare the enumeration kernel backends.

Runs the full 2^n Gray-code walk for a few graph sizes on every
importable backend and prints steps/second plus the speedup of the
compiled extension over the pure-Python fallback.

Usage: python benchmarks/bench_kernel.py [--sizes 12,16,20] [--repeats 3]
"""

import argparse
import time

from gsv import generate
from gsv.kernel import backends


def time_backend(impl, rows, n: int, repeats: int) -> float:
    total = 1 << n
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        impl.histogram_range(rows, n, 0, total)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="12,16,20", help="comma-separated vertex counts")
    parser.add_argument("--repeats", type=int, default=3, help="take the best of this many runs")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    impls = backends()
    print(f"backends: {', '.join(impls)}")
    print(f"{'n':>4} {'backend':>8} {'seconds':>12} {'steps/s':>14} {'speedup':>9}")
    for n in sizes:
        g = generate("ring", n)
        timings = {}
        for name, impl in impls.items():
            timings[name] = time_backend(impl, g.rows, n, args.repeats)
        base = timings.get("python")
        for name, seconds in timings.items():
            steps = (1 << n) / seconds
            speedup = f"{base / seconds:8.1f}x" if base and name != "python" else ""
            print(f"{n:>4} {name:>8} {seconds:>12.6f} {steps:>14.3e} {speedup:>9}")


if __name__ == "__main__":
    main()

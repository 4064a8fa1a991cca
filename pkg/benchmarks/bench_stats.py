"""Compare the compiled statistics kernel against the pure-Python fallback.

Usage: python benchmarks/bench_stats.py [n]

Scans all of S_n (default n=8) with both kernels and reports the throughput
ratio.  Run after an editable install so the compiled extension is built.
"""

import itertools
import sys
import time

from pqeuler._statpure import stat_tuple as pure_stat

try:
    from pqeuler._statcore import stat_tuple as compiled_stat
except ImportError:
    compiled_stat = None


def scan(fn, n):
    start = time.perf_counter()
    count = 0
    for word in itertools.permutations(range(1, n + 1)):
        fn(word)
        count += 1
    elapsed = time.perf_counter() - start
    return count, elapsed


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    count, t_pure = scan(pure_stat, n)
    print(f"pure:     {count} words in {t_pure:.3f}s "
          f"({count / t_pure:,.0f}/s)")
    if compiled_stat is None:
        print("compiled: extension not available")
        return
    count, t_comp = scan(compiled_stat, n)
    print(f"compiled: {count} words in {t_comp:.3f}s "
          f"({count / t_comp:,.0f}/s)")
    print(f"speedup:  {t_pure / t_comp:.1f}x")


if __name__ == "__main__":
    main()

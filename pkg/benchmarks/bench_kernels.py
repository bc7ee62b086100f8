"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--census 10] [--words 9]

Each kernel runs on both backends with the same input; the results must agree
and the best wall time of ``--repeat`` runs is reported.
"""

import argparse
import sys
import timeit

from boxcalc import _purepy, excedance

try:
    from boxcalc import _speedups
except ImportError:
    _speedups = None


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--census", type=int, default=10, help="ground set size for the partition census")
    ap.add_argument("--words", type=int, default=9, help="permutation size for excedance word counts")
    args = ap.parse_args(argv)
    if _speedups is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    long_word = excedance.PHI_U
    cases = [
        (f"partition_census({args.census})", lambda m: m.partition_census(args.census)),
        (f"excedance_word_counts({args.words})", lambda m: m.excedance_word_counts(args.words)),
        (f"bracket(len {len(long_word)})", lambda m: m.bracket(long_word)),
    ]
    print(f"{'kernel':32} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, call in cases:
        if call(_purepy) != call(_speedups):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        tp = best(lambda: call(_purepy), args.repeat)
        tc = best(lambda: call(_speedups), args.repeat)
        print(f"{name:32} {tp:10.4f} {tc:11.4f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

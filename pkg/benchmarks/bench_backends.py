"""Compare the compiled and pure-Python kernel backends.

The hot loops during Monte-Carlo validation are the fused moment
accumulation (``pair_moments``) and the weighted recombination
(``combine2``) over 10^4-10^6 samples, repeated across seeds; this script
times both backends on both kernels across sizes and reports the speedup.

Usage::

    python benchmarks/bench_backends.py [--sizes 1000,10000,100000,1000000]
                                        [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from comsig import _kernels_py

try:
    from comsig import _kernels_cy
except ImportError:
    _kernels_cy = None


def _time(func, *args, repeat):
    # best-of-repeat, each sample auto-scaled to >= ~10 ms of work
    timer = timeit.Timer(lambda: func(*args))
    number, _ = timer.autorange()
    number = max(1, number // 10)
    return min(timer.repeat(repeat=repeat, number=number)) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes",
        default="1000,10000,100000,1000000",
        help="comma-separated sample counts",
    )
    parser.add_argument(
        "--repeat", type=int, default=5, help="timing repetitions (best-of)"
    )
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if _kernels_cy is None:
        print("compiled backend not built; timing pure Python only")

    rng = np.random.default_rng(0)
    header = f"{'kernel':<14}{'n':>9}{'python':>12}{'compiled':>12}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        x = rng.standard_normal(n)
        y = rng.standard_normal(n)
        cases = (
            ("pair_moments", (x, y)),
            ("combine2", (x, y, 0.5, 0.125)),
        )
        for name, arguments in cases:
            py = _time(getattr(_kernels_py, name), *arguments, repeat=args.repeat)
            if _kernels_cy is None:
                print(f"{name:<14}{n:>9}{py * 1e3:>10.3f}ms{'-':>12}{'-':>9}")
                continue
            cy = _time(getattr(_kernels_cy, name), *arguments, repeat=args.repeat)
            print(
                f"{name:<14}{n:>9}{py * 1e3:>10.3f}ms{cy * 1e3:>10.3f}ms"
                f"{py / cy:>8.1f}x"
            )


if __name__ == "__main__":
    main()

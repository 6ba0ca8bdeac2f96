"""Timing comparison of the pure-Python and compiled digit kernels.

Each workload runs on both implementations with identical inputs; the
table reports best-of-N wall times and the resulting speedup.

    python3 benchmarks/bench_kernels.py [--repeat N] [--scale F]
"""

import argparse
import random
import time

from zeroless import _kernels_py as pure

try:
    from zeroless import _kernels_cy as compiled
except ImportError:
    compiled = None


def _digits(rng, k, length):
    return tuple(rng.randint(1, k) for _ in range(length))


def workloads(scale):
    rng = random.Random(1729)
    n = lambda base: max(4, int(base * scale))
    a10 = _digits(rng, 10, n(20000))
    b10 = _digits(rng, 10, n(20000))
    m10 = _digits(rng, 10, n(400))
    m10b = _digits(rng, 10, n(400))
    a60 = _digits(rng, 60, n(20000))
    cascade = (10,) * n(20000)
    zero10 = pure.lex_to_zero_digits(a10, 10)
    return [
        ("add, 20k digits, base 10", lambda impl: impl.add_digits(a10, b10, 10)),
        ("scale by 7, 20k digits, base 10", lambda impl: impl.scale_digits(a10, 7, 10)),
        ("multiply, 400x400 digits, base 10", lambda impl: impl.multiply_digits(m10, m10b, 10)),
        ("successor over a 20k carry run", lambda impl: impl.successor_digits(cascade, 10)),
        ("predecessor, 20k digits, base 60", lambda impl: impl.predecessor_digits(a60, 60)),
        ("shift by base, 20k digits, base 60", lambda impl: impl.multiply_by_base_digits(a60, 60)),
        ("to with-zero, 20k digits, base 10", lambda impl: impl.lex_to_zero_digits(a10, 10)),
        ("from with-zero, 20k digits, base 10", lambda impl: impl.zero_to_lex_digits(zero10, 10)),
    ]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5, help="runs per measurement (default 5)")
    parser.add_argument("--scale", type=float, default=1.0, help="input size multiplier")
    args = parser.parse_args(argv)
    if compiled is None:
        print("compiled kernels are not importable; build the extension first")
        return 1
    name_w = max(len(name) for name, _ in workloads(args.scale))
    print(f"{'workload':<{name_w}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, call in workloads(args.scale):
        t_pure = best_of(lambda: call(pure), args.repeat)
        t_comp = best_of(lambda: call(compiled), args.repeat)
        ratio = t_pure / t_comp if t_comp else float("inf")
        print(f"{name:<{name_w}}  {t_pure * 1e3:>8.2f}ms  {t_comp * 1e3:>8.2f}ms  {ratio:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

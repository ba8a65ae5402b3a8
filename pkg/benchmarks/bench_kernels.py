"""Compare the pure-Python kernels against the compiled twin.

Both modules run the same algorithms on the same operands; the compiled
version can only remove interpreter loop overhead, since the scalar
arithmetic itself happens in CPython bignums, gmpy2, or mpmath either
way.  Expect modest ratios (~2x on loop-heavy kernels, ~1x where a
single bignum multiply dominates), and treat anything below 1.0 as a
reason to ship the pure version only.

    python3 benchmarks/bench_kernels.py [--repeat N] [--size N]
"""

import argparse
import random
import time
from fractions import Fraction

from eigencert import _kernels_py
from eigencert.numerics import fast_int, float_backend

try:
    from eigencert import _kernels_cy
except ImportError:
    _kernels_cy = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def build_cases(size: int):
    rng = random.Random(12345)
    n = size

    signs = [rng.choice((-3, -1, 0, 1, 2)) for _ in range(20000)]

    horner_coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(120)]
    horner_x = Fraction(3, 7)

    monic = [Fraction(rng.randint(-5, 5)) for _ in range(n)] + [Fraction(1)]

    int_rows = [[fast_int(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]

    sums = _kernels_py.power_sums(monic, 2 * n - 2 + 2)
    hankel = [[sums[i + j] for j in range(n)] for i in range(n)]
    q = [Fraction(3), Fraction(-4), Fraction(1)]
    last_col = [-c for c in monic[:n]]

    sym = [[fast_int(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = fast_int(rng.randint(-10**20, 10**20))
            sym[i][j] = sym[j][i] = v

    fb = float_backend(256)
    frows = [[fb.convert(str(rng.randint(-50, 50))) for _ in range(n)] for _ in range(n)]
    fsym = [[(frows[i][j] + frows[j][i]) for j in range(n)] for i in range(n)]

    return [
        ("sign_variations", lambda k: k.sign_variations(signs)),
        ("horner_eval", lambda k: [k.horner_eval(horner_coeffs, horner_x) for _ in range(50)]),
        ("power_sums", lambda k: k.power_sums(monic, 4 * n)),
        ("fl_charpoly_int", lambda k: k.fl_charpoly_int(int_rows)),
        ("hermite_product", lambda k: k.hermite_product(hankel, q, last_col)),
        ("bareiss_inertia", lambda k: k.bareiss_inertia(sym)),
        ("ldl_inertia", lambda k: k.ldl_inertia(fsym)),
        ("mat_mul", lambda k: k.mat_mul(int_rows, int_rows)),
    ]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5, help="best-of repetitions")
    parser.add_argument("--size", type=int, default=20, help="matrix/polynomial size")
    args = parser.parse_args()

    if _kernels_cy is None:
        print("compiled kernels not available; showing pure-Python timings only")
    cases = build_cases(args.size)
    print(f"{'kernel':<18}{'pure-py (ms)':>14}{'compiled (ms)':>15}{'speedup':>9}")
    for name, runner in cases:
        t_py = best_of(lambda: runner(_kernels_py), args.repeat)
        if _kernels_cy is None:
            print(f"{name:<18}{t_py * 1e3:>14.3f}{'-':>15}{'-':>9}")
            continue
        t_cy = best_of(lambda: runner(_kernels_cy), args.repeat)
        ratio = t_py / t_cy if t_cy > 0 else float("inf")
        print(f"{name:<18}{t_py * 1e3:>14.3f}{t_cy * 1e3:>15.3f}{ratio:>8.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

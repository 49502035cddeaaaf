"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each row reports the best wall time over ``--repeat`` runs and checks that
both backends return identical results.
"""

import argparse
import random
import time

from overq import _pykernels

try:
    from overq import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases():
    rng = random.Random(20240101)
    small = [rng.randint(-9, 9) for _ in range(400)]
    small[0] = 1
    big = [rng.randint(-(2**70), 2**70) for _ in range(150)]
    big[0] = 1
    euler = _poch(300)
    yield "mul_trunc small n=400", lambda k: k.mul_trunc(small, small, 399)
    yield "mul_trunc 70-bit n=150", lambda k: k.mul_trunc(big, big, 149)
    yield "inv_trunc (1-q)(1-q^2)... n=300", lambda k: k.inv_trunc(euler, 300)
    yield "gap_counts nmax=50", lambda k: k.gap_counts(50)
    yield "congruence_counts nmax=50", lambda k: k.congruence_counts(50)
    yield "regular4_counts nmax=50", lambda k: k.regular4_counts(50)


def _poch(n):
    c = [1]
    for k in range(1, n + 1):
        c = _pykernels.mul_trunc(c, [1] + [0] * (k - 1) + [-1], n)
    return c


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'kernel':36} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in cases():
        tp, rp = best_of(lambda: fn(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:36} {tp:10.4f} {'-':>10} {'-':>8}")
            continue
        tc, rc = best_of(lambda: fn(_ckernels), args.repeat)
        assert list(rp) == list(rc), name
        print(f"{name:36} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
